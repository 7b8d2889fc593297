#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "satn/evaluate.hpp"
#include "satn/solver.hpp"

using namespace satn;
using namespace satn::testing;

namespace {

Formula four_occurrence() {
    return Formula({Clause{{1, false}, {2, false}, {3, false}},
                    Clause{{1, false}, {2, true}, {3, true}},
                    Clause{{1, true}, {2, false}, {3, true}},
                    Clause{{1, true}, {2, true}, {3, false}}},
                   3);
}

std::vector<bool> truth_values(const GeneralizedAssignment& a, int n) {
    std::vector<bool> values;
    for (int v = 1; v <= n; ++v) values.push_back(a.sign_at(v));
    return values;
}

}  // namespace

TEST_CASE("eval_alg1 frozen trace on the first worked example") {
    EvalResult r = eval_alg1(example1_assignment(), eta1(), 4);
    CHECK_FALSE(r.value);
    Trace expected;
    expected.steps = {
        TraceStep::decide(1, false), TraceStep::probe(1, 2),
        TraceStep::decide(2, true),  // first clause satisfied
        TraceStep::decide(1, false), TraceStep::probe(1, 2),
        TraceStep::decide(2, false), TraceStep::probe(1, 3),
        TraceStep::probe(2, 3),      TraceStep::decide(3, false),
        TraceStep::ret(false),
    };
    CHECK(r.trace == expected);
}

TEST_CASE("eval_alg1 accepts when a clause head is already true") {
    EvalResult r = eval_alg1(GeneralizedAssignment::all_negative(), eta1(), 3);
    CHECK(r.value);
    Trace expected;
    expected.steps = {
        TraceStep::decide(1, true),
        TraceStep::decide(1, true),
        TraceStep::ret(true),
    };
    CHECK(r.trace == expected);
}

TEST_CASE("algorithm2 frozen trace on the second worked example") {
    EvalResult r = algorithm2(example1_assignment(), eta1(), 3);
    CHECK(r.value);
    Trace expected;
    expected.steps = {
        // i = 1
        TraceStep::set_c(),
        TraceStep::decide(1, false), TraceStep::inc_c(), TraceStep::check_c(),
        TraceStep::probe(1, 2), TraceStep::probe(1, 3),
        TraceStep::decide(1, false), TraceStep::inc_c(), TraceStep::check_c(),
        TraceStep::probe(1, 2), TraceStep::probe(1, 3),
        // i = 2
        TraceStep::set_c(),
        TraceStep::probe(2, 1),
        TraceStep::decide(2, true), TraceStep::inc_c(), TraceStep::check_c(),
        TraceStep::probe(2, 3),
        TraceStep::probe(2, 1),
        TraceStep::decide(2, false), TraceStep::inc_c(), TraceStep::check_c(),
        TraceStep::probe(2, 3),
        // i = 3
        TraceStep::set_c(),
        TraceStep::probe(3, 1), TraceStep::probe(3, 2),
        TraceStep::decide(3, true), TraceStep::inc_c(), TraceStep::check_c(),
        TraceStep::probe(3, 1), TraceStep::probe(3, 2),
        TraceStep::decide(3, false), TraceStep::inc_c(), TraceStep::check_c(),
        TraceStep::ret(true),
    };
    CHECK(r.trace == expected);
}

TEST_CASE("algorithm2 bails out on the fourth occurrence") {
    EvalResult r = algorithm2(GeneralizedAssignment::all_negative(),
                              four_occurrence(), 3);
    CHECK_FALSE(r.value);
    REQUIRE(!r.trace.steps.empty());
    CHECK(r.trace.steps.back() == TraceStep::ret(false));
    // the run stops inside i=1, right after the fourth CHECKC
    int checks = 0;
    for (const TraceStep& s : r.trace.steps)
        if (s.kind == TraceStep::Kind::CheckC) ++checks;
    CHECK(checks == 4);
    CHECK(r.trace.steps[r.trace.steps.size() - 2] == TraceStep::check_c());
}

TEST_CASE("eval_alg1 agrees with direct truth-table evaluation") {
    std::mt19937 rng(31);
    for (int i = 0; i < 200; ++i) {
        Formula f = random_formula(rng, 6, 8, 1, 4);
        GeneralizedAssignment a = random_assignment(rng);
        int n = default_loop_bound(f);
        EvalResult r = eval_alg1(a, f, n);
        CHECK(r.value == evaluate_under(f, truth_values(a, f.declared_vars)));
        CHECK(r.trace.steps.back() == TraceStep::ret(r.value));
    }
}

TEST_CASE("algorithm2 answers the occurrence bound, whatever the signs") {
    std::mt19937 rng(37);
    for (int i = 0; i < 200; ++i) {
        Formula f = random_formula(rng, 6, 10, 1, 3);
        GeneralizedAssignment a = random_assignment(rng);
        EvalResult r = algorithm2(a, f, default_loop_bound(f));
        CHECK(r.value == (f.max_occurrences() <= 3));
    }
}

TEST_CASE("eval_aggressive concatenates the two phases") {
    GeneralizedAssignment a = example1_assignment();
    EvalResult agg = eval_aggressive(a, eta1(), 3);
    CHECK(agg.value);  // phase one fails, occurrence check passes
    EvalResult p1 = eval_alg1(a, eta1(), 3);
    EvalResult p2 = algorithm2(a, eta1(), 3);
    Trace combined = p1.trace;
    combined.append(p2.trace);
    CHECK(agg.trace == combined);

    // phase one success keeps only the first trace
    EvalResult sat = eval_aggressive(GeneralizedAssignment::all_negative(),
                                     eta1(), 3);
    CHECK(sat.value);
    CHECK(sat.trace ==
          eval_alg1(GeneralizedAssignment::all_negative(), eta1(), 3).trace);
}

TEST_CASE("aggressive acceptance certifies satisfiability on normal input") {
    std::mt19937 rng(41);
    for (int i = 0; i < 200; ++i) {
        Formula f = random_normal_formula(rng, 6, 10);
        GeneralizedAssignment a = random_assignment(rng);
        EvalResult r = eval_aggressive(a, f, default_loop_bound(f));
        if (r.value) CHECK(brute_force_sat(f).satisfiable);
    }
}

TEST_CASE("eval_composition runs right to left and short-circuits") {
    GeneralizedAssignment hit = GeneralizedAssignment::all_negative();
    GeneralizedAssignment miss = example1_assignment();

    AggressiveComposite c({miss, hit});
    EvalResult r = eval_composition(c, eta1(), 3);
    CHECK(r.value);
    // the rightmost (accepting) part is the whole trace
    CHECK(r.trace == eval_aggressive(hit, eta1(), 3).trace);

    AggressiveComposite single({miss});
    CHECK(eval_composition(single, eta1(), 3).trace ==
          eval_aggressive(miss, eta1(), 3).trace);

    CHECK_THROWS_AS(eval_composition(AggressiveComposite{}, eta1(), 3),
                    std::invalid_argument);
}

TEST_CASE("decide steps are keyed by the produced value") {
    Formula pos({Clause{{1, false}}}, 1);
    Formula neg({Clause{{1, true}}}, 1);
    EvalResult a = eval_alg1(GeneralizedAssignment::all_negative(), pos, 1);
    EvalResult b = eval_alg1(GeneralizedAssignment::all_positive(), neg, 1);
    CHECK(a.trace == b.trace);
    CHECK(a.trace.steps.front() == TraceStep::decide(1, false));
}

TEST_CASE("evaluation is deterministic") {
    std::mt19937 rng(43);
    for (int i = 0; i < 50; ++i) {
        Formula f = random_formula(rng, 5, 6, 1, 3);
        GeneralizedAssignment a = random_assignment(rng);
        int n = default_loop_bound(f);
        CHECK(eval_aggressive(a, f, n).trace == eval_aggressive(a, f, n).trace);
    }
}

TEST_CASE("loop bound violations throw") {
    CHECK_THROWS_AS(eval_alg1(GeneralizedAssignment::all_negative(), eta1(), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_alg1(GeneralizedAssignment::all_negative(), eta1(), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(algorithm2(GeneralizedAssignment::all_negative(), eta1(), 2),
                    std::invalid_argument);
}

TEST_CASE("default_loop_bound covers declared and occurring variables") {
    CHECK(default_loop_bound(eta1()) == 3);
    CHECK(default_loop_bound(Formula({}, 5)) == 5);
    CHECK(default_loop_bound(Formula()) == 1);
    Formula wide({Clause{{7, false}}}, 2);
    CHECK(default_loop_bound(wide) == 7);
}

TEST_CASE("guard answers from the assignment first, the decider second") {
    DecisionProcedure yes = [](const Formula&) { return true; };
    DecisionProcedure no = [](const Formula&) { return false; };

    CHECK(guard(no, example1_assignment())(eta1()));

    Formula hard = four_occurrence();  // aggressive phase cannot accept
    CHECK_FALSE(guard(no, GeneralizedAssignment::all_negative())(hard));
    CHECK(guard(yes, GeneralizedAssignment::all_negative())(hard));
}

TEST_CASE("composing with a full algorithm absorbs the decider") {
    DecisionProcedure yes = [](const Formula&) { return true; };
    DecisionProcedure no = [](const Formula&) { return false; };
    CHECK(compose_with_algorithm(no, yes)(eta1()));
    CHECK_FALSE(compose_with_algorithm(yes, no)(eta1()));
}

TEST_CASE("trace text format") {
    EvalResult r = eval_alg1(example1_assignment(), eta1(), 4);
    CHECK(format_trace(r.trace) ==
          "DECIDE 1 F\nPROBE 1 2\nDECIDE 2 T\nDECIDE 1 F\nPROBE 1 2\n"
          "DECIDE 2 F\nPROBE 1 3\nPROBE 2 3\nDECIDE 3 F\nRET F\n");
    CHECK(format_step(TraceStep::set_c()) == "SETC");
    CHECK(format_step(TraceStep::inc_c()) == "INCC");
    CHECK(format_step(TraceStep::check_c()) == "CHECKC");
    CHECK(format_step(TraceStep::ret(true)) == "RET T");
}
