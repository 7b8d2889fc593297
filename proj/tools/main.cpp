#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "satn/cauchy.hpp"
#include "satn/classify.hpp"
#include "satn/equivalence.hpp"
#include "satn/evaluate.hpp"
#include "satn/metric.hpp"
#include "satn/normalize.hpp"
#include "satn/reduce.hpp"
#include "satn/solver.hpp"

namespace {

using namespace satn;

std::string read_all(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open input file: " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

Formula read_formula(const std::string& path) {
    return parse_dimacs(read_all(path));
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

void write_result(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_file(path, text);
}

// Operands like "1 -2 tail=pos; -1 2" name a composite; parts split on ';'.
AggressiveComposite parse_composite(const std::string& text,
                                    const std::string& tail) {
    std::vector<GeneralizedAssignment> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, ';'))
        parts.push_back(parse_assignment(part, tail));
    if (parts.empty()) parts.push_back(parse_assignment("", tail));
    return AggressiveComposite(std::move(parts));
}

SignRule rule_from_word(const std::string& word) {
    std::vector<bool> signs;
    for (char c : word) {
        if (c == '+') signs.push_back(true);
        else if (c == '-') signs.push_back(false);
        else throw std::runtime_error("rule word characters must be + or -");
    }
    if (signs.empty()) throw std::runtime_error("rule word must be nonempty");
    return [signs](int i) { return signs[(i - 1) % signs.size()]; };
}

Formula random_normal_formula(std::mt19937& rng, int num_vars,
                              int max_clauses) {
    std::uniform_int_distribution<int> num_clauses(1, max_clauses);
    std::uniform_int_distribution<int> pick(1, num_vars);
    std::uniform_int_distribution<int> coin(0, 1);
    Formula f;
    f.declared_vars = num_vars;
    int m = num_clauses(rng);
    for (int attempt = 0;
         attempt < m * 20 && static_cast<int>(f.clauses.size()) < m; ++attempt) {
        int v1 = pick(rng), v2 = pick(rng), v3 = pick(rng);
        while (v2 == v1) v2 = pick(rng);
        while (v3 == v1 || v3 == v2) v3 = pick(rng);
        Clause c{{v1, coin(rng) == 1}, {v2, coin(rng) == 1}, {v3, coin(rng) == 1}};
        bool duplicate = false;
        for (const Clause& kept : f.clauses)
            if (c.same_literal_multiset(kept)) {
                duplicate = true;
                break;
            }
        if (!duplicate) f.clauses.push_back(std::move(c));
    }
    return f;
}

int loop_bound(const Formula& f, int requested) {
    return requested > 0 ? requested : default_loop_bound(f);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3SAT normal-form toolkit"};
    app.require_subcommand(1);

    // normalize -------------------------------------------------------
    std::string nz_in, nz_out, nz_cert;
    auto* nz = app.add_subcommand("normalize",
                                  "Rewrite a width-<=3 CNF into normal width-3 form");
    nz->add_option("input", nz_in, "DIMACS file (default: stdin)");
    nz->add_option("-o,--output", nz_out, "output DIMACS file (default: stdout)");
    nz->add_option("--cert", nz_cert, "write transformation certificate lines");
    nz->callback([&] {
        auto [out, records] = normalize(read_formula(nz_in));
        write_result(nz_out, emit_dimacs(out));
        if (!nz_cert.empty()) {
            std::ostringstream cert;
            for (const auto& r : records) cert << format_record(r) << '\n';
            write_file(nz_cert, cert.str());
        }
    });

    // reduce34 --------------------------------------------------------
    std::string rd_in, rd_out, rd_cert;
    auto* rd = app.add_subcommand("reduce34",
                                  "Split over-budget variables down to 4 occurrences");
    rd->add_option("input", rd_in, "DIMACS file (default: stdin)");
    rd->add_option("-o,--output", rd_out, "output DIMACS file (default: stdout)");
    rd->add_option("--cert", rd_cert, "write split certificate lines");
    rd->callback([&] {
        auto [out, records] = reduce_to_34(read_formula(rd_in));
        write_result(rd_out, emit_dimacs(out));
        if (!rd_cert.empty()) {
            std::ostringstream cert;
            for (const auto& r : records) cert << format_record(r) << '\n';
            write_file(rd_cert, cert.str());
        }
    });

    // classify --------------------------------------------------------
    std::string cl_in;
    auto* cl = app.add_subcommand("classify",
                                  "Report the occurrence class of a normal formula");
    cl->add_option("input", cl_in, "DIMACS file (default: stdin)");
    cl->callback([&] {
        std::cout << format_label(classify(read_formula(cl_in))) << '\n';
    });

    // eval ------------------------------------------------------------
    std::string ev_in, ev_assign, ev_tail = "neg", ev_trace;
    int ev_n = 0;
    auto* ev = app.add_subcommand("eval", "Traced plain evaluation");
    ev->add_option("input", ev_in, "DIMACS file (default: stdin)");
    ev->add_option("--assign", ev_assign, "assignment prefix, e.g. \"1 -2 -3 4\"");
    ev->add_option("--tail", ev_tail, "tail: neg, pos or word:<+->");
    ev->add_option("--n", ev_n, "loop bound (default: variable count)");
    ev->add_option("--trace", ev_trace, "write the step trace to a file");
    ev->callback([&] {
        Formula f = read_formula(ev_in);
        EvalResult r = eval_alg1(parse_assignment(ev_assign, ev_tail), f,
                                 loop_bound(f, ev_n));
        std::cout << (r.value ? "true" : "false") << '\n';
        if (!ev_trace.empty()) write_file(ev_trace, format_trace(r.trace));
    });

    // aggressive ------------------------------------------------------
    std::string ag_in, ag_assign, ag_tail = "neg", ag_trace;
    int ag_n = 0;
    auto* ag = app.add_subcommand("aggressive",
                                  "Evaluation followed by the occurrence check");
    ag->add_option("input", ag_in, "DIMACS file (default: stdin)");
    ag->add_option("--assign", ag_assign, "assignment prefix");
    ag->add_option("--tail", ag_tail, "tail: neg, pos or word:<+->");
    ag->add_option("--n", ag_n, "loop bound (default: variable count)");
    ag->add_option("--trace", ag_trace, "write the step trace to a file");
    ag->callback([&] {
        Formula f = read_formula(ag_in);
        EvalResult r = eval_aggressive(parse_assignment(ag_assign, ag_tail), f,
                                       loop_bound(f, ag_n));
        std::cout << (r.value ? "true" : "false") << '\n';
        if (!ag_trace.empty()) write_file(ag_trace, format_trace(r.trace));
    });

    // compose ---------------------------------------------------------
    std::string co_in, co_assign, co_tail = "neg", co_trace;
    int co_n = 0;
    auto* co = app.add_subcommand("compose",
                                  "Evaluate a composition, rightmost part first");
    co->add_option("input", co_in, "DIMACS file (default: stdin)");
    co->add_option("--assign", co_assign,
                   "parts separated by ';', e.g. \"1 -2; -1\"");
    co->add_option("--tail", co_tail, "default tail for every part");
    co->add_option("--n", co_n, "loop bound (default: variable count)");
    co->add_option("--trace", co_trace, "write the step trace to a file");
    co->callback([&] {
        Formula f = read_formula(co_in);
        EvalResult r = eval_composition(parse_composite(co_assign, co_tail), f,
                                        loop_bound(f, co_n));
        std::cout << (r.value ? "true" : "false") << '\n';
        if (!co_trace.empty()) write_file(co_trace, format_trace(r.trace));
    });

    // distance --------------------------------------------------------
    std::string di_a, di_b, di_tail = "neg";
    auto* di = app.add_subcommand("distance",
                                  "Exact distance between assignment operands");
    auto* di_a_opt = di->add_option("--a", di_a, "left operand (absent = empty)");
    auto* di_b_opt = di->add_option("--b", di_b, "right operand (absent = empty)");
    di->add_option("--tail", di_tail, "default tail for every part");
    di->callback([&] {
        std::optional<AggressiveComposite> a, b;
        if (di_a_opt->count() > 0) a = parse_composite(di_a, di_tail);
        if (di_b_opt->count() > 0) b = parse_composite(di_b, di_tail);
        std::cout << format_rational(distance_algorithms(a, b)) << '\n';
    });

    // equiv -----------------------------------------------------------
    std::string eq_a, eq_b, eq_tail = "neg";
    int eq_samples = 50, eq_vars = 5;
    unsigned eq_seed = 0;
    auto* eq = app.add_subcommand("equiv",
                                  "Sign-flip equivalence of assignments or composites");
    eq->add_option("--a", eq_a, "left operand")->required();
    eq->add_option("--b", eq_b, "right operand")->required();
    eq->add_option("--tail", eq_tail, "default tail for every part");
    eq->add_option("--samples", eq_samples, "sample formulas for the trace check");
    eq->add_option("--vars", eq_vars, "variables per sample formula");
    eq->add_option("--seed", eq_seed, "sample corpus seed");
    eq->callback([&] {
        AggressiveComposite a = parse_composite(eq_a, eq_tail);
        AggressiveComposite b = parse_composite(eq_b, eq_tail);
        if (a.size() > 1 || b.size() > 1) {
            std::cout << (check_equivalent_composite(a, b) ? "equivalent"
                                                           : "not-equivalent")
                      << '\n';
            return;
        }
        std::mt19937 rng(eq_seed);
        std::vector<Formula> samples;
        for (int i = 0; i < eq_samples; ++i)
            samples.push_back(random_normal_formula(rng, eq_vars, 10));
        Ta1EquivalenceResult r =
            check_equivalent_ta1(a.parts[0], b.parts[0], samples, eq_vars);
        std::cout << format_pi(r.pi) << '\n'
                  << (r.traces_match ? "traces=match" : "traces=mismatch")
                  << '\n';
    });

    // solve2sat -------------------------------------------------------
    std::string ts_in, ts_assign, ts_tail = "neg";
    int ts_n = 0;
    auto* ts = app.add_subcommand("solve2sat", "Implication-graph 2SAT decision");
    ts->add_option("input", ts_in, "DIMACS file (default: stdin)");
    auto* ts_assign_opt =
        ts->add_option("--assign", ts_assign,
                       "run the assignment first and print true/false");
    ts->add_option("--tail", ts_tail, "tail for --assign");
    ts->add_option("--n", ts_n, "loop bound for --assign");
    ts->callback([&] {
        Formula f = read_formula(ts_in);
        if (ts_assign_opt->count() > 0) {
            bool value = aggressive_2sat(parse_assignment(ts_assign, ts_tail), f,
                                         loop_bound(f, ts_n));
            std::cout << (value ? "true" : "false") << '\n';
            return;
        }
        std::cout << format_verdict(solve_2sat(f)) << '\n';
    });

    // brute -----------------------------------------------------------
    std::string br_in;
    auto* br = app.add_subcommand("brute", "Exhaustive oracle (max 25 variables)");
    br->add_option("input", br_in, "DIMACS file (default: stdin)");
    br->callback([&] {
        std::cout << format_verdict(brute_force_sat(read_formula(br_in))) << '\n';
    });

    // cauchy ----------------------------------------------------------
    std::string ca_assign, ca_tail = "neg", ca_rule = "-";
    int ca_steps = 10;
    auto* ca = app.add_subcommand("cauchy",
                                  "Convergence table for a regular sequence");
    ca->add_option("--assign", ca_assign, "base assignment a0");
    ca->add_option("--tail", ca_tail, "tail for the base assignment");
    ca->add_option("--rule", ca_rule, "sign rule word over +/-, cycled");
    ca->add_option("--steps", ca_steps, "number of table rows");
    ca->callback([&] {
        RegularCauchySeq seq = regular_cauchy(
            parse_assignment(ca_assign, ca_tail), rule_from_word(ca_rule));
        std::cout << "n\tdistance\tbound\n";
        for (int n = 1; n <= ca_steps; ++n)
            std::cout << n << '\t' << format_rational(seq_step_distance(seq, n))
                      << '\t' << format_rational(cauchy_step_bound(n)) << '\n';
    });

    // diagonal --------------------------------------------------------
    std::string dg_assign, dg_tail = "neg";
    int dg_count = 5;
    unsigned dg_seed = 0;
    auto* dg = app.add_subcommand("diagonal",
                                  "Diagonalize against seeded regular sequences");
    dg->add_option("--assign", dg_assign, "shared base assignment a0");
    dg->add_option("--tail", dg_tail, "tail for the base assignment");
    dg->add_option("--count", dg_count, "number of listed sequences");
    dg->add_option("--seed", dg_seed, "rule seed");
    dg->callback([&] {
        GeneralizedAssignment a0 = parse_assignment(dg_assign, dg_tail);
        std::mt19937 rng(dg_seed);
        std::vector<RegularCauchySeq> listed;
        for (int j = 0; j < dg_count; ++j) {
            std::vector<bool> signs;
            for (int i = 0; i < 16; ++i) signs.push_back(rng() & 1);
            listed.push_back(regular_cauchy(
                a0, [signs](int i) { return signs[(i - 1) % 16]; }));
        }
        RegularCauchySeq diag = diagonalize(listed);
        for (int j = 1; j <= dg_count; ++j) {
            bool separated = !check_equivalent_composite(
                diag.element(j), listed[j - 1].element(j));
            std::cout << j << '\t' << format_assignment(diag.term(j)) << '\t'
                      << (separated ? "nonequivalent" : "equivalent") << '\n';
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
