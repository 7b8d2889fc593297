#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "satn/classify.hpp"
#include "satn/normalize.hpp"
#include "satn/reduce.hpp"
#include "satn/solver.hpp"

using namespace satn;
using namespace satn::testing;

TEST_CASE("classify splits on the max occurrence count") {
    ClassLabel easy = classify(eta1());
    CHECK(easy.kind == ClassLabel::Kind::Easy);
    CHECK(easy.max_occurrence == 2);
    CHECK(easy.satisfiable_known());

    Formula four({Clause{{1, false}, {2, false}, {3, false}},
                  Clause{{1, false}, {2, true}, {3, true}},
                  Clause{{1, true}, {2, false}, {3, true}},
                  Clause{{1, true}, {2, true}, {3, false}}},
                 3);
    ClassLabel hard = classify(four);
    CHECK(hard.kind == ClassLabel::Kind::Hard4);
    CHECK(hard.max_occurrence == 4);
    CHECK_FALSE(hard.satisfiable_known());

    Formula five({Clause{{1, false}, {2, false}, {3, false}},
                  Clause{{1, false}, {2, true}, {4, false}},
                  Clause{{1, true}, {3, true}, {4, true}},
                  Clause{{1, false}, {2, false}, {4, true}},
                  Clause{{1, true}, {3, false}, {5, false}}},
                 5);
    CHECK(classify(five).kind == ClassLabel::Kind::OverBudget);
    CHECK(classify(five).max_occurrence == 5);
}

TEST_CASE("classify rejects non-normal input") {
    CHECK_THROWS_AS(classify(Formula({Clause{{1, false}, {2, false}}}, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        classify(Formula({Clause{{1, false}, {1, true}, {2, false}}}, 2)),
        std::invalid_argument);
}

TEST_CASE("the empty formula classifies as Easy with s=0") {
    ClassLabel label = classify(Formula({}, 3));
    CHECK(label.kind == ClassLabel::Kind::Easy);
    CHECK(label.max_occurrence == 0);
}

TEST_CASE("Easy instances really are satisfiable") {
    std::mt19937 rng(99);
    int checked = 0;
    while (checked < 100) {
        Formula f = random_normal_formula(rng, 8, 10);
        ClassLabel label = classify(f);
        if (label.kind != ClassLabel::Kind::Easy) continue;
        ++checked;
        CHECK(brute_force_sat(f).satisfiable);
    }
}

TEST_CASE("reduction never produces an OverBudget label") {
    std::mt19937 rng(100);
    for (int i = 0; i < 50; ++i) {
        Formula f = random_normal_formula(rng, 7, 18);
        auto [reduced, records] = reduce_to_34(f);
        ClassLabel label = classify(reduced);
        CHECK(label.kind != ClassLabel::Kind::OverBudget);
    }
}

TEST_CASE("label line shape") {
    CHECK(format_label(classify(eta1())) ==
          "CLASS kind=Easy s=2 satisfiable=yes");
    Formula four({Clause{{1, false}, {2, false}, {3, false}},
                  Clause{{1, false}, {2, true}, {3, true}},
                  Clause{{1, true}, {2, false}, {3, true}},
                  Clause{{1, true}, {2, true}, {3, false}}},
                 3);
    CHECK(format_label(classify(four)) ==
          "CLASS kind=Hard4 s=4 satisfiable=unknown");
}
