#ifndef SATN_TEST_HELPERS_HPP
#define SATN_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "satn/assignment.hpp"
#include "satn/formula.hpp"
#include "satn/reduce.hpp"

namespace satn::testing {

// Example 1 fixtures.
inline Formula eta1() {
    return Formula({Clause{{1, true}, {2, true}, {3, true}},
                    Clause{{1, true}, {2, false}, {3, false}}},
                   3);
}

inline Formula eta2() {
    return Formula({Clause{{1, false}, {3, false}},
                    Clause{{1, true}, {3, true}}},
                   3);
}

// The Example-1 signs: x1* -x2* -x3* x4*.
inline GeneralizedAssignment example1_assignment() {
    return GeneralizedAssignment::negative_extension(
        {true, false, false, true});
}

// Random formula with clause widths in [min_width, max_width].
inline Formula random_formula(std::mt19937& rng, int max_vars, int max_clauses,
                              int min_width, int max_width) {
    std::uniform_int_distribution<int> num_clauses(1, max_clauses);
    std::uniform_int_distribution<int> width(min_width, max_width);
    std::uniform_int_distribution<int> var(1, max_vars);
    std::uniform_int_distribution<int> coin(0, 1);
    Formula f;
    f.declared_vars = max_vars;
    int m = num_clauses(rng);
    for (int k = 0; k < m; ++k) {
        Clause c;
        int w = width(rng);
        for (int l = 0; l < w; ++l)
            c.literals.emplace_back(var(rng), coin(rng) == 1);
        f.clauses.push_back(std::move(c));
    }
    return f;
}

// Random width-<=3 formula exercising the whole reduction pipeline:
// mostly full three-variable clauses plus tautologies, duplicates and a
// bounded number of narrow/repeated-variable clauses. The bound keeps
// the normalized output inside the brute-force oracle's variable cap
// (each narrow clause costs at most six fresh variables).
inline Formula random_mixed_3sat(std::mt19937& rng, int max_vars,
                                 int max_clauses, int max_degenerate = 2) {
    std::uniform_int_distribution<int> num_clauses(1, max_clauses);
    std::uniform_int_distribution<int> var(1, max_vars);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> kind(0, 9);
    Formula f;
    f.declared_vars = max_vars;
    int m = num_clauses(rng);
    int degenerate_left = max_degenerate;
    for (int k = 0; k < m; ++k) {
        int choice = kind(rng);
        if (choice == 0 && !f.clauses.empty()) {
            // duplicate of an earlier clause
            std::uniform_int_distribution<int> pick(
                0, static_cast<int>(f.clauses.size()) - 1);
            f.clauses.push_back(f.clauses[pick(rng)]);
            continue;
        }
        if (choice == 1) {
            // tautological clause: removed by the pipeline, no fresh vars
            int v = var(rng);
            f.clauses.push_back(Clause{{v, false}, {v, true}, {var(rng), false}});
            continue;
        }
        if (choice <= 3 && degenerate_left > 0) {
            --degenerate_left;
            int shape = coin(rng) * 2 + coin(rng);
            int v1 = var(rng);
            int v2 = var(rng);
            while (v2 == v1) v2 = var(rng);
            switch (shape) {
                case 0: f.clauses.push_back(Clause{{v1, coin(rng) == 1}}); break;
                case 1:
                    f.clauses.push_back(
                        Clause{{v1, coin(rng) == 1}, {v2, coin(rng) == 1}});
                    break;
                default: {
                    bool neg = coin(rng) == 1;  // same sign twice: stripped
                    f.clauses.push_back(
                        Clause{{v1, neg}, {v1, neg}, {v2, coin(rng) == 1}});
                    break;
                }
            }
            continue;
        }
        // full width-3 clause over distinct variables
        int v1 = var(rng), v2 = var(rng), v3 = var(rng);
        while (v2 == v1) v2 = var(rng);
        while (v3 == v1 || v3 == v2) v3 = var(rng);
        f.clauses.push_back(Clause{{v1, coin(rng) == 1},
                                   {v2, coin(rng) == 1},
                                   {v3, coin(rng) == 1}});
    }
    return f;
}

// Random normal width-3 formula: full, distinct, non-tautological clauses.
inline Formula random_normal_formula(std::mt19937& rng, int num_vars,
                                     int max_clauses) {
    std::uniform_int_distribution<int> num_clauses(1, max_clauses);
    std::uniform_int_distribution<int> coin(0, 1);
    Formula f;
    f.declared_vars = num_vars;
    int m = num_clauses(rng);
    for (int attempt = 0; attempt < m * 20 && static_cast<int>(f.clauses.size()) < m;
         ++attempt) {
        std::vector<int> vars(num_vars);
        for (int i = 0; i < num_vars; ++i) vars[i] = i + 1;
        std::shuffle(vars.begin(), vars.end(), rng);
        Clause c{{vars[0], coin(rng) == 1},
                 {vars[1], coin(rng) == 1},
                 {vars[2], coin(rng) == 1}};
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

// Random generalized assignment with a short prefix and a short tail word.
inline GeneralizedAssignment random_assignment(std::mt19937& rng,
                                               int max_prefix = 6,
                                               int max_period = 3) {
    std::uniform_int_distribution<int> len(0, max_prefix);
    std::uniform_int_distribution<int> period(1, max_period);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<bool> prefix, tail;
    int l = len(rng);
    for (int i = 0; i < l; ++i) prefix.push_back(coin(rng) == 1);
    int p = period(rng);
    for (int i = 0; i < p; ++i) tail.push_back(coin(rng) == 1);
    return GeneralizedAssignment(std::move(prefix), std::move(tail));
}

// Variable count of the gadget-stripped reduction output: split
// variables are replaced by one fresh variable per occurrence, the rest
// survive unchanged. Used to keep oracle cross-checks inside the
// 25-variable enumeration guard.
inline int predicted_oracle_vars(const Formula& f) {
    int total = 0;
    int bound = std::max(f.declared_vars, f.max_var());
    for (int v = 1; v <= bound; ++v) {
        int occ = f.occurrences(v);
        if (occ > 4) total += occ;
        else if (occ > 0) total += 1;
    }
    return total;
}

// Split outputs carry 8k fresh variables per split, far past the
// enumeration guard. The nine-clause gadgets force every link variable
// true (verified exhaustively against all 2^7 assignments), so for the
// oracle cross-check we may drop the gadget clauses, substitute the
// link variables as true and enumerate what remains.
inline Formula strip_split_gadgets(const Formula& out, const Formula& input,
                                   const std::vector<SplitRecord>& records) {
    std::set<int> known, links;
    for (int v = 1; v <= std::max(input.declared_vars, input.max_var()); ++v)
        known.insert(v);
    for (const SplitRecord& r : records) {
        for (int v : r.replacement_vars) known.insert(v);
        for (int v : r.link_vars) {
            known.insert(v);
            links.insert(v);
        }
    }
    Formula stripped;
    for (const Clause& c : out.clauses) {
        bool gadget = false;
        for (const Literal& lit : c.literals)
            if (!known.count(lit.var)) gadget = true;
        if (gadget) continue;
        Clause reduced;
        bool satisfied = false;
        for (const Literal& lit : c.literals) {
            if (!links.count(lit.var)) {
                reduced.literals.push_back(lit);
            } else if (!lit.negated) {
                satisfied = true;  // positive link literal: clause is true
            }  // negative link literal drops out
        }
        if (satisfied) continue;
        stripped.clauses.push_back(std::move(reduced));
    }
    stripped.declared_vars = stripped.max_var();
    return compact_variables(stripped).first;
}

}  // namespace satn::testing

#endif  // SATN_TEST_HELPERS_HPP
