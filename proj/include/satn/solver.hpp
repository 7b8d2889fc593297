#ifndef SATN_SOLVER_HPP
#define SATN_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "satn/assignment.hpp"
#include "satn/formula.hpp"

namespace satn {

struct Verdict {
    bool satisfiable = false;
    // Total sign list over declared variables; index 0 is variable 1.
    std::optional<std::vector<bool>> witness;
};

// `SAT 1 -2 3 ...` or `UNSAT`.
std::string format_verdict(const Verdict& v);

// Direct truth evaluation under a total assignment.
bool evaluate_under(const Formula& f, const std::vector<bool>& values);

// Exhaustive oracle: enumerates all 2^n assignments in lexicographic
// order (false before true, variable 1 most significant) and returns
// the first model. Refuses more than 25 declared variables.
Verdict brute_force_sat(const Formula& f);

// 2n literal nodes; a binary clause (l1 v l2) contributes the edges
// -l1 -> l2 and -l2 -> l1. scc_ids are in reverse topological order of
// the condensation.
struct ImplicationGraph {
    int var_count = 0;
    std::vector<std::vector<int>> edges;  // node -> successors
    std::vector<int> scc_ids;

    static int node(int var, bool negated) {
        return 2 * (var - 1) + (negated ? 1 : 0);
    }
};

// Unit clauses count as (l v l). Throws on a clause wider than 2.
ImplicationGraph build_implication_graph(const Formula& f);

// Aspvall-Plass-Tarjan: unsatisfiable iff some variable shares a
// strongly connected component with its negation; otherwise the witness
// reads each variable off the component order.
Verdict solve_2sat(const Formula& f);

// Step (1) evaluates the assignment; step (2) runs the 2SAT decision.
// True exactly when the instance is satisfiable.
bool aggressive_2sat(const GeneralizedAssignment& a, const Formula& f, int n);

}  // namespace satn

#endif  // SATN_SOLVER_HPP
