#ifndef SATN_REDUCE_HPP
#define SATN_REDUCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "satn/formula.hpp"
#include "satn/normalize.hpp"

namespace satn {

struct SplitRecord {
    int split_var = 0;
    int occurrence_count = 0;              // k
    std::vector<int> replacement_vars;     // the k new x_i
    std::vector<int> link_vars;            // the k y_i, each forced true
    int added_clauses = 0;                 // k link clauses + 9k gadget clauses
};

// Certificate line: `SPLIT var=<v> k=<k> reps=<list> links=<list>`.
std::string format_record(const SplitRecord& r);

// Lowest-indexed variable with more than 4 occurrences, if any.
std::optional<int> needs_reduction(const Formula& f);

// Replace the k > 4 occurrences of v with fresh variables chained by
// cyclic link clauses, each link variable forced true by a nine-clause
// gadget. Equisatisfiable; preserves normalness.
std::pair<Formula, SplitRecord> split_variable(const Formula& f, int v,
                                               FreshVarAllocator& alloc);

// Repeat splits until every variable occurs at most 4 times. Input must
// be a normal width-3 formula; throws std::invalid_argument otherwise.
std::pair<Formula, std::vector<SplitRecord>> reduce_to_34(const Formula& f);

}  // namespace satn

#endif  // SATN_REDUCE_HPP
