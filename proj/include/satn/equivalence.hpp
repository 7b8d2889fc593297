#ifndef SATN_EQUIVALENCE_HPP
#define SATN_EQUIVALENCE_HPP

#include <string>
#include <vector>

#include "satn/assignment.hpp"
#include "satn/formula.hpp"

namespace satn {

// Variable sign-flip involution, stored as a generalized-assignment
// shaped sign structure: positive = keep, negative = flip. Applying the
// map twice is the identity.
struct PiMap {
    GeneralizedAssignment flips;

    bool flips_var(int i) const { return !flips.sign_at(i); }
    bool is_identity() const;
    bool same_map(const PiMap& other) const;
};

std::string format_pi(const PiMap& p);

// The unique map making a and b equivalent: flip at i exactly where the
// two sign sequences disagree.
PiMap derive_pi(const GeneralizedAssignment& a, const GeneralizedAssignment& b);

// Flip literal polarities on the flipped variables; clause and literal
// order unchanged. An involution, and class-preserving.
Formula apply_pi(const PiMap& p, const Formula& f);

struct Ta1EquivalenceResult {
    PiMap pi;
    bool traces_match = false;
};

// Derive pi and verify trace equality (plain evaluation and occurrence
// check both) over the sample formulas.
Ta1EquivalenceResult check_equivalent_ta1(const GeneralizedAssignment& a,
                                          const GeneralizedAssignment& b,
                                          const std::vector<Formula>& samples,
                                          int n);

// Composites of equal length are equivalent iff every componentwise
// derived map is the same map. Throws std::invalid_argument on a length
// mismatch.
bool check_equivalent_composite(const AggressiveComposite& c1,
                                const AggressiveComposite& c2);

}  // namespace satn

#endif  // SATN_EQUIVALENCE_HPP
