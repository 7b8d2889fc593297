#ifndef SATN_METRIC_HPP
#define SATN_METRIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>

#include "satn/assignment.hpp"

namespace satn {

// All distances are exact; infinite sums are folded through closed
// forms over the periodic disagreement pattern.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

Rational pow2(int exponent);  // exponent >= 0

// Distance between two atomic assignments at indices i and j:
// (i+j)/2^(i+j+2) for opposite signs, |i-j|/2^(i+j+2) for equal signs.
// An empty slot at index i contributes i/2^(i+2). Both empty is an error.
Rational atomic_distance(const std::optional<AtomicAssignment>& e1,
                         const std::optional<AtomicAssignment>& e2);

// Sum over all positions of the per-index atomic distance; the only
// nonzero terms sit where the sign sequences disagree.
Rational distance_ta1(const GeneralizedAssignment& a,
                      const GeneralizedAssignment& b);

// Distance to the empty parameter: the constant 1/2 for every
// generalized assignment.
Rational distance_empty_ta1(const GeneralizedAssignment& a);

// Composite distance with weights 1/i^2; surplus parts of the longer
// composite pair against the empty parameter.
Rational distance_composite(const AggressiveComposite& c1,
                            const AggressiveComposite& c2);

// Distance between two elements of the same generated family: 0 when
// both are the bare generator, otherwise the composite distance with an
// absent suffix treated as length zero.
Rational distance_algorithms(const std::optional<AggressiveComposite>& c1,
                             const std::optional<AggressiveComposite>& c2);

// Procedures from different families sit at the constant distance 1.
inline Rational cross_family_distance() { return Rational(1); }

// Closed-form tails, exposed so the series identities are checkable
// against partial sums.
// sum_{k>=K} k/2^(2k+1) = 2(3K+1)/(9*4^K)
Rational tail_sum_flip(int start);
// sum_{k>=K} k/2^(k+2) = (K+1)/2^(K+1)
Rational tail_sum_empty(int start);

std::string format_rational(const Rational& r);  // "p/q" (or "p" for integers)

}  // namespace satn

#endif  // SATN_METRIC_HPP
