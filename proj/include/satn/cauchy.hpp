#ifndef SATN_CAUCHY_HPP
#define SATN_CAUCHY_HPP

#include <functional>
#include <vector>

#include "satn/assignment.hpp"
#include "satn/evaluate.hpp"
#include "satn/metric.hpp"

namespace satn {

// Sign choice for the fresh prefix position of each term; the default
// picks negative everywhere.
using SignRule = std::function<bool(int)>;

// Sequence f_n = f a0 a_n where a_n is the negative extension of a
// length-(n+1) prefix and consecutive terms agree on the first n signs.
class RegularCauchySeq {
public:
    using TermFn = std::function<GeneralizedAssignment(int)>;

    RegularCauchySeq(GeneralizedAssignment a0, TermFn term_fn);

    const GeneralizedAssignment& base() const { return a0_; }
    // n >= 1.
    GeneralizedAssignment term(int n) const;
    // The composite (a0)(a_n) the metric sees.
    AggressiveComposite element(int n) const;

private:
    GeneralizedAssignment a0_;
    TermFn term_fn_;
};

// Term n carries signs rule(1)..rule(n+1) then the negative tail.
RegularCauchySeq regular_cauchy(GeneralizedAssignment a0,
                                SignRule rule = nullptr);

// d(f_n, f_{n+1}): the shared a0 contributes nothing, the varying terms
// carry weight 1/4.
Rational seq_step_distance(const RegularCauchySeq& seq, int n);

// (6n+8)/(9*4^(n+1)), the closed-form tail bound on consecutive steps.
Rational cauchy_step_bound(int n);

// Dispatch by variable bound: an input over n >= 3 variables goes to
// the procedure f a0 a_{n-2}.
DecisionProcedure characteristic_rep(DecisionProcedure base,
                                     RegularCauchySeq seq);

// Sequence whose k-th term negates the k-th listed sequence's k-th
// diagonal sign, making it non-equivalent to every listed sequence.
RegularCauchySeq diagonalize(std::vector<RegularCauchySeq> listed);

}  // namespace satn

#endif  // SATN_CAUCHY_HPP
