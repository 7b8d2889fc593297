#ifndef SATN_EVALUATE_HPP
#define SATN_EVALUATE_HPP

#include <functional>

#include "satn/assignment.hpp"
#include "satn/formula.hpp"
#include "satn/trace.hpp"

namespace satn {

struct EvalResult {
    bool value = false;
    Trace trace;
};

// Plain traced evaluation: for each literal the inner loop probes
// assignment indices 1..var-1, decides at the literal's own variable,
// and the clause/formula control flow follows CNF semantics. Requires
// n >= 1 and every variable of f at most n.
EvalResult eval_alg1(const GeneralizedAssignment& a, const Formula& f, int n);

// Traced occurrence check: true iff every variable index in 1..n has at
// most 3 occurrences among all literal positions of f.
EvalResult algorithm2(const GeneralizedAssignment& a, const Formula& f, int n);

// Aggressive evaluation: eval_alg1 first; a false value falls through to
// the occurrence check. A true result certifies satisfiability.
EvalResult eval_aggressive(const GeneralizedAssignment& a, const Formula& f,
                           int n);

// Composition (a_1)...(a_k), evaluated right to left with short-circuit
// on the first true part. The trace covers executed parts only.
EvalResult eval_composition(const AggressiveComposite& c, const Formula& f,
                            int n);

using DecisionProcedure = std::function<bool(const Formula&)>;

// Loop bound used when a procedure must pick n itself.
int default_loop_bound(const Formula& f);

// f_xi a: answer true when the aggressive evaluation of `a` accepts,
// otherwise defer to the decider.
DecisionProcedure guard(DecisionProcedure decider, GeneralizedAssignment a);

// Composing with a full algorithm absorbs: the result answers exactly
// as the algorithm does.
DecisionProcedure compose_with_algorithm(DecisionProcedure decider,
                                         DecisionProcedure algorithm);

}  // namespace satn

#endif  // SATN_EVALUATE_HPP
