#include "satn/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

namespace satn {

namespace {

void check_loop_bound(const Formula& f, int n) {
    if (n < 1) throw std::invalid_argument("loop bound must be at least 1");
    if (f.max_var() > n)
        throw std::invalid_argument("formula uses a variable above the loop bound");
}

// e_var applied to a literal on its own variable.
bool decide_value(const GeneralizedAssignment& a, const Literal& lit) {
    return a.sign_at(lit.var) != lit.negated;
}

}  // namespace

EvalResult eval_alg1(const GeneralizedAssignment& a, const Formula& f, int n) {
    check_loop_bound(f, n);
    EvalResult result;
    for (const Clause& clause : f.clauses) {
        for (std::size_t l = 0; l < clause.size(); ++l) {
            const Literal& lit = clause.literals[l];
            for (int p = 1; p < lit.var; ++p)
                result.trace.push(TraceStep::probe(p, lit.var));
            bool value = decide_value(a, lit);
            result.trace.push(TraceStep::decide(lit.var, value));
            if (value) break;  // clause satisfied, next clause
            if (l + 1 == clause.size()) {
                result.trace.push(TraceStep::ret(false));
                result.value = false;
                return result;
            }
        }
    }
    result.trace.push(TraceStep::ret(true));
    result.value = true;
    return result;
}

EvalResult algorithm2(const GeneralizedAssignment& a, const Formula& f, int n) {
    check_loop_bound(f, n);
    EvalResult result;
    for (int i = 1; i <= n; ++i) {
        result.trace.push(TraceStep::set_c());
        int c = 0;
        for (const Clause& clause : f.clauses) {
            for (const Literal& lit : clause.literals) {
                if (lit.var != i) {
                    result.trace.push(TraceStep::probe(i, lit.var));
                    continue;
                }
                result.trace.push(TraceStep::decide(i, decide_value(a, lit)));
                result.trace.push(TraceStep::inc_c());
                ++c;
                result.trace.push(TraceStep::check_c());
                if (c > 3) {
                    result.trace.push(TraceStep::ret(false));
                    result.value = false;
                    return result;
                }
            }
        }
    }
    result.trace.push(TraceStep::ret(true));
    result.value = true;
    return result;
}

EvalResult eval_aggressive(const GeneralizedAssignment& a, const Formula& f,
                           int n) {
    EvalResult first = eval_alg1(a, f, n);
    if (first.value) return first;
    EvalResult second = algorithm2(a, f, n);
    EvalResult result;
    result.value = second.value;
    result.trace = std::move(first.trace);
    result.trace.append(second.trace);
    return result;
}

EvalResult eval_composition(const AggressiveComposite& c, const Formula& f,
                            int n) {
    if (c.parts.empty())
        throw std::invalid_argument("composition needs at least one part");
    EvalResult result;
    // The rightmost factor runs first; a true value skips the rest.
    for (int i = c.size() - 1; i >= 0; --i) {
        EvalResult part = eval_aggressive(c.parts[i], f, n);
        result.trace.append(part.trace);
        result.value = part.value;
        if (part.value) return result;
    }
    return result;
}

int default_loop_bound(const Formula& f) {
    return std::max({f.declared_vars, f.max_var(), 1});
}

DecisionProcedure guard(DecisionProcedure decider, GeneralizedAssignment a) {
    return [decider = std::move(decider), a = std::move(a)](const Formula& f) {
        if (eval_aggressive(a, f, default_loop_bound(f)).value) return true;
        return decider(f);
    };
}

DecisionProcedure compose_with_algorithm(DecisionProcedure /*decider*/,
                                         DecisionProcedure algorithm) {
    return [algorithm = std::move(algorithm)](const Formula& f) {
        return algorithm(f);
    };
}

}  // namespace satn
