#include "satn/equivalence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "satn/evaluate.hpp"

namespace satn {

bool PiMap::is_identity() const {
    return flips.same_sequence(GeneralizedAssignment::all_positive());
}

bool PiMap::same_map(const PiMap& other) const {
    return flips.same_sequence(other.flips);
}

std::string format_pi(const PiMap& p) {
    std::ostringstream os;
    os << "PI flips=";
    bool any = false;
    for (int i = 1; i <= p.flips.prefix_length(); ++i) {
        if (!p.flips_var(i)) continue;
        if (any) os << ',';
        os << i;
        any = true;
    }
    if (!any) os << "none";
    os << " tail=";
    if (p.flips.period() == 1) {
        os << (p.flips.tail()[0] ? "keep" : "flip");
    } else {
        os << "word:";
        for (bool s : p.flips.tail()) os << (s ? 'k' : 'f');
    }
    return os.str();
}

PiMap derive_pi(const GeneralizedAssignment& a,
                const GeneralizedAssignment& b) {
    int len = std::max(a.prefix_length(), b.prefix_length());
    int period = combined_period(a, b);
    std::vector<bool> prefix, tail;
    for (int i = 1; i <= len; ++i)
        prefix.push_back(a.sign_at(i) == b.sign_at(i));
    for (int i = len + 1; i <= len + period; ++i)
        tail.push_back(a.sign_at(i) == b.sign_at(i));
    return PiMap{GeneralizedAssignment(std::move(prefix), std::move(tail))};
}

Formula apply_pi(const PiMap& p, const Formula& f) {
    Formula out;
    out.declared_vars = f.declared_vars;
    for (const Clause& c : f.clauses) {
        Clause nc;
        for (const Literal& lit : c.literals)
            nc.literals.emplace_back(lit.var,
                                     p.flips_var(lit.var) ? !lit.negated
                                                          : lit.negated);
        out.clauses.push_back(std::move(nc));
    }
    return out;
}

Ta1EquivalenceResult check_equivalent_ta1(const GeneralizedAssignment& a,
                                          const GeneralizedAssignment& b,
                                          const std::vector<Formula>& samples,
                                          int n) {
    Ta1EquivalenceResult result;
    result.pi = derive_pi(a, b);
    result.traces_match = true;
    for (const Formula& f : samples) {
        Formula mapped = apply_pi(result.pi, f);
        if (eval_alg1(a, f, n).trace != eval_alg1(b, mapped, n).trace ||
            algorithm2(a, f, n).trace != algorithm2(b, mapped, n).trace) {
            result.traces_match = false;
            break;
        }
    }
    return result;
}

bool check_equivalent_composite(const AggressiveComposite& c1,
                                const AggressiveComposite& c2) {
    if (c1.size() != c2.size())
        throw std::invalid_argument("composite lengths differ");
    if (c1.parts.empty())
        throw std::invalid_argument("composites must be nonempty");
    PiMap common = derive_pi(c1.parts[0], c2.parts[0]);
    for (int i = 1; i < c1.size(); ++i)
        if (!common.same_map(derive_pi(c1.parts[i], c2.parts[i])))
            return false;
    return true;
}

}  // namespace satn
