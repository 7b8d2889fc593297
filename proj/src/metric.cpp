#include "satn/metric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace satn {

Rational pow2(int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    return Rational(BigInt(1) << exponent);
}

Rational atomic_distance(const std::optional<AtomicAssignment>& e1,
                         const std::optional<AtomicAssignment>& e2) {
    if (!e1 && !e2)
        throw std::invalid_argument("atomic_distance: both parameters empty");
    if (!e1 || !e2) {
        int i = e1 ? e1->var : e2->var;
        return Rational(i) / pow2(i + 2);
    }
    int i = e1->var, j = e2->var;
    if (e1->positive != e2->positive) return Rational(i + j) / pow2(i + j + 2);
    return Rational(std::abs(i - j)) / pow2(i + j + 2);
}

namespace {

// sum_{t>=0} (k0 + t*P) * (1/4)^(k0 + t*P), halved: the exact tail of
// the disagreement series over one residue class of the periodic part.
Rational progression_sum(int k0, int period) {
    Rational x_k0 = Rational(1) / pow2(2 * k0);
    Rational y = Rational(1) / pow2(2 * period);
    Rational one_minus = Rational(1) - y;
    Rational sum = Rational(k0) / one_minus + Rational(period) * y / (one_minus * one_minus);
    return Rational(1, 2) * x_k0 * sum;
}

}  // namespace

Rational distance_ta1(const GeneralizedAssignment& a,
                      const GeneralizedAssignment& b) {
    int len = std::max(a.prefix_length(), b.prefix_length());
    int period = combined_period(a, b);
    Rational total = 0;
    for (int k = 1; k <= len; ++k)
        if (a.sign_at(k) != b.sign_at(k)) total += Rational(k) / pow2(2 * k + 1);
    for (int r = 0; r < period; ++r) {
        int k0 = len + 1 + r;
        if (a.sign_at(k0) != b.sign_at(k0)) total += progression_sum(k0, period);
    }
    return total;
}

Rational distance_empty_ta1(const GeneralizedAssignment&) {
    // sum_{k>=1} k/2^(k+2) = 1/2, independent of the assignment.
    return Rational(1, 2);
}

namespace {

Rational composite_distance_impl(
    const std::vector<GeneralizedAssignment>& longer,
    const std::vector<GeneralizedAssignment>& shorter) {
    Rational total = 0;
    for (std::size_t i = 0; i < shorter.size(); ++i) {
        Rational weight = Rational(1, BigInt(i + 1) * BigInt(i + 1));
        total += weight * distance_ta1(longer[i], shorter[i]);
    }
    for (std::size_t i = shorter.size(); i < longer.size(); ++i) {
        Rational weight = Rational(1, BigInt(i + 1) * BigInt(i + 1));
        total += weight * distance_empty_ta1(longer[i]);
    }
    return total;
}

}  // namespace

Rational distance_composite(const AggressiveComposite& c1,
                            const AggressiveComposite& c2) {
    if (c1.parts.empty() || c2.parts.empty())
        throw std::invalid_argument("composites must be nonempty");
    if (c1.size() >= c2.size())
        return composite_distance_impl(c1.parts, c2.parts);
    return composite_distance_impl(c2.parts, c1.parts);
}

Rational distance_algorithms(const std::optional<AggressiveComposite>& c1,
                             const std::optional<AggressiveComposite>& c2) {
    static const std::vector<GeneralizedAssignment> kEmpty;
    const auto& p1 = c1 ? c1->parts : kEmpty;
    const auto& p2 = c2 ? c2->parts : kEmpty;
    if (p1.size() >= p2.size()) return composite_distance_impl(p1, p2);
    return composite_distance_impl(p2, p1);
}

Rational tail_sum_flip(int start) {
    if (start < 1) throw std::invalid_argument("tail start must be >= 1");
    return Rational(2 * (3 * start + 1)) / (Rational(9) * pow2(2 * start));
}

Rational tail_sum_empty(int start) {
    if (start < 1) throw std::invalid_argument("tail start must be >= 1");
    return Rational(start + 1) / pow2(start + 1);
}

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

}  // namespace satn
