#ifndef SATN_ASSIGNMENT_HPP
#define SATN_ASSIGNMENT_HPP

#include <string>
#include <vector>

namespace satn {

// x_i* (positive) or -x_i* (negative).
struct AtomicAssignment {
    int var = 1;
    bool positive = true;

    AtomicAssignment negation() const { return {var, !positive}; }
    bool operator==(const AtomicAssignment&) const = default;
};

// An infinite sign sequence e_1 e_2 ... given by finite information:
// an explicit prefix plus a repeating tail word. sign(i) = true means
// the i-th atomic assignment is x_i*. The default tail is the negative
// extension.
class GeneralizedAssignment {
public:
    GeneralizedAssignment() : tail_{false} {}
    GeneralizedAssignment(std::vector<bool> prefix, std::vector<bool> tail);

    static GeneralizedAssignment negative_extension(std::vector<bool> prefix);
    static GeneralizedAssignment all_positive();
    static GeneralizedAssignment all_negative();

    bool sign_at(int i) const;  // 1-based
    AtomicAssignment atomic_at(int i) const { return {i, sign_at(i)}; }

    int prefix_length() const { return static_cast<int>(prefix_.size()); }
    int period() const { return static_cast<int>(tail_.size()); }
    const std::vector<bool>& prefix() const { return prefix_; }
    const std::vector<bool>& tail() const { return tail_; }

    // Equality of the infinite sequences, independent of how the
    // prefix/tail split is chosen.
    bool same_sequence(const GeneralizedAssignment& other) const;

    // Flip the sign at one position (prefix is extended to cover it).
    GeneralizedAssignment with_flipped(int i) const;

private:
    std::vector<bool> prefix_;
    std::vector<bool> tail_;
};

// Positions beyond the common prefixes where the two sequences can still
// disagree repeat with this period.
int combined_period(const GeneralizedAssignment& a,
                    const GeneralizedAssignment& b);

// Element of TA^k: ordered composition (a_1)(a_2)...(a_k).
struct AggressiveComposite {
    std::vector<GeneralizedAssignment> parts;

    AggressiveComposite() = default;
    explicit AggressiveComposite(std::vector<GeneralizedAssignment> p)
        : parts(std::move(p)) {}
    int size() const { return static_cast<int>(parts.size()); }
};

// Text format: signed prefix integers plus a tail flag, e.g.
// "1 -2 -3 4" with tail "neg", "pos" or "word:+-". The i-th prefix token
// must have magnitude i. An inline "tail=..." token overrides the flag.
GeneralizedAssignment parse_assignment(const std::string& text,
                                       const std::string& tail_flag = "neg");
std::string format_assignment(const GeneralizedAssignment& a);

}  // namespace satn

#endif  // SATN_ASSIGNMENT_HPP
