#ifndef SATN_CLASSIFY_HPP
#define SATN_CLASSIFY_HPP

#include <string>

#include "satn/formula.hpp"

namespace satn {

// Occurrence-based class of a normal width-3 formula. Easy instances
// (max occurrence <= 3) are satisfiable outright.
struct ClassLabel {
    enum class Kind { Easy, Hard4, OverBudget };

    Kind kind = Kind::Easy;
    int max_occurrence = 0;  // s

    bool satisfiable_known() const { return kind == Kind::Easy; }
};

// Output line: `CLASS kind=<Easy|Hard4|OverBudget> s=<int> satisfiable=<yes|unknown>`.
std::string format_label(const ClassLabel& label);

// Requires a normal width-3 input; throws std::invalid_argument otherwise.
ClassLabel classify(const Formula& f);

}  // namespace satn

#endif  // SATN_CLASSIFY_HPP
