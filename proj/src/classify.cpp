#include "satn/classify.hpp"

#include <sstream>
#include <stdexcept>

namespace satn {

std::string format_label(const ClassLabel& label) {
    std::ostringstream os;
    os << "CLASS kind=";
    switch (label.kind) {
        case ClassLabel::Kind::Easy: os << "Easy"; break;
        case ClassLabel::Kind::Hard4: os << "Hard4"; break;
        case ClassLabel::Kind::OverBudget: os << "OverBudget"; break;
    }
    os << " s=" << label.max_occurrence << " satisfiable="
       << (label.satisfiable_known() ? "yes" : "unknown");
    return os.str();
}

ClassLabel classify(const Formula& f) {
    if (!is_normal(f, 3))
        throw std::invalid_argument("classify: input is not a normal width-3 formula");

    ClassLabel label;
    label.max_occurrence = f.max_occurrences();
    if (label.max_occurrence <= 3)
        label.kind = ClassLabel::Kind::Easy;
    else if (label.max_occurrence == 4)
        label.kind = ClassLabel::Kind::Hard4;
    else
        label.kind = ClassLabel::Kind::OverBudget;
    return label;
}

}  // namespace satn
