#include "satn/assignment.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace satn {

GeneralizedAssignment::GeneralizedAssignment(std::vector<bool> prefix,
                                             std::vector<bool> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    if (tail_.empty())
        throw std::invalid_argument("assignment tail word must be nonempty");
}

GeneralizedAssignment GeneralizedAssignment::negative_extension(
    std::vector<bool> prefix) {
    return GeneralizedAssignment(std::move(prefix), {false});
}

GeneralizedAssignment GeneralizedAssignment::all_positive() {
    return GeneralizedAssignment({}, {true});
}

GeneralizedAssignment GeneralizedAssignment::all_negative() {
    return GeneralizedAssignment({}, {false});
}

bool GeneralizedAssignment::sign_at(int i) const {
    if (i < 1) throw std::out_of_range("assignment index must be positive");
    if (i <= static_cast<int>(prefix_.size())) return prefix_[i - 1];
    int offset = (i - static_cast<int>(prefix_.size()) - 1) %
                 static_cast<int>(tail_.size());
    return tail_[offset];
}

int combined_period(const GeneralizedAssignment& a,
                    const GeneralizedAssignment& b) {
    return std::lcm(a.period(), b.period());
}

bool GeneralizedAssignment::same_sequence(
    const GeneralizedAssignment& other) const {
    int bound = std::max(prefix_length(), other.prefix_length()) +
                combined_period(*this, other);
    for (int i = 1; i <= bound; ++i)
        if (sign_at(i) != other.sign_at(i)) return false;
    return true;
}

GeneralizedAssignment GeneralizedAssignment::with_flipped(int i) const {
    std::vector<bool> prefix;
    int len = std::max(i, prefix_length());
    prefix.reserve(len);
    for (int k = 1; k <= len; ++k) prefix.push_back(sign_at(k));
    prefix[i - 1] = !prefix[i - 1];
    return GeneralizedAssignment(std::move(prefix), tail_);
}

GeneralizedAssignment parse_assignment(const std::string& text,
                                       const std::string& tail_flag) {
    std::istringstream in(text);
    std::string token;
    std::vector<bool> prefix;
    std::string tail_spec = tail_flag;
    while (in >> token) {
        if (token.rfind("tail=", 0) == 0) {
            tail_spec = token.substr(5);
            continue;
        }
        int value;
        try {
            value = std::stoi(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad assignment token: " + token);
        }
        int expected = static_cast<int>(prefix.size()) + 1;
        if (std::abs(value) != expected)
            throw std::invalid_argument(
                "assignment prefix token " + token + " out of order (expected " +
                std::to_string(expected) + " or -" + std::to_string(expected) +
                ")");
        prefix.push_back(value > 0);
    }

    std::vector<bool> tail;
    if (tail_spec == "neg") {
        tail = {false};
    } else if (tail_spec == "pos") {
        tail = {true};
    } else if (tail_spec.rfind("word:", 0) == 0) {
        for (char c : tail_spec.substr(5)) {
            if (c == '+') tail.push_back(true);
            else if (c == '-') tail.push_back(false);
            else throw std::invalid_argument("tail word characters must be + or -");
        }
        if (tail.empty())
            throw std::invalid_argument("tail word must be nonempty");
    } else {
        throw std::invalid_argument("tail must be neg, pos or word:<+->");
    }
    return GeneralizedAssignment(std::move(prefix), std::move(tail));
}

std::string format_assignment(const GeneralizedAssignment& a) {
    std::ostringstream os;
    for (int i = 1; i <= a.prefix_length(); ++i) {
        if (i > 1) os << ' ';
        os << (a.sign_at(i) ? i : -i);
    }
    if (a.prefix_length() > 0) os << ' ';
    os << "tail=";
    if (a.period() == 1) {
        os << (a.tail()[0] ? "pos" : "neg");
    } else {
        os << "word:";
        for (bool s : a.tail()) os << (s ? '+' : '-');
    }
    return os.str();
}

}  // namespace satn
