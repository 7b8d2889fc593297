#ifndef SATN_TRACE_HPP
#define SATN_TRACE_HPP

#include <string>
#include <vector>

namespace satn {

// Canonical implementation step. The encoding identifies exactly the
// steps the evaluation semantics treat as equal: an atomic assignment
// applied to a literal on its own variable is a Decide keyed by the
// variable and the produced value (so e_i(y) and -e_i(-y) coincide);
// applied to a foreign literal it is a Probe keyed by the assignment
// index and the literal's variable only.
struct TraceStep {
    enum class Kind {
        Decide,      // (var, value)
        Probe,       // (assignment index, literal variable)
        SetC,
        IncC,
        CheckC,
        ReturnTrue,
        ReturnFalse,
    };

    Kind kind;
    int first = 0;
    int second = 0;  // Decide: value as 0/1; Probe: literal variable

    static TraceStep decide(int var, bool value) {
        return {Kind::Decide, var, value ? 1 : 0};
    }
    static TraceStep probe(int assign_index, int literal_var) {
        return {Kind::Probe, assign_index, literal_var};
    }
    static TraceStep set_c() { return {Kind::SetC}; }
    static TraceStep inc_c() { return {Kind::IncC}; }
    static TraceStep check_c() { return {Kind::CheckC}; }
    static TraceStep ret(bool value) {
        return {value ? Kind::ReturnTrue : Kind::ReturnFalse};
    }

    bool is_terminal() const {
        return kind == Kind::ReturnTrue || kind == Kind::ReturnFalse;
    }

    bool operator==(const TraceStep&) const = default;
};

struct Trace {
    std::vector<TraceStep> steps;

    void push(TraceStep step) { steps.push_back(step); }
    void append(const Trace& other) {
        steps.insert(steps.end(), other.steps.begin(), other.steps.end());
    }

    bool operator==(const Trace&) const = default;
};

// One step per line: DECIDE <var> <T|F>, PROBE <i> <j>, SETC, INCC,
// CHECKC, RET T, RET F.
std::string format_step(const TraceStep& step);
std::string format_trace(const Trace& trace);

}  // namespace satn

#endif  // SATN_TRACE_HPP
