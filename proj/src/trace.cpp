#include "satn/trace.hpp"

#include <sstream>

namespace satn {

std::string format_step(const TraceStep& step) {
    std::ostringstream os;
    switch (step.kind) {
        case TraceStep::Kind::Decide:
            os << "DECIDE " << step.first << ' ' << (step.second ? 'T' : 'F');
            break;
        case TraceStep::Kind::Probe:
            os << "PROBE " << step.first << ' ' << step.second;
            break;
        case TraceStep::Kind::SetC: os << "SETC"; break;
        case TraceStep::Kind::IncC: os << "INCC"; break;
        case TraceStep::Kind::CheckC: os << "CHECKC"; break;
        case TraceStep::Kind::ReturnTrue: os << "RET T"; break;
        case TraceStep::Kind::ReturnFalse: os << "RET F"; break;
    }
    return os.str();
}

std::string format_trace(const Trace& trace) {
    std::ostringstream os;
    for (const TraceStep& step : trace.steps) os << format_step(step) << '\n';
    return os.str();
}

}  // namespace satn
