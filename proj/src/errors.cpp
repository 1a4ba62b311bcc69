#include "vlink/errors.hpp"

namespace vlink {

const char* fault_name(Fault f) {
    switch (f) {
        case Fault::InvalidCode: return "InvalidCode";
        case Fault::NotAKnot: return "NotAKnot";
        case Fault::NotACutSystem: return "NotACutSystem";
        case Fault::NotEven: return "NotEven";
        case Fault::NonEmptyCutSet: return "NonEmptyCutSet";
        case Fault::BadComponent: return "BadComponent";
        case Fault::TooLarge: return "TooLarge";
        case Fault::MissingRotation: return "MissingRotation";
        case Fault::NotApplicable: return "NotApplicable";
        case Fault::Infeasible: return "Infeasible";
    }
    return "Unknown";
}

SyntaxError::SyntaxError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

}  // namespace vlink
