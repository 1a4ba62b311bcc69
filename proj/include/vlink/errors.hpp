#pragma once

#include <stdexcept>
#include <string>

namespace vlink {

enum class Fault {
    InvalidCode,
    NotAKnot,
    NotACutSystem,
    NotEven,
    NonEmptyCutSet,
    BadComponent,
    TooLarge,
    MissingRotation,
    NotApplicable,
    Infeasible,
};

const char* fault_name(Fault f);

// Precondition violation on an otherwise well-formed request.
class DomainError : public std::runtime_error {
public:
    DomainError(Fault fault, const std::string& what)
        : std::runtime_error(what), fault_(fault) {}
    Fault fault() const { return fault_; }

private:
    Fault fault_;
};

// Malformed input text; positions are 1-based.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_ = 0;
    int column_ = 0;
};

}  // namespace vlink
