#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

enum class ErrorKind {
    ZeroDenominator,
    NotOrthogonal,
    NotInvertible,
    ZeroElement,
    UnsupportedField,
    BadDimension,
    CapExceeded,
    DimensionMismatch,
    BadSpec,
    ParseError,
    IndexOutOfRange,
    StepBudgetExceeded,
    PoleAtSamplePoint,
    BadCentralValue,
    DegenerateInput,
    NotNull,
    GroupPartNotIdentity,
    DegeneratePoint,
    NotInvariant,
    Overflow,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace dunkl
