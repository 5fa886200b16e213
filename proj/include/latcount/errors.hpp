#pragma once

#include <stdexcept>
#include <string>

namespace latcount {

// Stable error classes; the CLI prints the class name verbatim, so these
// strings are part of the public contract.
enum class ErrorClass {
    SyntaxError,
    ArityError,
    DimensionMismatch,
    DimensionTooLarge,
    BudgetExceeded,
    BoundViolation,
    DegenerateLine,
    InternalError,
};

const char* error_class_name(ErrorClass cls);

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& msg)
        : std::runtime_error(std::string(error_class_name(cls)) + ": " + msg), cls_(cls) {}

    ErrorClass cls() const { return cls_; }

private:
    ErrorClass cls_;
};

[[noreturn]] inline void raise(ErrorClass cls, const std::string& msg) { throw Error(cls, msg); }

} // namespace latcount
