#pragma once

#include <stdexcept>
#include <string>

namespace gwa {

/// Base class for all recoverable errors raised by the kernel.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by a zero scalar or inversion of zero.
struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& what = "division by zero") : Error(what) {}
};

/// A precondition on the parameter configuration is violated (p = 1 where
/// forbidden, zero parameter value, vanishing denominator at a specialization).
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Operands belong to different algebras, bases or configurations.
struct MismatchError : Error {
    explicit MismatchError(const std::string& what) : Error(what) {}
};

/// Inversion was requested for an element that is not a unit.
struct NotAUnitError : Error {
    explicit NotAUnitError(const std::string& what = "not a unit") : Error(what) {}
};

/// Morphism data violates one of its defining constraints.
struct ConstraintError : Error {
    explicit ConstraintError(const std::string& what) : Error(what) {}
};

/// Text input could not be parsed; carries a 1-based source position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(column_) + ": " + what),
          line(line_),
          column(column_) {}
};

}  // namespace gwa
