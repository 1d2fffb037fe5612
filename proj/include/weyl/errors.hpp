#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weyl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in Weyl algebras with different variable counts.
class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : Error("dimension mismatch: n=" + std::to_string(lhs) + " vs n=" + std::to_string(rhs)) {}
};

class UndefinedSymbol : public Error {
public:
    UndefinedSymbol() : Error("principal symbol of the zero operator is undefined") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          message_(what), line_(line), column_(column) {}

    const std::string& message() const { return message_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

class UnboundedBasis : public Error {
public:
    UnboundedBasis()
        : Error("order filtration steps are infinite-dimensional without an x-degree truncation") {}
};

class ModuleMismatch : public Error {
public:
    ModuleMismatch() : Error("filtration specs present different modules") {}
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

/// The presented module is zero (1 lies in the ideal).
class ZeroModule : public Error {
public:
    ZeroModule() : Error("zero module: 1 reduces to zero") {}
};

/// A result could not be certified within the truncation/sampling budget.
class Inconclusive : public Error {
public:
    using Error::Error;
};

} // namespace weyl
