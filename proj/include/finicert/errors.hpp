#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace finicert {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class TargetTooSmall : public Error {
public:
    using Error::Error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ResourceBudgetExceeded : public Error {
public:
    using Error::Error;
};

class CertificateInvalid : public Error {
public:
    using Error::Error;
};

/// The two nilpotency routes disagreed. Mathematically impossible;
/// signals an implementation bug, never bad input.
class RouteDisagreement : public Error {
public:
    using Error::Error;
};

/// Syntax error with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace finicert
