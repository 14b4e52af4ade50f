#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpeq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed program text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// The requested enumeration exceeds a configured size bound.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its contract (wrong program class,
/// malformed pair, equivalent inputs passed to a witness builder, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Two independent computations disagreed. Indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace lpeq
