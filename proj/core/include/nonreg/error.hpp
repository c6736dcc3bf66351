#pragma once

#include <stdexcept>
#include <string>

namespace nonreg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed device file or literal. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    enum class Kind { Syntax, UndeclaredStart, DuplicateSymbolKind };

    ParseError(Kind kind, std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what),
          kind_(kind), line_(line) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

/// A word uses a letter outside the device's alphabet.
class AlphabetError : public Error {
public:
    using Error::Error;
};

/// An operation was called on an input that violates its precondition
/// (grammar not in quasi-CNF, empty language, nullable start, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An enumeration or search guard was hit before the result was exact.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Elements of different group specs were combined.
class SpecMismatch : public Error {
public:
    using Error::Error;
};

} // namespace nonreg
