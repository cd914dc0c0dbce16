#pragma once

#include <stdexcept>
#include <string>

namespace ndslab {

// Exact arithmetic exceeded the configured denominator bit budget.
class RationalOverflowError : public std::overflow_error {
public:
    explicit RationalOverflowError(const std::string& what) : std::overflow_error(what) {}
};

// A witness handed to witness_partner does not satisfy the required separation.
class InvalidWitnessError : public std::invalid_argument {
public:
    explicit InvalidWitnessError(const std::string& what) : std::invalid_argument(what) {}
};

// A query asked for exact open/closed equivalence on a map with constant pieces.
class UnsupportedExactModeError : public std::invalid_argument {
public:
    explicit UnsupportedExactModeError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or semantically invalid query/configuration input.
class QueryError : public std::invalid_argument {
public:
    explicit QueryError(const std::string& what) : std::invalid_argument(what) {}
};

// Config/record parse failure; carries 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace ndslab
