#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace composita {

// Division by zero and other failures of exact arithmetic.
class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A series operation was applied outside its domain (e.g. log of a
// series whose constant term is not 1).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments: out-of-range indices, order mismatches, unknown names,
// missing family parameters.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Half-open character range [begin, end) in an expression, 1-based.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// DomainError raised while evaluating a generating-function expression,
// tagged with the subexpression that triggered it.
class EvalError : public DomainError {
public:
    EvalError(const std::string& message, SourceSpan span)
        : DomainError(message + " (in characters " + std::to_string(span.begin) + "-" +
                      std::to_string(span.end > span.begin ? span.end - 1 : span.begin) + ")"),
          span_(span) {}

    SourceSpan span() const noexcept { return span_; }

private:
    SourceSpan span_;
};

}  // namespace composita
