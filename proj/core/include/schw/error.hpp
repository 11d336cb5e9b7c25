#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schw {

/// Arithmetic misuse: division by zero, reciprocal of a jet without constant
/// term, composing with a nonzero inner constant, exhausted truncation order,
/// mixing polynomial variable families.
class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Analytic precondition failed at a base point: pole, branch point
/// (f'(z0) = 0), log branch cut, point outside a metric's domain,
/// non-isometric map passed where an isometry is required.
class AnalyticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expression syntax error. Carries the 0-based offset of the offending
/// character in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace schw
