// Error types shared across the library. The CLI maps these onto exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace wafom {

// Mismatched or invalid shapes (vector length vs. matrix size, n < m, ...).
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Invalid numeric arguments (nonpositive weight, a = 0, chunk size out of range).
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its size budget (dual net, numeric Walsh integral).
class BudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input file.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace wafom
