#pragma once

#include <stdexcept>
#include <string>

namespace magagm {

// Argument outside the domain of an operation (non-positive AGM operand,
// |f| >= 1 where the formula needs |f| < 1, m not in the sequence S, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation requested at (or numerically next to) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Reciprocal or square root of a series with a zero or non-square constant
// term.
class SingularSeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientOrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested precision exceeds what an oracle supports, or a computation lost
// too many digits for its result to be trusted.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree exactly did not.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace magagm
