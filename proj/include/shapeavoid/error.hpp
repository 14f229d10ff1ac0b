#pragma once

#include <stdexcept>
#include <string>

namespace shapeavoid {

// Malformed input: not a permutation, not a partition, bad positions.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates the hypothesis an operation needs.
class precondition_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested enumeration is larger than the configured work budget.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shapeavoid
