#pragma once

#include <stdexcept>
#include <string>

namespace tetra {

// Malformed or out-of-contract input (bad colors, invalid objects, bad n).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An object is well formed but fails the constraints of the requested family.
class ConstraintMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No closed form is known for the requested color set.
class NoFormula : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation would exceed its configured resource budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violation of an internal invariant that the mathematics guarantees.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tetra
