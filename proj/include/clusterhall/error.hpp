#pragma once

#include <stdexcept>
#include <string>

namespace clusterhall {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition. The CLI maps this to exit code 2.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An enumeration or search would exceed its configured cap. Exit code 3.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace clusterhall
