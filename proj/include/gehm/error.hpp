#pragma once

#include <stdexcept>
#include <string>

namespace gehm {

/// Input that does not describe a valid gehm, index set, polynomial or value.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation refused because its state space exceeds a configured limit.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic hit a division by zero or an irrational intermediate.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace gehm
