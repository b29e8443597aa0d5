#pragma once

#include <stdexcept>
#include <string>

namespace hycat {

// A mathematical precondition failed for the given inputs (zero velocity,
// nonpositive weight, point on a reference plane, chart overflow, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The caller passed an argument outside the documented contract (negative
// step, r <= 0, mismatched dimensions).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hycat
