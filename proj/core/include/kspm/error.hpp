#pragma once

#include <stdexcept>
#include <string>

namespace kspm {

/// Attempt to fire a column whose slope is below D.
class RuleViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A recorded strategy or log contradicts a structural invariant of the model.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A theory-level precondition does not hold (e.g. an interval below the
/// applicability threshold, an unstable configuration handed to the wave matcher).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed user input: bad parameter, letter outside the alphabet, unparsable file.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A guard that should be unreachable was hit (firing budget, recursion depth).
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kspm
