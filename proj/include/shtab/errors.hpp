#pragma once

#include <stdexcept>
#include <string>

namespace shtab {

/// Bad input: malformed text, a non-strict shape, a filling that breaks a
/// tableau rule, an index out of range for the alphabet.
class TableauError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force routine was asked to work beyond its configured size.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algorithm reached a state that valid input can never produce.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace shtab
