#pragma once

#include <stdexcept>
#include <string>

namespace qfl {

/// Malformed or out-of-range input (bad spec string, dimension mismatch, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on an object that does not meet its precondition
/// (e.g. a non-Lie bracket table passed to center()).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qfl
