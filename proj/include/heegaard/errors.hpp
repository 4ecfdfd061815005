#pragma once

#include <stdexcept>
#include <string>

namespace heegaard {

/// Malformed or out-of-contract input data (wrong sizes, bad files, invalid systems).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called on well-formed data that violates its hypothesis,
/// e.g. a pivot that is not odd.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace heegaard
