#pragma once

#include <stdexcept>
#include <string>

namespace psr {

/// Malformed or inconsistent input (bad document, unknown party, invalid threshold).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An outcome or ballot refers to parties outside the profile's roster,
/// or two profiles with different rosters were combined.
struct RosterMismatchError : InputError {
  explicit RosterMismatchError(const std::string& what) : InputError(what) {}
};

/// An exhaustive operation was asked to run beyond its instance-size guard.
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace psr
