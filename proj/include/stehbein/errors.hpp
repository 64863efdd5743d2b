#pragma once

#include <stdexcept>
#include <string>

namespace stehbein {

/// Malformed input: dimension mismatch, out-of-range slot, unparsable file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant of a loaded or constructed object does not hold.
class InvariantViolation : public InputError {
 public:
  InvariantViolation(std::string invariant, double residual);

  const std::string& invariant() const noexcept { return invariant_; }
  double residual() const noexcept { return residual_; }

 private:
  std::string invariant_;
  double residual_;
};

/// Two routes that must agree by construction disagree.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stehbein
