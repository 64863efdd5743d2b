#include "stehbein/errors.hpp"

#include <sstream>

namespace stehbein {

namespace {
std::string describe(const std::string& invariant, double residual) {
  std::ostringstream out;
  out << "invariant violated: " << invariant << " (residual " << residual << ")";
  return out.str();
}
}  // namespace

InvariantViolation::InvariantViolation(std::string invariant, double residual)
    : InputError(describe(invariant, residual)),
      invariant_(std::move(invariant)),
      residual_(residual) {}

}  // namespace stehbein
