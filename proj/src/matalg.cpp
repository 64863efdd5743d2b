#include "stehbein/matalg.hpp"

#include <algorithm>
#include <string>

#include "stehbein/errors.hpp"

namespace stehbein {

AlgebraElement identity_element(int N) { return AlgebraElement::Identity(N, N); }

AlgebraElement zero_element(int N) { return AlgebraElement::Zero(N, N); }

AlgebraElement adjoint(const AlgebraElement& a) { return a.adjoint(); }

void require_same_dim(const AlgebraElement& a, const AlgebraElement& b,
                      const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError(std::string(what) + ": dimension mismatch (" +
                     std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) + ")");
  }
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

double frobenius_norm(const AlgebraElement& a) { return a.norm(); }

double centrality_residual(const AlgebraElement& a,
                           std::span<const AlgebraElement> generators) {
  double worst = 0.0;
  for (const auto& g : generators) {
    worst = std::max(worst, commutator(g, a).norm());
  }
  return worst;
}

double antihermiticity_residual(const AlgebraElement& a) {
  return (a + a.adjoint()).norm();
}

}  // namespace stehbein
