#pragma once

// Shared helpers for the unit suites.

#include <cmath>
#include <memory>

#include "stehbein/connection.hpp"
#include "stehbein/fixtures.hpp"

namespace stehbein::test {

inline std::shared_ptr<const FrameGeometry> share(FrameGeometry g) {
  return std::make_shared<const FrameGeometry>(std::move(g));
}

inline double diff(const AlgebraElement& a, const AlgebraElement& b) { return frobenius_norm(a - b); }

/// A geometry with all lambda = 0 on M_2: the degenerate corner of every formula.
inline FrameGeometry trivial_geometry(int n = 3) {
  FrameGeometry g = fixtures::su2_flip_geometry();
  g.name = "trivial";
  g.n = n;
  g.lambda.assign(static_cast<std::size_t>(n), zero_element(2));
  g.P = CentralTensor::antisymmetrizer(n);
  g.S = CentralTensor::flip(n);
  g.tau.reset();
  g.F = CentralTensor(n, 3);
  g.K = CentralTensor(n, 2);
  g.g = CentralTensor::identity(n, 1);
  return g;
}

}  // namespace stehbein::test
