#include "stehbein/calculus.hpp"

#include <algorithm>
#include <string>

#include "stehbein/errors.hpp"

namespace stehbein {

namespace {

void require_rank(const CentralTensor& t, int n, int rank, const char* what) {
  if (t.n() != n || t.rank() != rank) {
    throw InputError(std::string(what) + ": expected rank " + std::to_string(rank) +
                     " over n = " + std::to_string(n));
  }
}

void check_shapes(const FrameGeometry& geom) {
  if (geom.N < 1 || geom.n < 1) throw InputError("geometry: dimensions must be positive");
  if (static_cast<int>(geom.lambda.size()) != geom.n) {
    throw InputError("geometry: expected " + std::to_string(geom.n) + " frame generators");
  }
  for (const auto& l : geom.lambda) {
    if (l.rows() != geom.N || l.cols() != geom.N) {
      throw InputError("geometry: generator is not " + std::to_string(geom.N) + "x" +
                       std::to_string(geom.N));
    }
  }
  require_rank(geom.P, geom.n, 4, "P");
  require_rank(geom.S, geom.n, 4, "S");
  require_rank(geom.F, geom.n, 3, "F");
  require_rank(geom.K, geom.n, 2, "K");
  if (geom.g) require_rank(*geom.g, geom.n, 2, "metric");
  if (geom.chi) require_rank(*geom.chi, geom.n, 3, "chi");
  if (geom.omega && (geom.omega->frame_dim() != geom.n || geom.omega->matrix_dim() != geom.N ||
                     geom.omega->degree() != 3)) {
    throw InputError("omega: expected an n^3 grid of N x N matrices");
  }
}

}  // namespace

GeometryInvariants geometry_invariants(const FrameGeometry& geom) {
  check_shapes(geom);
  GeometryInvariants inv;
  for (const auto& l : geom.lambda) {
    inv.lambda_antihermitian = std::max(inv.lambda_antihermitian, antihermiticity_residual(l));
  }
  inv.P_projector = max_abs_diff(compose(geom.P, geom.P), geom.P);
  const int n = geom.n;
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d)
      for (int e = 0; e < n; ++e) {
        Complex s{};
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) s += geom.F(a, b, c) * geom.P(b, c, d, e);
        inv.F_reduced = std::max(inv.F_reduced, std::abs(s - geom.F(a, d, e)));
      }
  return inv;
}

void validate_geometry(const FrameGeometry& geom, double tol) {
  const GeometryInvariants inv = geometry_invariants(geom);
  if (inv.lambda_antihermitian > tol) {
    throw InvariantViolation("lambda_antihermitian", inv.lambda_antihermitian);
  }
  if (inv.P_projector > tol) throw InvariantViolation("P_projector", inv.P_projector);
  if (inv.F_reduced > tol) throw InvariantViolation("F_P_reduced", inv.F_reduced);
}

FrameTensorField dirac_form(const FrameGeometry& geom) {
  FrameTensorField theta(geom.n, geom.N, 1);
  for (int a = 0; a < geom.n; ++a) theta.at(a) = -geom.lambda[static_cast<std::size_t>(a)];
  return theta;
}

FrameTensorField differential0(const AlgebraElement& f, const FrameGeometry& geom) {
  if (f.rows() != geom.N || f.cols() != geom.N) throw InputError("differential0: dimension mismatch");
  FrameTensorField df(geom.n, geom.N, 1);
  for (int a = 0; a < geom.n; ++a) df.at(a) = commutator(geom.lambda[static_cast<std::size_t>(a)], f);
  return df;
}

FrameTensorField maurer_cartan(const FrameGeometry& geom) {
  const int n = geom.n;
  FrameTensorField C(n, geom.N, 3);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        auto out = C.at(a, b, c);
        out = geom.F(a, b, c) * AlgebraElement::Identity(geom.N, geom.N);
        for (int e = 0; e < n; ++e) {
          const Complex w = geom.P(a, e, b, c) + geom.P(e, a, b, c);
          if (w != Complex{}) out -= w * geom.lambda[static_cast<std::size_t>(e)];
        }
      }
  return C;
}

FrameTensorField differential1(const FrameTensorField& xi, const FrameGeometry& geom) {
  if (xi.degree() != 1) throw InputError("differential1: expected a 1-form");
  if (xi.frame_dim() != geom.n || xi.matrix_dim() != geom.N) {
    throw InputError("differential1: dimension mismatch");
  }
  const int n = geom.n;
  const FrameTensorField C = maurer_cartan(geom);
  // (e_b xi_a) theta^b theta^a - 1/2 xi_e C^e_{ba} theta^b theta^a
  FrameTensorField raw(n, geom.N, 2);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      auto out = raw.at(b, a);
      out = commutator(geom.lambda[static_cast<std::size_t>(b)], xi.at(a));
      for (int e = 0; e < n; ++e) out -= 0.5 * (xi.at(e) * C.at(e, b, a));
    }
  return wedge_project(raw, 1, geom.P);
}

double check_structure(const FrameGeometry& geom) {
  const int n = geom.n;
  const AlgebraElement I = AlgebraElement::Identity(geom.N, geom.N);
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      AlgebraElement r = -geom.K(a, b) * I;
      for (int c = 0; c < n; ++c) {
        const auto& lc = geom.lambda[static_cast<std::size_t>(c)];
        r -= geom.F(c, a, b) * lc;
        for (int d = 0; d < n; ++d) {
          const Complex w = geom.P(c, d, a, b);
          if (w != Complex{}) r += 2.0 * w * (lc * geom.lambda[static_cast<std::size_t>(d)]);
        }
      }
      worst = std::max(worst, r.norm());
    }
  return worst;
}

double check_theta_squared(const FrameGeometry& geom) {
  const FrameTensorField theta = dirac_form(geom);
  const FrameTensorField d_theta = differential1(theta, geom);
  const FrameTensorField theta_sq = wedge_project(tensor_product(theta, theta), 1, geom.P);
  FrameTensorField k_form(geom.n, geom.N, 2);
  for (int a = 0; a < geom.n; ++a)
    for (int b = 0; b < geom.n; ++b) k_form.at(a, b).setIdentity() *= 0.5 * geom.K(a, b);
  return max_coeff_norm(d_theta + theta_sq + wedge_project(k_form, 1, geom.P));
}

double centrality_residual(const AlgebraElement& a, const FrameGeometry& geom) {
  if (a.rows() != geom.N) throw InputError("centrality_residual: dimension mismatch");
  return centrality_residual(a, std::span<const AlgebraElement>(geom.lambda));
}

}  // namespace stehbein
