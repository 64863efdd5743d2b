#include "stehbein/connection.hpp"

#include <algorithm>
#include <cmath>

#include "detail/contract.hpp"
#include "stehbein/errors.hpp"

namespace stehbein {

namespace {

const AlgebraElement& lambda_of(const FrameGeometry& g, int a) {
  return g.lambda[static_cast<std::size_t>(a)];
}

void require_field(const Connection& conn, const FrameTensorField& t, int degree, const char* what) {
  const FrameGeometry& g = *conn.geom;
  if (t.frame_dim() != g.n || t.matrix_dim() != g.N) {
    throw InputError(std::string(what) + ": dimension mismatch");
  }
  if (degree >= 0 && t.degree() != degree) {
    throw InputError(std::string(what) + ": expected degree " + std::to_string(degree));
  }
}

// df (x) T: out[q, A] = [lambda_q, T_A].
FrameTensorField differential_prefix(const FrameGeometry& g, const FrameTensorField& t) {
  FrameTensorField out(g.n, g.N, t.degree() + 1);
  const std::size_t count = t.num_coeffs();
  for (int q = 0; q < g.n; ++q)
    for (std::size_t A = 0; A < count; ++A) {
      out.coeff(static_cast<std::size_t>(q) * count + A) = commutator(lambda_of(g, q), t.coeff(A));
    }
  return out;
}

// 1 (x) ... (x) D (x) ... (x) 1 at slot `slot` on the basis part only:
// U[A<, x, y, A>] = -sum_a T[A<, a, A>] omega^a_{xy}.
FrameTensorField basis_derivative_at(const Connection& conn, const FrameTensorField& t, int slot) {
  const FrameGeometry& g = *conn.geom;
  const auto n = static_cast<std::size_t>(g.n);
  const int p = t.degree();
  const std::size_t outer = detail::ipow(n, slot - 1);
  const std::size_t inner = detail::ipow(n, p - slot);
  FrameTensorField out(g.n, g.N, p + 1);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t i = 0; i < inner; ++i) {
        const auto ta = t.coeff((o * n + a) * inner + i);
        if (ta.isZero(0.0)) continue;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            out.coeff(((o * n + x) * n + y) * inner + i).noalias() -=
                ta * conn.omega.coeff((a * n + x) * n + y);
          }
      }
  return out;
}

}  // namespace

Connection connection_from_omega(std::shared_ptr<const FrameGeometry> geom, const Braiding& sigma,
                                 FrameTensorField omega) {
  if (!geom) throw InputError("connection: missing geometry");
  if (omega.frame_dim() != geom->n || omega.matrix_dim() != geom->N || omega.degree() != 3) {
    throw InputError("connection: omega must be an n^3 grid of N x N matrices");
  }
  if (sigma.n() != geom->n) throw InputError("connection: braiding dimension mismatch");
  return Connection{std::move(geom), sigma, std::move(omega)};
}

Connection d0_connection(std::shared_ptr<const FrameGeometry> geom, const Braiding& sigma) {
  if (!geom) throw InputError("d0_connection: missing geometry");
  const FrameGeometry& g = *geom;
  const CentralTensor& S = sigma.S();
  FrameTensorField omega(g.n, g.N, 3);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int d = 0; d < g.n; ++d) {
        auto w = omega.at(a, b, d);
        if (a == d) w -= lambda_of(g, b);
        for (int c = 0; c < g.n; ++c) {
          const Complex s = S(a, c, b, d);
          if (s != Complex{}) w += s * lambda_of(g, c);
        }
      }
  return connection_from_omega(std::move(geom), sigma, std::move(omega));
}

Connection with_central_correction(const Connection& base, const CentralTensor& chi) {
  const FrameGeometry& g = *base.geom;
  if (chi.n() != g.n || chi.rank() != 3) throw InputError("chi must be a rank-3 tensor over n");
  FrameTensorField omega = base.omega;
  for (std::size_t i = 0; i < omega.num_coeffs(); ++i) {
    omega.coeff(i).diagonal().array() += chi[i];
  }
  return Connection{base.geom, base.sigma, std::move(omega)};
}

CentralTensor solve_torsion_free_chi(const Connection& base, double* noncentral_residual) {
  const FrameGeometry& g = *base.geom;
  const int n = g.n;
  const std::size_t nn = static_cast<std::size_t>(n * n);
  const FrameTensorField C = maurer_cartan(g);
  const Eigen::MatrixXcd Pm = g.P.as_matrix();
  CentralTensor chi(n, 3);
  double worst = 0.0;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(Pm.transpose());
  for (int a = 0; a < n; ++a) {
    Eigen::VectorXcd rhs(static_cast<Eigen::Index>(nn));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        AlgebraElement target = 0.5 * C.at(a, b, c);
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e) {
            const Complex w = g.P(d, e, b, c);
            if (w != Complex{}) target -= w * base.omega.at(a, d, e);
          }
        const Complex central = target.trace() / static_cast<double>(g.N);
        target.diagonal().array() -= central;
        worst = std::max(worst, target.norm());
        rhs(b * n + c) = central;
      }
    const Eigen::VectorXcd x = cod.solve(rhs);
    for (std::size_t k = 0; k < nn; ++k) chi[static_cast<std::size_t>(a) * nn + k] = x(static_cast<Eigen::Index>(k));
  }
  if (noncentral_residual) *noncentral_residual = worst;
  return chi;
}

FrameTensorField covariant_derivative(const Connection& conn, const FrameTensorField& xi) {
  require_field(conn, xi, 1, "covariant_derivative");
  const FrameGeometry& g = *conn.geom;
  FrameTensorField out(g.n, g.N, 2);
  for (int b = 0; b < g.n; ++b)
    for (int c = 0; c < g.n; ++c) {
      auto o = out.at(b, c);
      o = commutator(lambda_of(g, b), xi.at(c));
      for (int a = 0; a < g.n; ++a) o.noalias() -= xi.at(a) * conn.omega.at(a, b, c);
    }
  return out;
}

double check_left_leibniz(const Connection& conn, const AlgebraElement& f, const FrameTensorField& xi) {
  const FrameTensorField lhs = covariant_derivative(conn, left_mul(f, xi));
  const FrameTensorField rhs = tensor_product(differential0(f, *conn.geom), xi) +
                               left_mul(f, covariant_derivative(conn, xi));
  return max_coeff_distance(lhs, rhs);
}

double check_right_leibniz(const Connection& conn, const AlgebraElement& f, const FrameTensorField& xi) {
  const FrameTensorField lhs = covariant_derivative(conn, right_mul(xi, f));
  const FrameTensorField rhs =
      apply_sigma_at(tensor_product(xi, differential0(f, *conn.geom)), conn.sigma, 1) +
      right_mul(covariant_derivative(conn, xi), f);
  return max_coeff_distance(lhs, rhs);
}

FrameTensorField torsion_map(const Connection& conn, const FrameTensorField& xi) {
  return differential1(xi, *conn.geom) -
         wedge_project(covariant_derivative(conn, xi), 1, conn.geom->P);
}

TorsionResult torsion(const Connection& conn) {
  const FrameGeometry& g = *conn.geom;
  TorsionResult result;
  for (int a = 0; a < g.n; ++a) {
    result.forms.push_back(torsion_map(conn, FrameTensorField::basis(g.n, g.N, {a})));
    result.form_norm = std::max(result.form_norm, max_coeff_norm(result.forms.back()));
  }
  const FrameTensorField C = maurer_cartan(g);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c) {
        AlgebraElement r = -0.5 * C.at(a, b, c);
        for (int d = 0; d < g.n; ++d)
          for (int e = 0; e < g.n; ++e) {
            const Complex w = g.P(d, e, b, c);
            if (w != Complex{}) r += w * conn.omega.at(a, d, e);
          }
        result.algebraic_residual = std::max(result.algebraic_residual, r.norm());
      }
  return result;
}

AlgebraElement metric_eval(const CentralTensor& g, const FrameTensorField& t) {
  if (t.degree() != 2) throw InputError("metric_eval: expected a degree-2 field");
  if (g.rank() != 2 || g.n() != t.frame_dim()) throw InputError("metric_eval: metric shape mismatch");
  AlgebraElement out = AlgebraElement::Zero(t.matrix_dim(), t.matrix_dim());
  for (int a = 0; a < g.n(); ++a)
    for (int b = 0; b < g.n(); ++b) {
      const Complex w = g(a, b);
      if (w != Complex{}) out += w * t.at(a, b);
    }
  return out;
}

MetricSymmetry check_metric_symmetry(const CentralTensor& g, const CentralTensor& S) {
  const int n = g.n();
  Eigen::VectorXcd gv(n * n), sg(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      gv(a * n + b) = g(a, b);
      Complex s{};
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) s += S(a, b, c, d) * g(c, d);
      sg(a * n + b) = s;
    }
  const double gg = gv.squaredNorm();
  if (gg == 0.0) throw InputError("check_metric_symmetry: metric is zero");
  MetricSymmetry out;
  out.factor = gv.dot(sg) / gg;  // Eigen's dot conjugates the first argument
  out.residual = (sg - out.factor * gv).cwiseAbs().maxCoeff();
  return out;
}

MetricCompatibility check_metric_compatibility(const Connection& conn, const CentralTensor& g) {
  const int n = g.n();
  const CentralTensor& S = conn.sigma.S();
  const Eigen::MatrixXcd gm = [&] {
    Eigen::MatrixXcd m(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m(a, b) = g(a, b);
    return m;
  }();
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(gm);
  if (!lu.isInvertible()) throw InputError("check_metric_compatibility: metric is singular");
  const Eigen::MatrixXcd glow = lu.inverse();
  const FrameGeometry& geo = *conn.geom;

  // omega_{cd}^e = g_{cf} omega^f_{dh} g^{he}
  FrameTensorField lowered(n, geo.N, 3);
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d)
      for (int e = 0; e < n; ++e) {
        auto out = lowered.at(c, d, e);
        for (int f = 0; f < n; ++f)
          for (int h = 0; h < n; ++h) {
            const Complex w = glow(c, f) * g(h, e);
            if (w != Complex{}) out += w * conn.omega.at(f, d, h);
          }
      }

  MetricCompatibility result;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        AlgebraElement r = conn.omega.at(a, b, c);
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e) {
            const Complex s = S(a, d, b, e);
            if (s != Complex{}) r += s * lowered.at(c, d, e);
          }
        result.first = std::max(result.first, r.norm());
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Complex s = (c == d) ? -g(a, b) : Complex{};
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f)
              for (int h = 0; h < n; ++h) s += S(a, e, d, f) * g(f, h) * S(b, c, e, h);
          result.second = std::max(result.second, std::abs(s));
        }
  return result;
}

FrameTensorField D2(const Connection& conn, const FrameTensorField& t) {
  require_field(conn, t, 2, "D2");
  const FrameGeometry& g = *conn.geom;
  const CentralTensor& S = conn.sigma.S();
  const int n = g.n;
  FrameTensorField out = differential_prefix(g, t);
  // -f_{ar} omega^a_{pq}
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        auto o = out.at(p, q, r);
        for (int a = 0; a < n; ++a) o.noalias() -= t.at(a, r) * conn.omega.at(a, p, q);
      }
  // -f_{ab} S^{ac}_{pq} omega^b_{cr}
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          const Complex s = S(a, c, p, q);
          if (s == Complex{}) continue;
          for (int b = 0; b < n; ++b) {
            const auto fab = t.at(a, b);
            if (fab.isZero(0.0)) continue;
            for (int r = 0; r < n; ++r) out.at(p, q, r).noalias() -= s * (fab * conn.omega.at(b, c, r));
          }
        }
  return out;
}

FrameTensorField D2_decomposable(const Connection& conn, const FrameTensorField& xi,
                                 const FrameTensorField& eta) {
  return tensor_product(covariant_derivative(conn, xi), eta) +
         apply_sigma_at(tensor_product(xi, covariant_derivative(conn, eta)), conn.sigma, 1);
}

FrameTensorField Dn(const Connection& conn, const FrameTensorField& t) {
  require_field(conn, t, -1, "Dn");
  if (t.degree() < 1) throw InputError("Dn: degree must be at least 1");
  FrameTensorField out = differential_prefix(*conn.geom, t);
  for (int slot = 1; slot <= t.degree(); ++slot) {
    FrameTensorField term = basis_derivative_at(conn, t, slot);
    for (int j = slot - 1; j >= 1; --j) term = apply_sigma_at(term, conn.sigma, j);
    out += term;
  }
  return out;
}

double check_Dn_lemma(const Connection& conn, const FrameTensorField& t, int i) {
  if (i < 2 || i > t.degree()) throw InputError("check_Dn_lemma: slot out of range");
  const FrameTensorField lhs = Dn(conn, apply_sigma_at(t, conn.sigma, i - 1));
  const FrameTensorField rhs = apply_sigma_at(Dn(conn, t), conn.sigma, i);
  return max_coeff_distance(lhs, rhs);
}

FrameTensorField curvature_map(const Connection& conn, const FrameTensorField& xi) {
  return wedge_project(D2(conn, covariant_derivative(conn, xi)), 1, conn.geom->P);
}

CurvatureData curvature(const Connection& conn) {
  const FrameGeometry& g = *conn.geom;
  const int n = g.n;
  CurvatureData data{FrameTensorField(n, g.N, 4), std::nullopt, 0.0, 0.0};
  for (int a = 0; a < n; ++a) {
    const FrameTensorField curv = curvature_map(conn, FrameTensorField::basis(n, g.N, {a}));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) data.R.at(a, b, c, d) = -2.0 * curv.at(c, d, b);
  }
  if (g.g) {
    FrameTensorField ricci(n, g.N, 2);
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        auto ric = ricci.at(a, c);
        for (int b = 0; b < n; ++b)
          for (int d = 0; d < n; ++d) {
            const Complex w = (*g.g)(d, b);
            if (w != Complex{}) ric += 0.5 * w * data.R.at(a, b, c, d);
          }
      }
    data.ricci = std::move(ricci);
  }
  for (std::size_t i = 0; i < data.R.num_coeffs(); ++i) {
    data.centrality_residual =
        std::max(data.centrality_residual, centrality_residual(AlgebraElement(data.R.coeff(i)), g));
  }
  const FrameTensorField reduced = apply_central_at(data.R, g.P, 3);
  data.reduction_residual = max_coeff_distance(reduced, data.R);
  return data;
}

namespace {
FrameTensorField theta_squared(const FrameGeometry& geom) {
  const FrameTensorField theta = dirac_form(geom);
  return wedge_project(tensor_product(theta, theta), 1, geom.P);
}

FrameTensorField reversed_block_term(const FrameGeometry& geom, const Braiding& sigma,
                                     const FrameTensorField& xi) {
  const FrameTensorField theta = dirac_form(geom);
  const FrameTensorField t3 = tensor_product(tensor_product(xi, theta), theta);
  return wedge_project(apply_word(t3, sigma, {3, {1, 2, 1}}), 1, geom.P);
}
}  // namespace

std::vector<FrameTensorField> curvature_d0_formula(const FrameGeometry& geom, const Braiding& sigma) {
  const FrameTensorField th2 = theta_squared(geom);
  std::vector<FrameTensorField> out;
  for (int a = 0; a < geom.n; ++a) {
    const FrameTensorField basis = FrameTensorField::basis(geom.n, geom.N, {a});
    out.push_back(tensor_product(th2, basis) + reversed_block_term(geom, sigma, basis));
  }
  return out;
}

FrameTensorField curvature_d0_formula(const FrameGeometry& geom, const Braiding& sigma,
                                      const FrameTensorField& xi) {
  if (xi.degree() != 1) throw InputError("curvature_d0_formula: expected a 1-form");
  const FrameTensorField th2 = theta_squared(geom);
  FrameTensorField out = reversed_block_term(geom, sigma, xi);
  for (int a = 0; a < geom.n; ++a) {
    out += left_mul(AlgebraElement(xi.at(a)),
                    tensor_product(th2, FrameTensorField::basis(geom.n, geom.N, {a})));
  }
  return out;
}

}  // namespace stehbein
