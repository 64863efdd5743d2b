#include "stehbein/involution.hpp"

#include <algorithm>

#include <unsupported/Eigen/KroneckerProduct>

#include "detail/contract.hpp"
#include "stehbein/errors.hpp"

namespace stehbein {

namespace {

CentralTensor kron(const CentralTensor& a, const CentralTensor& b) {
  return CentralTensor::from_matrix(a.n(), Eigen::kroneckerProduct(a.as_matrix(), b.as_matrix()).eval());
}

CentralTensor letter_tensor(const CentralTensor& m, int strands, int pos) {
  return then_at(CentralTensor::identity(m.n(), strands), m, pos);
}

CentralTensor flip_word(int n, const PermutationWord& w) {
  return word_tensor(Braiding(CentralTensor::flip(n)), w);
}

const CentralTensor& require_inverse(const Braiding& b) {
  if (!b.S_inv()) throw InputError("sigma is not invertible (condition number too large)");
  return *b.S_inv();
}

FrameTensorField adjoint_coeffs(const FrameTensorField& t) {
  FrameTensorField out(t.frame_dim(), t.matrix_dim(), t.degree());
  for (std::size_t i = 0; i < t.num_coeffs(); ++i) out.coeff(i) = t.coeff(i).adjoint();
  return out;
}

template <class F>
double max_over_basis(int n, int N, int degree, F&& residual) {
  const std::size_t count = detail::ipow(static_cast<std::size_t>(n), degree);
  FrameTensorField shape(n, N, degree);
  double worst = 0.0;
  for (std::size_t flat = 0; flat < count; ++flat) {
    const std::vector<int> idx = shape.multi_index(flat);
    worst = std::max(worst, residual(FrameTensorField::basis(n, N, idx)));
  }
  return worst;
}

}  // namespace

FrameTensorField star_form(const FrameTensorField& t, const std::optional<CentralTensor>& Jn) {
  FrameTensorField adj = adjoint_coeffs(t);
  if (t.degree() <= 1) return adj;
  if (!Jn || Jn->rank() != 2 * t.degree() || Jn->n() != t.frame_dim()) {
    throw InputError("star_form: involution order does not match the field degree");
  }
  return apply_central_at(adj, *Jn, 1);
}

FrameTensorField reverse_adjoint(const FrameTensorField& t) {
  FrameTensorField out(t.frame_dim(), t.matrix_dim(), t.degree());
  for (std::size_t i = 0; i < t.num_coeffs(); ++i) {
    std::vector<int> idx = t.multi_index(i);
    std::reverse(idx.begin(), idx.end());
    out.coeff(idx) = t.coeff(i).adjoint();
  }
  return out;
}

CentralTensor reversal_tensor(int n, int order) {
  CentralTensor r(n, 2 * order);
  FrameTensorField shape(n, 1, order);
  const std::size_t block = r.block();
  for (std::size_t i = 0; i < block; ++i) {
    std::vector<int> idx = shape.multi_index(i);
    std::reverse(idx.begin(), idx.end());
    r[i * block + shape.flat_index(idx)] = 1.0;
  }
  return r;
}

CentralTensor build_I(const CentralTensor& P) {
  if (P.rank() != 4) throw InputError("build_I: P must have rank 4");
  CentralTensor I(P.n(), 4);
  const int n = P.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) I(a, b, c, d) = -P(b, a, c, d);
  return I;
}

CentralTensor build_J(const CentralTensor& S) {
  if (S.rank() != 4) throw InputError("build_J: S must have rank 4");
  CentralTensor J(S.n(), 4);
  const int n = S.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) J(a, b, c, d) = S(b, a, c, d);
  return J;
}

CentralTensor build_jn(const Braiding& b, int order, const std::optional<PermutationWord>& word) {
  if (order < 1) throw InputError("build_jn: order must be at least 1");
  if (order == 1) return CentralTensor::identity(b.n(), 1);
  const PermutationWord w = word ? *word : reverse_word(order);
  if (w.strands != order) throw InputError("build_jn: word acts on the wrong number of strands");
  return compose(reversal_tensor(b.n(), order), word_tensor(b, w));
}

CentralTensor jn_from_yang_baxter(const CentralTensor& J) {
  const int n = J.n();
  CentralTensor out(n, 6);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          const Complex j1 = J(a, b, p, q);
          if (j1 == Complex{}) continue;
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d)
              for (int r = 0; r < n; ++r) {
                const Complex j12 = j1 * J(p, c, d, r);
                if (j12 == Complex{}) continue;
                for (int e = 0; e < n; ++e)
                  for (int f = 0; f < n; ++f) out(a, b, c, d, e, f) += j12 * J(q, r, e, f);
              }
        }
  return out;
}

CentralTensor j3_recursive(const Braiding& b) {
  const int n = b.n();
  const CentralTensor start = kron(CentralTensor::identity(n, 1), build_jn(b, 2));
  return compose(compose(start, flip_word(n, {3, {2, 1}})), word_tensor(b, {3, {1, 2}}));
}

CentralTensor j4_recursive_1_3(const Braiding& b) {
  const int n = b.n();
  const CentralTensor start = kron(CentralTensor::identity(n, 1), build_jn(b, 3));
  return compose(compose(start, flip_word(n, {4, {3, 2, 1}})), word_tensor(b, {4, {1, 2, 3}}));
}

CentralTensor j4_recursive_2_2(const Braiding& b) {
  const int n = b.n();
  const CentralTensor j2 = build_jn(b, 2);
  return compose(compose(kron(j2, j2), flip_word(n, {4, {2, 1, 3, 2}})),
                 word_tensor(b, {4, {2, 3, 1, 2}}));
}

double check_jn_involutive(const CentralTensor& Jn) {
  const CentralTensor id = CentralTensor::identity(Jn.n(), Jn.rank() / 2);
  return max_abs_diff(compose(Jn.conj(), Jn), id);
}

double check_fifa(const Braiding& b, int n, int i) {
  if (n < 2 || i < 1 || i > n - 1) throw InputError("check_fifa: slot out of range");
  const CentralTensor& Sinv = require_inverse(b);
  const CentralTensor R = reversal_tensor(b.n(), n);
  const CentralTensor lhs = compose(R, letter_tensor(b.S(), n, i));
  const CentralTensor rhs = compose(letter_tensor(Sinv, n, n - i).conj(), R);
  return max_abs_diff(lhs, rhs);
}

double check_sigma_inverse_j4(const Braiding& b) {
  const CentralTensor& Sinv = require_inverse(b);
  const CentralTensor J4 = build_jn(b, 4);
  const CentralTensor lhs = compose(J4, letter_tensor(Sinv, 4, 1));
  const CentralTensor rhs = compose(letter_tensor(b.S(), 4, 1).conj(), J4);
  return max_abs_diff(lhs, rhs);
}

double check_sigma_unitarity(const CentralTensor& S) {
  return check_jn_involutive(build_J(S));
}

double check_involution_compat(const CentralTensor& P, const CentralTensor& J, const CentralTensor& I) {
  return std::max(max_abs_diff(compose(P.conj(), J), I), max_abs_diff(compose(I, P), I));
}

double check_P_star(const CentralTensor& P) {
  const int n = P.n();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f) {
          Complex s{};
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) s += std::conj(P(a, b, c, d)) * P(d, c, e, f);
          worst = std::max(worst, std::abs(s - P(b, a, e, f)));
        }
  return worst;
}

double check_metric_reality(const CentralTensor& g, const CentralTensor& S) {
  const int n = g.n();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Complex s{};
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) s += S(a, b, c, d) * g(c, d);
      worst = std::max(worst, std::abs(s - std::conj(g(b, a))));
    }
  return worst;
}

FrameTensorField reality_image(const FrameTensorField& omega, const CentralTensor& J) {
  const int n = omega.frame_dim();
  FrameTensorField out(n, omega.matrix_dim(), 3);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        auto o = out.at(a, b, c);
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e) {
            const Complex w = J(d, e, b, c);
            if (w != Complex{}) o += w * omega.at(a, d, e).adjoint();
          }
      }
  return out;
}

double check_connection_reality(const Connection& conn, const CentralTensor& J) {
  return max_coeff_distance(reality_image(conn.omega, J), conn.omega);
}

D2Reality check_D2_reality(const Connection& conn) {
  const FrameGeometry& g = *conn.geom;
  const int n = g.n;
  const CentralTensor J2 = build_jn(conn.sigma, 2);
  const CentralTensor J3 = build_jn(conn.sigma, 3);
  D2Reality out;
  out.real1st = check_connection_reality(conn, J2);
  out.dopo = max_over_basis(n, g.N, 2, [&](const FrameTensorField& t) {
    return max_coeff_distance(D2(conn, star_form(t, J2)), star_form(D2(conn, t), J3));
  });
  out.equi = max_over_basis(n, g.N, 2, [&](const FrameTensorField& t) {
    return max_coeff_distance(D2(conn, apply_sigma_at(t, conn.sigma, 1)),
                              apply_sigma_at(D2(conn, t), conn.sigma, 2));
  });
  const FrameTensorField& w = conn.omega;
  AlgebraElement r(g.N, g.N);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e) {
            r.setZero();
            for (int p = 0; p < n; ++p) {
              r += J2(a, b, p, e) * w.at(p, c, d);
              r -= J2(a, p, d, e) * w.at(b, c, p);
              for (int q = 0; q < n; ++q) {
                for (int s = 0; s < n; ++s) {
                  const Complex k1 = J2(a, b, p, q) * J2(s, p, c, d);
                  if (k1 != Complex{}) r += k1 * w.at(q, s, e);
                  const Complex k2 = J2(q, b, c, p) * J2(s, p, d, e);
                  if (k2 != Complex{}) r -= k2 * w.at(a, q, s);
                }
              }
            }
            out.real2nd = std::max(out.real2nd, r.norm());
          }
  return out;
}

double check_Dn_reality(const Connection& conn, int n) {
  if (n < 1) throw InputError("check_Dn_reality: degree must be at least 1");
  const FrameGeometry& g = *conn.geom;
  const std::optional<CentralTensor> Jn =
      n == 1 ? std::nullopt : std::optional<CentralTensor>(build_jn(conn.sigma, n));
  const CentralTensor Jn1 = build_jn(conn.sigma, n + 1);
  return max_over_basis(g.n, g.N, n, [&](const FrameTensorField& t) {
    return max_coeff_distance(Dn(conn, star_form(t, Jn)), star_form(Dn(conn, t), Jn1));
  });
}

double check_wedge_star(const FrameGeometry& geom, const CentralTensor& J,
                        const AlgebraElement& f, const AlgebraElement& g) {
  const double basis_part = max_abs_diff(compose(geom.P.conj(), J), build_I(geom.P));
  const FrameTensorField df = differential0(f, geom);
  const FrameTensorField dg = differential0(g, geom);
  const FrameTensorField lhs = wedge_project(star_form(tensor_product(df, dg), J), 1, geom.P);
  const FrameTensorField rhs =
      -1.0 * wedge_project(tensor_product(star_form(dg, {}), star_form(df, {})), 1, geom.P);
  return std::max(basis_part, max_coeff_distance(lhs, rhs));
}

}  // namespace stehbein
