#include "stehbein/braiding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stehbein/errors.hpp"

namespace stehbein {

Braiding::Braiding(CentralTensor S) : S_(std::move(S)) {
  if (S_.rank() != 4) throw InputError("Braiding: S must have rank 4");
  const Eigen::MatrixXcd m = S_.as_matrix();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  condition_ = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  if (condition_ <= kMaxCondition) {
    S_inv_ = CentralTensor::from_matrix(S_.n(), m.inverse());
  }
}

Braiding sigma_from_tau(const CentralTensor& T, const CentralTensor& P) {
  if (T.rank() != 4 || P.rank() != 4 || T.n() != P.n()) {
    throw InputError("sigma_from_tau: T and P must be rank-4 tensors of equal n");
  }
  const CentralTensor delta = CentralTensor::identity(T.n(), 2);
  return Braiding(compose(T, delta - P) - delta);
}

double check_sigma_consistency(const CentralTensor& S, const CentralTensor& P) {
  const CentralTensor delta = CentralTensor::identity(S.n(), 2);
  return compose(S + delta, P).max_abs();
}

FrameTensorField apply_sigma_at(const FrameTensorField& t, const Braiding& b, int pos) {
  return apply_central_at(t, b.S(), pos);
}

FrameTensorField apply_sigma_inverse_at(const FrameTensorField& t, const Braiding& b, int pos) {
  if (!b.S_inv()) throw InputError("sigma is not invertible (condition number too large)");
  return apply_central_at(t, *b.S_inv(), pos);
}

FrameTensorField apply_word(const FrameTensorField& t, const Braiding& b, const PermutationWord& w) {
  if (w.strands > t.degree()) throw InputError("apply_word: word longer than field degree");
  FrameTensorField out = t;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out = apply_sigma_at(out, b, *it);
  }
  return out;
}

CentralTensor word_tensor(const Braiding& b, const PermutationWord& w) {
  CentralTensor op = CentralTensor::identity(b.n(), w.strands);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    op = then_at(op, b.S(), *it);
  }
  return op;
}

double check_braid(const Braiding& b) {
  return max_abs_diff(word_tensor(b, {3, {1, 2, 1}}), word_tensor(b, {3, {2, 1, 2}}));
}

double check_yang_baxter(const CentralTensor& J) {
  if (J.rank() != 4) throw InputError("check_yang_baxter: J must have rank 4");
  const int n = J.n();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f) {
              Complex lhs{}, rhs{};
              for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                  for (int r = 0; r < n; ++r) {
                    lhs += J(a, b, p, q) * J(p, c, d, r) * J(q, r, e, f);
                    rhs += J(b, c, p, q) * J(a, q, r, f) * J(r, p, d, e);
                  }
              worst = std::max(worst, std::abs(lhs - rhs));
            }
  return worst;
}

PermutationWord extend_sigma_block(int p, int k) { return block_word(p, k, BlockOrder::MoveLeft); }

double check_block_unambiguous(const Braiding& b, int max_degree) {
  double worst = 0.0;
  for (int total = 2; total <= max_degree; ++total)
    for (int p = 1; p < total; ++p) {
      const int k = total - p;
      worst = std::max(worst, max_abs_diff(word_tensor(b, block_word(p, k, BlockOrder::MoveLeft)),
                                           word_tensor(b, block_word(p, k, BlockOrder::MoveRight))));
    }
  return worst;
}

double check_block_braid(const Braiding& b, int p, int q, int r) {
  const int total = p + q + r;
  // Blocks X, Y, Z of sizes p, q, r.
  // Left side: exchange(X,Y) at front, then exchange(X,Z) behind Y, then exchange(Y,Z) at front.
  const PermutationWord xy = shifted(block_word(p, q), 0, total);
  const PermutationWord xz_after_y = shifted(block_word(p, r), q, total);
  const PermutationWord yz = shifted(block_word(q, r), 0, total);
  const PermutationWord lhs = concat(yz, concat(xz_after_y, xy));
  // Right side: exchange(Y,Z) behind X, exchange(X,Z) at front, exchange(X,Y) behind Z.
  const PermutationWord yz_after_x = shifted(block_word(q, r), p, total);
  const PermutationWord xz = shifted(block_word(p, r), 0, total);
  const PermutationWord xy_after_z = shifted(block_word(p, q), r, total);
  const PermutationWord rhs = concat(xy_after_z, concat(xz, yz_after_x));
  return max_abs_diff(word_tensor(b, lhs), word_tensor(b, rhs));
}

FrameTensorField sigma_on_wedge(const FrameTensorField& t, const Braiding& b,
                                const CentralTensor& P, WedgeSide side, double tol) {
  if (t.degree() != 3) throw InputError("sigma_on_wedge: expected a degree-3 field");
  const int in_pair = side == WedgeSide::TwoOne ? 1 : 2;
  const int out_pair = side == WedgeSide::TwoOne ? 2 : 1;
  const double defect = max_coeff_distance(apply_central_at(t, P, in_pair), t);
  if (defect > tol) {
    throw InvariantViolation("sigma_on_wedge_input_projected", defect);
  }
  const PermutationWord w = side == WedgeSide::TwoOne ? extend_sigma_block(2, 1)
                                                      : extend_sigma_block(1, 2);
  return wedge_project(apply_word(t, b, w), out_pair, P);
}

}  // namespace stehbein
