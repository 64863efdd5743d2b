#pragma once

#include <optional>

#include "stehbein/central_tensor.hpp"
#include "stehbein/frame_field.hpp"
#include "stehbein/permutation_word.hpp"

namespace stehbein {

/// The generalized permutation sigma(theta^a (x) theta^b) = S^{ab}_{cd} theta^c (x) theta^d.
///
/// The inverse is computed once by dense inversion of the n^2 x n^2 matrix and
/// dropped when the condition number exceeds `kMaxCondition`.
class Braiding {
 public:
  static constexpr double kMaxCondition = 1e12;

  Braiding() = default;
  explicit Braiding(CentralTensor S);

  int n() const noexcept { return S_.n(); }
  const CentralTensor& S() const noexcept { return S_; }
  const std::optional<CentralTensor>& S_inv() const noexcept { return S_inv_; }
  double condition_number() const noexcept { return condition_; }

 private:
  CentralTensor S_;
  std::optional<CentralTensor> S_inv_;
  double condition_ = 0.0;
};

/// S = T (delta - P) - delta, the general solution of pi o (sigma + 1) = 0.
Braiding sigma_from_tau(const CentralTensor& T, const CentralTensor& P);

/// max |((S + delta) P)^{ab}_{ef}|.
double check_sigma_consistency(const CentralTensor& S, const CentralTensor& P);

FrameTensorField apply_sigma_at(const FrameTensorField& t, const Braiding& b, int pos);
/// Throws InputError when the braiding has no usable inverse.
FrameTensorField apply_sigma_inverse_at(const FrameTensorField& t, const Braiding& b, int pos);

FrameTensorField apply_word(const FrameTensorField& t, const Braiding& b, const PermutationWord& w);

/// The word as a map on the degree-`w.strands` basis (rank 2 * strands).
CentralTensor word_tensor(const Braiding& b, const PermutationWord& w);

/// max-entry difference between sigma_12 sigma_23 sigma_12 and sigma_23 sigma_12 sigma_23.
double check_braid(const Braiding& b);

/// max-entry difference between J^{ab}_{pq} J^{pc}_{dr} J^{qr}_{ef} and
/// J^{bc}_{pq} J^{aq}_{rf} J^{rp}_{de}.
double check_yang_baxter(const CentralTensor& J);

/// Composite sigma word for the p-block (x) k-block exchange; (1,1) is sigma itself.
PermutationWord extend_sigma_block(int p, int k);

/// Largest difference between the two bracketings (MoveLeft / MoveRight words)
/// over all block splits with p + k <= max_degree.
double check_block_unambiguous(const Braiding& b, int max_degree);

/// Braid equation for the extended map on three blocks of sizes (p, q, r).
double check_block_braid(const Braiding& b, int p, int q, int r);

enum class WedgeSide {
  TwoOne,  ///< Omega^2 (x) Omega^1 -> Omega^1 (x) Omega^2
  OneTwo,  ///< Omega^1 (x) Omega^2 -> Omega^2 (x) Omega^1
};

/// sigma on a wedge factor: the block exchange followed by projection of the
/// output wedge pair. The input must be P-invariant on its wedge pair.
FrameTensorField sigma_on_wedge(const FrameTensorField& t, const Braiding& b,
                                const CentralTensor& P, WedgeSide side, double tol = 1e-9);

}  // namespace stehbein
