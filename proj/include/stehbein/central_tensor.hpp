#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "stehbein/matalg.hpp"

namespace stehbein {

/// A tensor with plain complex entries over frame indices {0..n-1}.
///
/// Entries are stored row-major, upper indices first: S^{ab}_{cd} lives at
/// (a, b, c, d). A tensor of rank 2k doubles as a linear map on the degree-k
/// frame basis, theta^A -> M^A_C theta^C; its row index is the upper
/// multi-index and its column index the lower one.
class CentralTensor {
 public:
  CentralTensor() = default;
  CentralTensor(int n, int rank);

  static CentralTensor identity(int n, int order);
  /// S^{ab}_{cd} = delta^a_d delta^b_c.
  static CentralTensor flip(int n);
  /// P^{ab}_{cd} = (delta^a_c delta^b_d - delta^a_d delta^b_c) / 2.
  static CentralTensor antisymmetrizer(int n);
  static CentralTensor from_matrix(int n, const Eigen::MatrixXcd& m);

  int n() const noexcept { return n_; }
  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return data_.size(); }
  /// n^(rank/2); only meaningful for even rank.
  std::size_t block() const noexcept;

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  Complex& operator[](std::size_t flat) { return data_[flat]; }
  const Complex& operator[](std::size_t flat) const { return data_[flat]; }

  template <std::integral... I>
  Complex& operator()(I... idx) {
    return data_[flat_index({static_cast<int>(idx)...})];
  }
  template <std::integral... I>
  const Complex& operator()(I... idx) const {
    return data_[flat_index({static_cast<int>(idx)...})];
  }

  std::size_t flat_index(std::initializer_list<int> idx) const;
  std::size_t flat_index(std::span<const int> idx) const;

  Eigen::MatrixXcd as_matrix() const;
  CentralTensor conj() const;
  double max_abs() const;

  CentralTensor& operator+=(const CentralTensor& other);
  CentralTensor& operator-=(const CentralTensor& other);
  CentralTensor& operator*=(Complex s);

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<Complex> data_;
};

CentralTensor operator+(CentralTensor a, const CentralTensor& b);
CentralTensor operator-(CentralTensor a, const CentralTensor& b);
CentralTensor operator*(Complex s, CentralTensor a);

double max_abs_diff(const CentralTensor& a, const CentralTensor& b);

/// The map "apply `first`, then `second`": (first;second)^A_C = sum_B first^A_B second^B_C.
CentralTensor compose(const CentralTensor& first, const CentralTensor& second);

/// Follows the map `op` (rank 2p) by `m` (rank 2k) acting on slots pos..pos+k-1
/// of its output. Slots are 1-based.
CentralTensor then_at(const CentralTensor& op, const CentralTensor& m, int pos);

/// The same as then_at but `m` acts on the input side: first `m` at pos, then `op`.
CentralTensor before_at(const CentralTensor& m, int pos, const CentralTensor& op);

/// Permutes the upper indices: result^{A}_{C} = t^{A'}_{C} where A'_j = A_{perm[j]}.
CentralTensor permute_upper(const CentralTensor& t, std::span<const int> perm);

}  // namespace stehbein
