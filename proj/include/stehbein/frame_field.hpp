#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <vector>

#include "stehbein/central_tensor.hpp"
#include "stehbein/matalg.hpp"

namespace stehbein {

/// A degree-p element of Omega^1 (x) ... (x) Omega^1 written on the frame,
/// sum_A f_A theta^{a_1} (x) ... (x) theta^{a_p}, with every coefficient f_A
/// (an N x N matrix) to the left of the basis monomial.
///
/// The same layout is reused as a plain grid of algebra elements for
/// connection coefficients omega^a_{bc}, Maurer-Cartan elements C^a_{bc}
/// and curvature components.
///
/// Frame indices are 0-based. Slot positions, as in sigma_{12}, are 1-based.
class FrameTensorField {
 public:
  using CoeffMap = Eigen::Map<AlgebraElement>;
  using ConstCoeffMap = Eigen::Map<const AlgebraElement>;

  FrameTensorField() = default;
  FrameTensorField(int frame_dim, int matrix_dim, int degree);

  static FrameTensorField scalar(const AlgebraElement& f, int frame_dim);
  /// The monomial theta^{indices[0]} (x) ... with coefficient 1.
  static FrameTensorField basis(int frame_dim, int matrix_dim, std::span<const int> indices);
  static FrameTensorField basis(int frame_dim, int matrix_dim, std::initializer_list<int> indices);

  int frame_dim() const noexcept { return n_; }
  int matrix_dim() const noexcept { return N_; }
  int degree() const noexcept { return degree_; }
  std::size_t num_coeffs() const noexcept { return count_; }

  CoeffMap coeff(std::size_t flat);
  ConstCoeffMap coeff(std::size_t flat) const;
  CoeffMap coeff(std::span<const int> idx) { return coeff(flat_index(idx)); }
  ConstCoeffMap coeff(std::span<const int> idx) const { return coeff(flat_index(idx)); }

  template <std::integral... I>
  CoeffMap at(I... idx) {
    const int tmp[] = {static_cast<int>(idx)...};
    return coeff(flat_index(tmp));
  }
  template <std::integral... I>
  ConstCoeffMap at(I... idx) const {
    const int tmp[] = {static_cast<int>(idx)...};
    return coeff(flat_index(tmp));
  }

  std::size_t flat_index(std::span<const int> idx) const;
  std::vector<int> multi_index(std::size_t flat) const;

  std::span<Complex> raw() noexcept { return data_; }
  std::span<const Complex> raw() const noexcept { return data_; }

  /// Adjacent slot pairs (i, i+1), recorded by i, already projected by P.
  const std::set<int>& wedge_mask() const noexcept { return wedge_mask_; }
  void mark_wedge(int pos) { wedge_mask_.insert(pos); }
  void clear_wedge_mask() { wedge_mask_.clear(); }

  FrameTensorField& operator+=(const FrameTensorField& other);
  FrameTensorField& operator-=(const FrameTensorField& other);
  FrameTensorField& operator*=(Complex s);

 private:
  int n_ = 0;
  int N_ = 0;
  int degree_ = 0;
  std::size_t count_ = 0;
  std::vector<Complex> data_;
  std::set<int> wedge_mask_;
};

FrameTensorField operator+(FrameTensorField a, const FrameTensorField& b);
FrameTensorField operator-(FrameTensorField a, const FrameTensorField& b);
FrameTensorField operator*(Complex s, FrameTensorField a);

void require_same_shape(const FrameTensorField& a, const FrameTensorField& b, const char* what);

FrameTensorField left_mul(const AlgebraElement& f, const FrameTensorField& t);
FrameTensorField right_mul(const FrameTensorField& t, const AlgebraElement& f);
FrameTensorField tensor_product(const FrameTensorField& t1, const FrameTensorField& t2);

/// theta^A -> M^A_C theta^C on slots pos..pos+k-1 for M of rank 2k.
FrameTensorField apply_central_at(const FrameTensorField& t, const CentralTensor& m, int pos);

/// apply_central_at with P on (pos, pos+1), recording the pair in the wedge mask.
FrameTensorField wedge_project(const FrameTensorField& t, int pos, const CentralTensor& P);

/// Largest Frobenius norm over all coefficients.
double max_coeff_norm(const FrameTensorField& t);
double max_coeff_distance(const FrameTensorField& a, const FrameTensorField& b);

}  // namespace stehbein
