#include "stehbein/frame_field.hpp"

#include <algorithm>
#include <string>

#include "detail/contract.hpp"
#include "stehbein/errors.hpp"

namespace stehbein {

using detail::ipow;

FrameTensorField::FrameTensorField(int frame_dim, int matrix_dim, int degree)
    : n_(frame_dim), N_(matrix_dim), degree_(degree) {
  if (frame_dim < 1 || matrix_dim < 1 || degree < 0) {
    throw InputError("FrameTensorField: invalid shape");
  }
  count_ = ipow(static_cast<std::size_t>(n_), degree_);
  data_.assign(count_ * static_cast<std::size_t>(N_ * N_), Complex{});
}

FrameTensorField FrameTensorField::scalar(const AlgebraElement& f, int frame_dim) {
  FrameTensorField t(frame_dim, static_cast<int>(f.rows()), 0);
  t.coeff(0) = f;
  return t;
}

FrameTensorField FrameTensorField::basis(int frame_dim, int matrix_dim,
                                         std::span<const int> indices) {
  FrameTensorField t(frame_dim, matrix_dim, static_cast<int>(indices.size()));
  t.coeff(indices).setIdentity();
  return t;
}

FrameTensorField FrameTensorField::basis(int frame_dim, int matrix_dim,
                                         std::initializer_list<int> indices) {
  return basis(frame_dim, matrix_dim, std::span<const int>(indices.begin(), indices.size()));
}

FrameTensorField::CoeffMap FrameTensorField::coeff(std::size_t flat) {
  return CoeffMap(data_.data() + flat * static_cast<std::size_t>(N_ * N_), N_, N_);
}

FrameTensorField::ConstCoeffMap FrameTensorField::coeff(std::size_t flat) const {
  return ConstCoeffMap(data_.data() + flat * static_cast<std::size_t>(N_ * N_), N_, N_);
}

std::size_t FrameTensorField::flat_index(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != degree_) {
    throw InputError("FrameTensorField: expected " + std::to_string(degree_) + " indices");
  }
  std::size_t flat = 0;
  for (int i : idx) {
    if (i < 0 || i >= n_) throw InputError("FrameTensorField: index out of range");
    flat = flat * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
  }
  return flat;
}

std::vector<int> FrameTensorField::multi_index(std::size_t flat) const {
  std::vector<int> idx(static_cast<std::size_t>(degree_));
  for (int j = degree_ - 1; j >= 0; --j) {
    idx[static_cast<std::size_t>(j)] = static_cast<int>(flat % static_cast<std::size_t>(n_));
    flat /= static_cast<std::size_t>(n_);
  }
  return idx;
}

void require_same_shape(const FrameTensorField& a, const FrameTensorField& b, const char* what) {
  if (a.frame_dim() != b.frame_dim() || a.matrix_dim() != b.matrix_dim() ||
      a.degree() != b.degree()) {
    throw InputError(std::string(what) + ": field shape mismatch");
  }
}

FrameTensorField& FrameTensorField::operator+=(const FrameTensorField& other) {
  require_same_shape(*this, other, "field +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

FrameTensorField& FrameTensorField::operator-=(const FrameTensorField& other) {
  require_same_shape(*this, other, "field -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

FrameTensorField& FrameTensorField::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

FrameTensorField operator+(FrameTensorField a, const FrameTensorField& b) { return a += b; }
FrameTensorField operator-(FrameTensorField a, const FrameTensorField& b) { return a -= b; }
FrameTensorField operator*(Complex s, FrameTensorField a) { return a *= s; }

namespace {
void require_dim(const AlgebraElement& f, const FrameTensorField& t, const char* what) {
  if (f.rows() != t.matrix_dim() || f.cols() != t.matrix_dim()) {
    throw InputError(std::string(what) + ": dimension mismatch");
  }
}
}  // namespace

FrameTensorField left_mul(const AlgebraElement& f, const FrameTensorField& t) {
  require_dim(f, t, "left_mul");
  FrameTensorField out = t;
  for (std::size_t i = 0; i < t.num_coeffs(); ++i) out.coeff(i) = f * t.coeff(i);
  return out;
}

FrameTensorField right_mul(const FrameTensorField& t, const AlgebraElement& f) {
  require_dim(f, t, "right_mul");
  FrameTensorField out = t;
  for (std::size_t i = 0; i < t.num_coeffs(); ++i) out.coeff(i) = t.coeff(i) * f;
  return out;
}

FrameTensorField tensor_product(const FrameTensorField& t1, const FrameTensorField& t2) {
  if (t1.frame_dim() != t2.frame_dim() || t1.matrix_dim() != t2.matrix_dim()) {
    throw InputError("tensor_product: dimension mismatch");
  }
  FrameTensorField out(t1.frame_dim(), t1.matrix_dim(), t1.degree() + t2.degree());
  const std::size_t n2 = t2.num_coeffs();
  for (std::size_t a = 0; a < t1.num_coeffs(); ++a) {
    const auto fa = t1.coeff(a);
    if (fa.isZero(0.0)) continue;
    for (std::size_t b = 0; b < n2; ++b) out.coeff(a * n2 + b).noalias() = fa * t2.coeff(b);
  }
  for (int pos : t1.wedge_mask()) out.mark_wedge(pos);
  for (int pos : t2.wedge_mask()) out.mark_wedge(pos + t1.degree());
  return out;
}

FrameTensorField apply_central_at(const FrameTensorField& t, const CentralTensor& m, int pos) {
  if (m.n() != t.frame_dim() || m.rank() % 2 != 0) {
    throw InputError("apply_central_at: tensor shape mismatch");
  }
  const int k = m.rank() / 2;
  if (pos < 1 || pos + k - 1 > t.degree()) {
    throw InputError("apply_central_at: slot " + std::to_string(pos) + " out of range for degree " +
                     std::to_string(t.degree()));
  }
  const auto n = static_cast<std::size_t>(t.frame_dim());
  const auto elem = static_cast<std::size_t>(t.matrix_dim() * t.matrix_dim());
  FrameTensorField out(t.frame_dim(), t.matrix_dim(), t.degree());
  detail::contract_middle(t.raw().data(), out.raw().data(), ipow(n, pos - 1), ipow(n, k),
                          ipow(n, t.degree() - pos - k + 1) * elem, m.data().data());
  return out;
}

FrameTensorField wedge_project(const FrameTensorField& t, int pos, const CentralTensor& P) {
  if (P.rank() != 4) throw InputError("wedge_project: P must have rank 4");
  FrameTensorField out = apply_central_at(t, P, pos);
  for (int w : t.wedge_mask()) {
    if (w + 1 < pos || w > pos + 1) out.mark_wedge(w);
  }
  out.mark_wedge(pos);
  return out;
}

double max_coeff_norm(const FrameTensorField& t) {
  double m = 0.0;
  for (std::size_t i = 0; i < t.num_coeffs(); ++i) m = std::max(m, t.coeff(i).norm());
  return m;
}

double max_coeff_distance(const FrameTensorField& a, const FrameTensorField& b) {
  require_same_shape(a, b, "max_coeff_distance");
  double m = 0.0;
  for (std::size_t i = 0; i < a.num_coeffs(); ++i) m = std::max(m, (a.coeff(i) - b.coeff(i)).norm());
  return m;
}

}  // namespace stehbein
