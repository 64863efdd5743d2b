#include "stehbein/central_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detail/contract.hpp"
#include "stehbein/errors.hpp"

namespace stehbein {

using detail::ipow;

CentralTensor::CentralTensor(int n, int rank) : n_(n), rank_(rank) {
  if (n < 1 || rank < 0) throw InputError("CentralTensor: invalid shape");
  data_.assign(ipow(static_cast<std::size_t>(n), rank), Complex{});
}

std::size_t CentralTensor::block() const noexcept {
  return ipow(static_cast<std::size_t>(n_), rank_ / 2);
}

std::size_t CentralTensor::flat_index(std::initializer_list<int> idx) const {
  return flat_index(std::span<const int>(idx.begin(), idx.size()));
}

std::size_t CentralTensor::flat_index(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != rank_) {
    throw InputError("CentralTensor: expected " + std::to_string(rank_) + " indices");
  }
  std::size_t flat = 0;
  for (int i : idx) {
    if (i < 0 || i >= n_) throw InputError("CentralTensor: index out of range");
    flat = flat * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
  }
  return flat;
}

CentralTensor CentralTensor::identity(int n, int order) {
  CentralTensor t(n, 2 * order);
  const std::size_t b = t.block();
  for (std::size_t i = 0; i < b; ++i) t.data_[i * b + i] = 1.0;
  return t;
}

CentralTensor CentralTensor::flip(int n) {
  CentralTensor t(n, 4);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t(a, b, b, a) = 1.0;
  return t;
}

CentralTensor CentralTensor::antisymmetrizer(int n) {
  CentralTensor t(n, 4);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t(a, b, a, b) += 0.5;
      t(a, b, b, a) -= 0.5;
    }
  return t;
}

CentralTensor CentralTensor::from_matrix(int n, const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw InputError("CentralTensor::from_matrix: not square");
  int order = 0;
  std::size_t b = 1;
  while (b < static_cast<std::size_t>(m.rows())) {
    b *= static_cast<std::size_t>(n);
    ++order;
  }
  if (b != static_cast<std::size_t>(m.rows())) {
    throw InputError("CentralTensor::from_matrix: size is not a power of n");
  }
  CentralTensor t(n, 2 * order);
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < b; ++c)
      t.data_[r * b + c] = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return t;
}

Eigen::MatrixXcd CentralTensor::as_matrix() const {
  if (rank_ % 2 != 0) throw InputError("CentralTensor::as_matrix: odd rank");
  const std::size_t b = block();
  Eigen::MatrixXcd m(b, b);
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < b; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = data_[r * b + c];
  return m;
}

CentralTensor CentralTensor::conj() const {
  CentralTensor t = *this;
  for (auto& z : t.data_) z = std::conj(z);
  return t;
}

double CentralTensor::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

namespace {
void require_same_shape(const CentralTensor& a, const CentralTensor& b, const char* what) {
  if (a.n() != b.n() || a.rank() != b.rank()) {
    throw InputError(std::string(what) + ": shape mismatch");
  }
}
}  // namespace

CentralTensor& CentralTensor::operator+=(const CentralTensor& other) {
  require_same_shape(*this, other, "CentralTensor +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CentralTensor& CentralTensor::operator-=(const CentralTensor& other) {
  require_same_shape(*this, other, "CentralTensor -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CentralTensor& CentralTensor::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CentralTensor operator+(CentralTensor a, const CentralTensor& b) { return a += b; }
CentralTensor operator-(CentralTensor a, const CentralTensor& b) { return a -= b; }
CentralTensor operator*(Complex s, CentralTensor a) { return a *= s; }

double max_abs_diff(const CentralTensor& a, const CentralTensor& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

CentralTensor compose(const CentralTensor& first, const CentralTensor& second) {
  require_same_shape(first, second, "compose");
  return CentralTensor::from_matrix(first.n(), first.as_matrix() * second.as_matrix());
}

CentralTensor then_at(const CentralTensor& op, const CentralTensor& m, int pos) {
  if (op.n() != m.n() || op.rank() % 2 != 0 || m.rank() % 2 != 0) {
    throw InputError("then_at: shape mismatch");
  }
  const int p = op.rank() / 2;
  const int k = m.rank() / 2;
  if (pos < 1 || pos + k - 1 > p) throw InputError("then_at: slot out of range");
  const auto n = static_cast<std::size_t>(op.n());
  CentralTensor out(op.n(), op.rank());
  detail::contract_middle(op.data().data(), out.data().data(), ipow(n, p + pos - 1),
                          ipow(n, k), ipow(n, p - pos - k + 1), m.data().data());
  return out;
}

CentralTensor before_at(const CentralTensor& m, int pos, const CentralTensor& op) {
  if (op.n() != m.n() || op.rank() % 2 != 0 || m.rank() % 2 != 0) {
    throw InputError("before_at: shape mismatch");
  }
  const int p = op.rank() / 2;
  const int k = m.rank() / 2;
  if (pos < 1 || pos + k - 1 > p) throw InputError("before_at: slot out of range");
  const auto n = static_cast<std::size_t>(op.n());
  // new^{..a..}_C = sum_b m^a_b op^{..b..}_C, i.e. the kernel with m transposed.
  const std::size_t blk = ipow(n, k);
  std::vector<Complex> mt(blk * blk);
  for (std::size_t a = 0; a < blk; ++a)
    for (std::size_t b = 0; b < blk; ++b) mt[b * blk + a] = m.data()[a * blk + b];
  CentralTensor out(op.n(), op.rank());
  detail::contract_middle(op.data().data(), out.data().data(), ipow(n, pos - 1), blk,
                          ipow(n, p - pos - k + 1) * ipow(n, p), mt.data());
  return out;
}

CentralTensor permute_upper(const CentralTensor& t, std::span<const int> perm) {
  const int p = t.rank() / 2;
  if (static_cast<int>(perm.size()) != p) throw InputError("permute_upper: bad permutation");
  const auto n = static_cast<std::size_t>(t.n());
  const std::size_t blk = t.block();
  CentralTensor out(t.n(), t.rank());
  std::vector<int> digits(p), source(p);
  for (std::size_t row = 0; row < blk; ++row) {
    std::size_t r = row;
    for (int j = p - 1; j >= 0; --j) {
      digits[j] = static_cast<int>(r % n);
      r /= n;
    }
    std::size_t src = 0;
    for (int j = 0; j < p; ++j) src = src * n + static_cast<std::size_t>(digits[perm[j]]);
    for (std::size_t c = 0; c < blk; ++c) out[row * blk + c] = t[src * blk + c];
  }
  return out;
}

}  // namespace stehbein
