#pragma once

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace stehbein {

using Complex = std::complex<double>;

/// An element of the algebra M_N(C), stored densely.
using AlgebraElement = Eigen::MatrixXcd;

AlgebraElement identity_element(int N);
AlgebraElement zero_element(int N);

/// Conjugate transpose.
AlgebraElement adjoint(const AlgebraElement& a);

/// AB - BA. Throws InputError when the dimensions differ.
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);

double frobenius_norm(const AlgebraElement& a);

/// max_a ||[generators_a, a]||_F. Zero iff `a` commutes with every generator.
double centrality_residual(const AlgebraElement& a,
                           std::span<const AlgebraElement> generators);

/// ||a + a*||_F.
double antihermiticity_residual(const AlgebraElement& a);

void require_same_dim(const AlgebraElement& a, const AlgebraElement& b,
                      const char* what);

}  // namespace stehbein
