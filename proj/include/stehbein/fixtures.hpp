#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "stehbein/braiding.hpp"
#include "stehbein/calculus.hpp"
#include "stehbein/connection.hpp"

namespace stehbein::fixtures {

using Rng = std::mt19937_64;

/// Pauli_1 = [[0,1],[1,0]], Pauli_2 = [[0,-i],[i,0]], Pauli_3 = [[1,0],[0,-1]]; k is 0-based.
AlgebraElement pauli(int k);

/// lambda_a = -(i/2) Pauli_a, so [lambda_1, lambda_2] = lambda_3.
std::vector<AlgebraElement> su2_lambda();

/// Levi-Civita symbol on 0-based indices.
double epsilon(int a, int b, int c);

/// N = 2, n = 3, su(2) generators, antisymmetrizer P, flip S (tau = 2),
/// F^c_{ab} = eps_{abc}, K = 0, g = delta.
FrameGeometry su2_flip_geometry();

/// D_(0) plus the minimum-norm central chi that removes the torsion.
/// On the flip geometry this is omega^a_{bc} = 1/2 eps_{abc}.
Connection su2_torsionfree_connection();

struct PhaseTwist {
  Braiding sigma;
  CentralTensor P;  ///< (delta - S) / 2
};

/// S^{ab}_{cd} = Lambda_{ab} delta^a_d delta^b_c. Lambda is an n x n matrix with
/// unit-modulus entries, Lambda_{ab} Lambda_{ba} = 1 and Lambda_{aa} = 1.
PhaseTwist phase_twist_braiding(const Eigen::MatrixXcd& Lambda, double tol = 1e-12);

/// Lambda_{ab} = exp(i phi_{ab}) above the diagonal with phi uniform in [0, 2 pi).
Eigen::MatrixXcd random_phases(int n, Rng& rng);

/// Lambda_{12} = exp(i pi / 5), its forced partner, and 1 elsewhere.
Eigen::MatrixXcd default_twist_phases();

/// su(2) generators with the phase-twist braiding for a 3 x 3 Lambda. P is the
/// antisymmetrizer restricted to the pairs with Lambda_{ab} = 1, which keeps
/// pi o (sigma + 1) = 0 and d^2 = 0; F^c_{ab} = eps_{dec} P^{de}_{ab}, K = 0, g = delta.
FrameGeometry su2_twist_geometry(const Eigen::MatrixXcd& Lambda);

/// Entries uniform in the complex unit square [-1,1] + i[-1,1].
AlgebraElement random_element(int N, Rng& rng);
FrameTensorField random_field(int n, int N, int degree, Rng& rng);
CentralTensor random_tensor(int n, int rank, Rng& rng);

/// A random tau as a rank-4 tensor with unit-square entries.
CentralTensor random_tau(int n, std::uint64_t seed);

/// Hermitian projector of the given rank on C^dim: eigenvectors of a random
/// hermitian matrix with eigenvalues rounded to {0, 1}.
Eigen::MatrixXcd random_projector(int dim, int rank, Rng& rng);

struct RandomGeometryOptions {
  int n = 3;
  int N = 3;
  bool solve_structure = true;  ///< fit F, K to the structure condition by least squares
};

/// Generic geometry: antihermitianized random lambda, a random projector P of
/// rank n(n-1)/2, F reduced by P, sigma from a random tau, g = delta.
FrameGeometry random_geometry(std::uint64_t seed, const RandomGeometryOptions& opt = {});

/// Spin-j su(2) generators (N = 2j + 1, j in {1/2, 1, 3/2}) in a random real
/// frame, conjugated by a random unitary and shifted by central i kappa_a.
/// Satisfies the structure condition with an antisymmetrizer P.
FrameGeometry random_su2_geometry(std::uint64_t seed);

/// Commuting diagonal antihermitian lambda, a real projector onto a random
/// subspace of antisymmetric tensors, F = 0, K = 0, sigma from a random tau.
FrameGeometry random_flat_geometry(std::uint64_t seed, int n = 3);

/// sigma-unitary but braid-violating: J = exp(iH) for real symmetric H,
/// S^{ab}_{cd} = J^{ba}_{cd}.
Braiding braid_violating_braiding(int n, std::uint64_t seed, double scale = 1.0);

/// Central grid delta omega = 1/2 (X + R(X)) for a random central X, where R is
/// the reality map of J: adding it to a real connection keeps it real.
FrameTensorField real_central_perturbation(const CentralTensor& J, int N, Rng& rng);

/// Registered fixture names, for the CLI.
const std::vector<std::string>& fixture_names();

/// A geometry by registered name ("random*" fixtures use `seed`). The
/// torsion-free fixture stores its omega in the geometry.
FrameGeometry geometry_by_name(const std::string& name, std::uint64_t seed);

}  // namespace stehbein::fixtures
