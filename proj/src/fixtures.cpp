#include "stehbein/fixtures.hpp"

#include <cmath>
#include <tuple>
#include <numbers>

#include "stehbein/errors.hpp"
#include "stehbein/involution.hpp"

namespace stehbein::fixtures {

namespace {

using namespace std::complex_literals;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex unit_square(Rng& rng) { return {uniform(rng, -1, 1), uniform(rng, -1, 1)}; }

CentralTensor reduce_by_P(const CentralTensor& F, const CentralTensor& P) {
  const int n = F.n();
  CentralTensor out(n, 3);
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d)
      for (int e = 0; e < n; ++e) {
        Complex s{};
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) s += F(a, b, c) * P(b, c, d, e);
        out(a, d, e) = s;
      }
  return out;
}

// Least-squares F, K with 2 lambda_c lambda_d P^{cd}_{ab} ~ lambda_c F^c_{ab} + K_{ab}.
void fit_structure(FrameGeometry& g) {
  const int n = g.n;
  const int N2 = g.N * g.N;
  Eigen::MatrixXcd basis(N2, n + 1);
  for (int c = 0; c < n; ++c) basis.col(c) = g.lambda[static_cast<std::size_t>(c)].reshaped();
  basis.col(n) = AlgebraElement::Identity(g.N, g.N).reshaped();
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(basis);
  g.F = CentralTensor(n, 3);
  g.K = CentralTensor(n, 2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      AlgebraElement lhs = AlgebraElement::Zero(g.N, g.N);
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const Complex w = g.P(c, d, a, b);
          if (w != Complex{}) lhs += 2.0 * w * g.lambda[static_cast<std::size_t>(c)] *
                                     g.lambda[static_cast<std::size_t>(d)];
        }
      const Eigen::VectorXcd x = cod.solve(Eigen::VectorXcd(lhs.reshaped()));
      for (int c = 0; c < n; ++c) g.F(c, a, b) = x(c);
      g.K(a, b) = x(n);
    }
}

FrameGeometry with_sigma(FrameGeometry g, const CentralTensor& tau) {
  g.tau = tau;
  g.S = sigma_from_tau(tau, g.P).S();
  return g;
}

}  // namespace

AlgebraElement pauli(int k) {
  AlgebraElement m = AlgebraElement::Zero(2, 2);
  switch (k) {
    case 0: m << 0, 1, 1, 0; break;
    case 1: m << 0, -1i, 1i, 0; break;
    case 2: m << 1, 0, 0, -1; break;
    default: throw InputError("pauli: index must be 0, 1 or 2");
  }
  return m;
}

std::vector<AlgebraElement> su2_lambda() {
  std::vector<AlgebraElement> out;
  for (int k = 0; k < 3; ++k) out.push_back(-0.5i * pauli(k));
  return out;
}

double epsilon(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0.0;
  return ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
}

FrameGeometry su2_flip_geometry() {
  FrameGeometry g;
  g.name = "su2-flip";
  g.N = 2;
  g.n = 3;
  g.lambda = su2_lambda();
  g.P = CentralTensor::antisymmetrizer(3);
  g.F = CentralTensor(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) g.F(c, a, b) = epsilon(a, b, c);
  g.K = CentralTensor(3, 2);
  g.g = CentralTensor::identity(3, 1);
  return with_sigma(std::move(g), 2.0 * CentralTensor::identity(3, 2));
}

Connection su2_torsionfree_connection() {
  auto geom = std::make_shared<const FrameGeometry>(su2_flip_geometry());
  const Connection base = d0_connection(geom, Braiding(geom->S));
  return with_central_correction(base, solve_torsion_free_chi(base));
}

PhaseTwist phase_twist_braiding(const Eigen::MatrixXcd& Lambda, double tol) {
  const int n = static_cast<int>(Lambda.rows());
  if (Lambda.cols() != n || n < 1) throw InputError("phase_twist_braiding: Lambda must be square");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (std::abs(std::abs(Lambda(a, b)) - 1.0) > tol) {
        throw InputError("phase_twist_braiding: Lambda entries must have unit modulus");
      }
      if (std::abs(Lambda(a, b) * Lambda(b, a) - 1.0) > tol) {
        throw InputError("phase_twist_braiding: Lambda_ab Lambda_ba must equal 1");
      }
    }
  CentralTensor S(n, 4);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) S(a, b, b, a) = Lambda(a, b);
  CentralTensor P = CentralTensor::identity(n, 2) - S;
  P *= 0.5;
  return {Braiding(std::move(S)), std::move(P)};
}

Eigen::MatrixXcd random_phases(int n, Rng& rng) {
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Ones(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      L(a, b) = std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
      L(b, a) = std::conj(L(a, b));
    }
  return L;
}

FrameGeometry su2_twist_geometry(const Eigen::MatrixXcd& Lambda) {
  if (Lambda.rows() != 3) throw InputError("su2_twist_geometry: Lambda must be 3 x 3");
  PhaseTwist twist = phase_twist_braiding(Lambda);
  FrameGeometry g;
  g.name = "su2-twist";
  g.N = 2;
  g.n = 3;
  g.lambda = su2_lambda();
  g.S = twist.sigma.S();
  // Antisymmetrizer restricted to the untwisted pairs.
  g.P = CentralTensor(3, 4);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      if (std::abs(Lambda(a, b) - 1.0) > 1e-12) continue;
      for (auto [c, d, w] : {std::tuple{a, b, 0.5}, std::tuple{b, a, -0.5}}) {
        g.P(a, b, c, d) += w;
        g.P(b, a, c, d) -= w;
      }
    }
  g.F = CentralTensor(3, 3);
  for (int c = 0; c < 3; ++c)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int d = 0; d < 3; ++d)
          for (int e = 0; e < 3; ++e) g.F(c, a, b) += epsilon(d, e, c) * g.P(d, e, a, b);
  g.K = CentralTensor(3, 2);
  g.g = CentralTensor::identity(3, 1);
  return g;
}

AlgebraElement random_element(int N, Rng& rng) {
  AlgebraElement m(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m(i, j) = unit_square(rng);
  return m;
}

FrameTensorField random_field(int n, int N, int degree, Rng& rng) {
  FrameTensorField t(n, N, degree);
  for (std::size_t i = 0; i < t.num_coeffs(); ++i) t.coeff(i) = random_element(N, rng);
  return t;
}

CentralTensor random_tensor(int n, int rank, Rng& rng) {
  CentralTensor t(n, rank);
  for (auto& x : t.data()) x = unit_square(rng);
  return t;
}

CentralTensor random_tau(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_tensor(n, 4, rng);
}

Eigen::MatrixXcd random_projector(int dim, int rank, Rng& rng) {
  if (rank < 0 || rank > dim) throw InputError("random_projector: rank out of range");
  const AlgebraElement x = random_element(dim, rng);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x + x.adjoint());
  // Eigenvalues come sorted ascending; the top `rank` are rounded to 1, the rest to 0.
  const Eigen::MatrixXcd V = es.eigenvectors().rightCols(rank);
  return V * V.adjoint();
}

FrameGeometry random_geometry(std::uint64_t seed, const RandomGeometryOptions& opt) {
  Rng rng(seed);
  FrameGeometry g;
  g.name = "random";
  g.N = opt.N;
  g.n = opt.n;
  for (int a = 0; a < g.n; ++a) {
    const AlgebraElement x = random_element(g.N, rng);
    g.lambda.push_back(0.5 * (x - x.adjoint()));
  }
  g.P = CentralTensor::from_matrix(g.n, random_projector(g.n * g.n, g.n * (g.n - 1) / 2, rng));
  if (opt.solve_structure) {
    fit_structure(g);
  } else {
    g.F = reduce_by_P(random_tensor(g.n, 3, rng), g.P);
    g.K = random_tensor(g.n, 2, rng);
  }
  g.g = CentralTensor::identity(g.n, 1);
  return with_sigma(std::move(g), random_tensor(g.n, 4, rng));
}

FrameGeometry random_su2_geometry(std::uint64_t seed) {
  Rng rng(seed);
  const int twice_j = 1 + static_cast<int>(rng() % 3);
  const int N = twice_j + 1;
  const double j = 0.5 * twice_j;
  // Spin-j matrices J_x, J_y, J_z with [J_a, J_b] = i eps_{abc} J_c.
  AlgebraElement jp = AlgebraElement::Zero(N, N);
  AlgebraElement jz = AlgebraElement::Zero(N, N);
  for (int k = 0; k < N; ++k) {
    const double m = j - k;
    jz(k, k) = m;
    if (k > 0) jp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const std::vector<AlgebraElement> spin = {0.5 * (jp + jp.adjoint()),
                                            -0.5i * (jp - jp.adjoint()), jz};

  Eigen::Matrix3d A;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) A(r, c) = uniform(rng, -0.5, 0.5) + (r == c ? 1.0 : 0.0);
  const Eigen::Matrix3d Ainv = A.inverse();
  const AlgebraElement x = random_element(N, rng);
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(x);
  const AlgebraElement U = qr.householderQ();
  Eigen::Vector3d kappa;
  for (int a = 0; a < 3; ++a) kappa(a) = uniform(rng, -1, 1);

  FrameGeometry g;
  g.name = "random-su2";
  g.N = N;
  g.n = 3;
  for (int a = 0; a < 3; ++a) {
    AlgebraElement l = 1i * kappa(a) * AlgebraElement::Identity(N, N);
    for (int b = 0; b < 3; ++b) l += A(a, b) * (U * (-1i * spin[static_cast<std::size_t>(b)]) * U.adjoint());
    g.lambda.push_back(l);
  }
  g.P = CentralTensor::antisymmetrizer(3);
  g.F = CentralTensor(3, 3);
  g.K = CentralTensor(3, 2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int f = 0; f < 3; ++f) {
        double s = 0.0;
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d)
            for (int e = 0; e < 3; ++e) s += A(a, c) * A(b, d) * epsilon(c, d, e) * Ainv(e, f);
        g.F(f, a, b) = s;
        g.K(a, b) += -1i * s * kappa(f);
      }
  g.g = CentralTensor::identity(3, 1);
  return with_sigma(std::move(g), random_tensor(3, 4, rng));
}

FrameGeometry random_flat_geometry(std::uint64_t seed, int n) {
  Rng rng(seed);
  FrameGeometry g;
  g.name = "random-flat";
  g.N = 3;
  g.n = n;
  for (int a = 0; a < n; ++a) {
    AlgebraElement l = AlgebraElement::Zero(g.N, g.N);
    for (int k = 0; k < g.N; ++k) l(k, k) = Complex(0.0, uniform(rng, -1, 1));
    g.lambda.push_back(l);
  }
  const int dim = n * (n - 1) / 2;
  const int rank = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(n * n, rank);
  for (int k = 0; k < rank; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const double v = uniform(rng, -1, 1);
        V(a * n + b, k) = v;
        V(b * n + a, k) = -v;
      }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(V);
  const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n * n, rank);
  g.P = CentralTensor::from_matrix(n, (Q * Q.transpose()).cast<Complex>());
  g.F = CentralTensor(n, 3);
  g.K = CentralTensor(n, 2);
  g.g = CentralTensor::identity(n, 1);
  return with_sigma(std::move(g), random_tensor(n, 4, rng));
}

Braiding braid_violating_braiding(int n, std::uint64_t seed, double scale) {
  Rng rng(seed);
  const int d = n * n;
  Eigen::MatrixXd H(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = r; c < d; ++c) H(r, c) = H(c, r) = scale * uniform(rng, -1, 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  const Eigen::MatrixXcd V = es.eigenvectors().cast<Complex>();
  const Eigen::VectorXcd phases = (1i * es.eigenvalues().cast<Complex>()).array().exp();
  const Eigen::MatrixXcd Jm = V * phases.asDiagonal() * V.transpose();
  return Braiding(build_J(CentralTensor::from_matrix(n, Jm)));
}

FrameTensorField real_central_perturbation(const CentralTensor& J, int N, Rng& rng) {
  const int n = J.n();
  const CentralTensor x = random_tensor(n, 3, rng);
  FrameTensorField X(n, N, 3);
  for (std::size_t k = 0; k < X.num_coeffs(); ++k) X.coeff(k) = x[k] * identity_element(N);
  FrameTensorField out = X + reality_image(X, J);
  out *= 0.5;
  return out;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"su2-flip",   "su2-torsion-free", "su2-twist",
                                                 "phase-twist", "random",          "random-su2",
                                                 "random-flat", "braid-violating"};
  return names;
}

Eigen::MatrixXcd default_twist_phases() {
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Ones(3, 3);
  L(0, 1) = std::polar(1.0, std::numbers::pi / 5);
  L(1, 0) = std::conj(L(0, 1));
  return L;
}

FrameGeometry geometry_by_name(const std::string& name, std::uint64_t seed) {
  if (name == "su2-flip") return su2_flip_geometry();
  if (name == "su2-torsion-free") {
    FrameGeometry g = su2_flip_geometry();
    g.name = name;
    g.omega = su2_torsionfree_connection().omega;
    return g;
  }
  if (name == "su2-twist") return su2_twist_geometry(default_twist_phases());
  if (name == "random") return random_geometry(seed);
  if (name == "random-su2") return random_su2_geometry(seed);
  if (name == "random-flat") return random_flat_geometry(seed);
  throw InputError("unknown geometry fixture: " + name);
}

}  // namespace stehbein::fixtures
