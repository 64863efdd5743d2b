#include <doctest.h>

#include "stehbein/errors.hpp"
#include "stehbein/involution.hpp"
#include "support.hpp"

using namespace stehbein;

namespace {

void axioms_hold(const FrameGeometry& g, double tol) {
  CAPTURE(g.name);
  CHECK_NOTHROW(validate_geometry(g, tol));
  CHECK(check_structure(g) <= tol);
  CHECK(check_theta_squared(g) <= tol);
  CHECK(check_sigma_consistency(g.S, g.P) <= tol);
  fixtures::Rng rng(1);
  for (int s = 0; s < 20; ++s)
    CHECK(max_coeff_norm(differential1(differential0(fixtures::random_element(g.N, rng), g), g)) <= tol);
}

}  // namespace

TEST_CASE("Pauli convention") {
  const auto l = fixtures::su2_lambda();
  CHECK(fixtures::pauli(0)(0, 1) == Complex(1.0));
  CHECK(fixtures::pauli(1)(0, 1) == Complex(0.0, -1.0));
  CHECK(fixtures::pauli(2)(1, 1) == Complex(-1.0));
  for (int a = 0; a < 3; ++a) CHECK(test::diff(l[a], Complex(0.0, -0.5) * fixtures::pauli(a)) == 0.0);
  CHECK(fixtures::epsilon(0, 1, 2) == 1.0);
  CHECK(fixtures::epsilon(1, 0, 2) == -1.0);
  CHECK(fixtures::epsilon(0, 0, 2) == 0.0);
}

TEST_CASE("su2 flip geometry") {
  const FrameGeometry g = fixtures::su2_flip_geometry();
  CHECK(check_structure(g) <= 1e-12);
  for (const auto& l : g.lambda) CHECK(antihermiticity_residual(l) == 0.0);
  CHECK(check_braid(Braiding(g.S)) == 0.0);
}

TEST_CASE("su2 torsion-free connection") {
  const Connection c = fixtures::su2_torsionfree_connection();
  CHECK(torsion(c).algebraic_residual <= 1e-12);
  CHECK(check_connection_reality(c, build_J(c.sigma.S())) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("phase twist braiding") {
  const fixtures::PhaseTwist ones = fixtures::phase_twist_braiding(Eigen::MatrixXcd::Ones(3, 3));
  CHECK(max_abs_diff(ones.sigma.S(), CentralTensor::flip(3)) == 0.0);

  const fixtures::PhaseTwist tw = fixtures::phase_twist_braiding(fixtures::default_twist_phases());
  CHECK(check_braid(tw.sigma) <= 1e-12);
  for (int n = 3; n <= 5; ++n) CHECK(check_jn_involutive(build_jn(tw.sigma, n)) <= 1e-10);
  // The order-2 involution constraint: (sigma(eta* (x) xi*))* = xi (x) eta.
  CHECK(check_jn_involutive(build_jn(tw.sigma, 2)) <= 1e-15);

  Eigen::MatrixXcd bad = fixtures::default_twist_phases();
  bad(0, 1) *= 1.1;
  CHECK_THROWS_AS(fixtures::phase_twist_braiding(bad), InputError);
}

TEST_CASE("random phase twists satisfy the braid-level properties") {
  fixtures::Rng rng(99);
  for (int n = 2; n <= 4; ++n) {
    const Braiding b = fixtures::phase_twist_braiding(fixtures::random_phases(n, rng)).sigma;
    CHECK(check_braid(b) <= 1e-10);
    CHECK(check_yang_baxter(build_J(b.S())) <= 1e-10);
    CHECK(check_sigma_unitarity(b.S()) <= 1e-10);
    for (int k = 2; k <= 5; ++k) CHECK(check_jn_involutive(build_jn(b, k)) <= 1e-10);
  }
}

TEST_CASE("valid fixtures pass the calculus axioms") {
  axioms_hold(fixtures::su2_flip_geometry(), 1e-10);
  axioms_hold(fixtures::su2_twist_geometry(fixtures::default_twist_phases()), 1e-10);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    axioms_hold(fixtures::random_su2_geometry(seed), 1e-10);
    axioms_hold(fixtures::random_flat_geometry(seed), 1e-10);
  }
}

TEST_CASE("random generators are deterministic") {
  const FrameGeometry a = fixtures::random_geometry(12);
  const FrameGeometry b = fixtures::random_geometry(12);
  CHECK(max_abs_diff(a.S, b.S) == 0.0);
  CHECK(max_abs_diff(a.P, b.P) == 0.0);
  for (std::size_t i = 0; i < a.lambda.size(); ++i) CHECK(test::diff(a.lambda[i], b.lambda[i]) == 0.0);
  CHECK(max_abs_diff(fixtures::random_tau(3, 5), fixtures::random_tau(3, 5)) == 0.0);
  CHECK(max_abs_diff(fixtures::random_tau(3, 5), fixtures::random_tau(3, 6)) > 0.0);
  // A structure-violating generator: the checks must see it.
  CHECK(check_structure(a) > 1e-3);
}

TEST_CASE("fixture registry") {
  for (const auto& name : fixtures::fixture_names()) {
    if (name == "phase-twist" || name == "braid-violating") continue;
    CHECK(fixtures::geometry_by_name(name, 1).n > 0);
  }
  CHECK(fixtures::geometry_by_name("su2-torsion-free", 0).omega.has_value());
  CHECK_THROWS_AS(fixtures::geometry_by_name("nope", 0), InputError);
}
