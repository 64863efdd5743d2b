#include <doctest.h>

#include "stehbein/errors.hpp"
#include "support.hpp"

using namespace stehbein;
using stehbein::test::diff;

TEST_CASE("dirac form") {
  const FrameGeometry g = fixtures::su2_flip_geometry();
  const FrameTensorField theta = dirac_form(g);
  for (int a = 0; a < 3; ++a) CHECK(diff(theta.at(a), -g.lambda[static_cast<std::size_t>(a)]) == 0.0);
  CHECK(max_coeff_norm(dirac_form(test::trivial_geometry())) == 0.0);
}

TEST_CASE("differential of functions") {
  const FrameGeometry g = fixtures::su2_flip_geometry();
  CHECK(max_coeff_norm(differential0(identity_element(2), g)) == 0.0);
  const FrameTensorField d3 = differential0(g.lambda[2], g);
  CHECK(diff(d3.at(0), -g.lambda[1]) < 1e-15);
  CHECK(diff(d3.at(1), g.lambda[0]) < 1e-15);
  CHECK(frobenius_norm(d3.at(2)) == 0.0);
}

TEST_CASE("Maurer-Cartan coefficients of su2") {
  const FrameGeometry g = fixtures::su2_flip_geometry();
  const FrameTensorField C = maurer_cartan(g);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const AlgebraElement expected = fixtures::epsilon(b, c, a) * identity_element(2);
        CHECK(diff(C.at(a, b, c), expected) < 1e-15);
      }
  CHECK(max_coeff_norm(maurer_cartan(test::trivial_geometry())) == 0.0);
}

TEST_CASE("differential of 1-forms") {
  const FrameGeometry g = fixtures::su2_flip_geometry();
  for (int a = 0; a < 3; ++a) {
    const FrameTensorField d = differential1(FrameTensorField::basis(3, 2, {a}), g);
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const AlgebraElement expected = -0.5 * fixtures::epsilon(a, b, c) * identity_element(2);
        CHECK(diff(d.at(b, c), expected) < 1e-15);
      }
  }
  FrameTensorField central(3, 2, 1);
  central.at(1) = Complex(2.0, 1.0) * identity_element(2);
  CHECK(max_coeff_norm(differential1(central, test::trivial_geometry())) == 0.0);
}

TEST_CASE("structure condition and theta squared") {
  const FrameGeometry g = fixtures::su2_flip_geometry();
  CHECK(check_structure(g) <= 1e-12);
  CHECK(check_theta_squared(g) <= 1e-12);
  CHECK(check_structure(test::trivial_geometry()) == 0.0);
  CHECK(check_theta_squared(test::trivial_geometry()) == 0.0);

  FrameGeometry bumped = g;
  bumped.K(0, 1) += 0.1;
  // A central shift c on M_2 has Frobenius norm |c| sqrt(2).
  CHECK(check_structure(bumped) == doctest::Approx(0.1 * std::sqrt(2.0)).epsilon(1e-12));

  const FrameGeometry bad = fixtures::random_geometry(3);
  CHECK(check_structure(bad) > 1e-3);
  CHECK(check_theta_squared(bad) > 1e-3);
}

TEST_CASE("nonzero K enters theta squared with the sign fixed by the structure condition") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const FrameGeometry g = fixtures::random_su2_geometry(seed);
    CHECK(check_structure(g) <= 1e-10);
    CHECK(check_theta_squared(g) <= 1e-10);
  }
}

TEST_CASE("d squared, df = -[theta, f] and the Leibniz rule for d") {
  const FrameGeometry geoms[] = {fixtures::su2_flip_geometry(),
                                 fixtures::su2_twist_geometry(fixtures::default_twist_phases()),
                                 fixtures::random_su2_geometry(4), fixtures::random_flat_geometry(5)};
  fixtures::Rng rng(3);
  for (const FrameGeometry& g : geoms) {
    CAPTURE(g.name);
    REQUIRE(check_structure(g) <= 1e-10);
    const FrameTensorField theta = dirac_form(g);
    double d2 = 0.0, rep = 0.0, leib = 0.0;
    for (int s = 0; s < 100; ++s) {
      const AlgebraElement f = fixtures::random_element(g.N, rng);
      const AlgebraElement h = fixtures::random_element(g.N, rng);
      const FrameTensorField df = differential0(f, g);
      d2 = std::max(d2, max_coeff_norm(differential1(df, g)));
      rep = std::max(rep, max_coeff_distance(df, left_mul(f, theta) - right_mul(theta, f)));
      leib = std::max(leib, max_coeff_distance(differential0(AlgebraElement(f * h), g),
                                               right_mul(df, h) + left_mul(f, differential0(h, g))));
    }
    CHECK(d2 <= 1e-10);
    CHECK(rep <= 1e-12);
    CHECK(leib <= 1e-12);
  }
}

TEST_CASE("geometry validation names the violated invariant") {
  FrameGeometry g = fixtures::su2_flip_geometry();
  CHECK_NOTHROW(validate_geometry(g, 1e-10));

  FrameGeometry bad_lambda = g;
  bad_lambda.lambda[0](0, 1) += 0.3;
  try {
    validate_geometry(bad_lambda, 1e-10);
    FAIL("expected a violation");
  } catch (const InvariantViolation& e) {
    CHECK(e.invariant() == "lambda_antihermitian");
  }

  FrameGeometry bad_P = g;
  bad_P.P(0, 1, 0, 1) += 0.3;
  try {
    validate_geometry(bad_P, 1e-10);
    FAIL("expected a violation");
  } catch (const InvariantViolation& e) {
    CHECK(e.invariant() == "P_projector");
    CHECK(e.residual() > 0.1);
  }
}
