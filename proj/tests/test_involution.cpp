#include <doctest.h>

#include "stehbein/involution.hpp"
#include "stehbein/permutation_word.hpp"
#include "support.hpp"

using namespace stehbein;
using stehbein::test::share;

namespace {

fixtures::PhaseTwist twist3() { return fixtures::phase_twist_braiding(fixtures::default_twist_phases()); }

Connection su2_d0() {
  const auto g = share(fixtures::su2_flip_geometry());
  return d0_connection(g, Braiding(g->S));
}

Connection twist_d0() {
  const auto g = share(fixtures::su2_twist_geometry(fixtures::default_twist_phases()));
  return d0_connection(g, Braiding(g->S));
}

}  // namespace

TEST_CASE("reversal words") {
  CHECK(reverse_word(2).letters == std::vector<int>{1});
  CHECK(reverse_word(3).letters == std::vector<int>{1, 2, 1});
  CHECK(reverse_word(4).letters == std::vector<int>{1, 2, 1, 3, 2, 1});
  CHECK(evaluate_permutation(reverse_word(5)) == std::vector<int>{5, 4, 3, 2, 1});
  CHECK(alternative_reverse_word(3).letters == std::vector<int>{2, 1, 2});
  for (int n = 2; n <= 6; ++n) CHECK(evaluate_permutation(alternative_reverse_word(n)) == evaluate_permutation(reverse_word(n)));
}

TEST_CASE("I and J") {
  const CentralTensor P = CentralTensor::antisymmetrizer(3);
  CHECK(max_abs_diff(build_I(P), P) == 0.0);
  CHECK(build_I(CentralTensor(3, 4)).max_abs() == 0.0);

  CHECK(max_abs_diff(build_J(CentralTensor::flip(3)), CentralTensor::identity(3, 2)) == 0.0);
  const Eigen::MatrixXcd L = fixtures::default_twist_phases();
  const CentralTensor J = build_J(twist3().sigma.S());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const Complex expected = (b == d && a == c) ? L(b, a) : Complex(0.0);
          CHECK(std::abs(J(a, b, c, d) - expected) <= 1e-15);
        }
}

TEST_CASE("J^(n) from the reversal word") {
  const Braiding flip(CentralTensor::flip(3));
  for (int n = 1; n <= 4; ++n) CHECK(max_abs_diff(build_jn(flip, n), CentralTensor::identity(3, n)) == 0.0);
  CHECK(max_abs_diff(build_jn(twist3().sigma, 2), build_J(twist3().sigma.S())) == 0.0);
}

TEST_CASE("J^(n) is involutive when the braid equation holds") {
  const Braiding flip(CentralTensor::flip(3));
  for (int n = 3; n <= 5; ++n) {
    CHECK(check_jn_involutive(build_jn(flip, n)) == 0.0);
    CHECK(check_jn_involutive(build_jn(twist3().sigma, n)) <= 1e-10);
  }
  const Braiding bad = fixtures::braid_violating_braiding(3, 1);
  CHECK(check_braid(bad) > 1e-2);
  double worst = 0.0;
  for (int n = 3; n <= 5; ++n) worst = std::max(worst, check_jn_involutive(build_jn(bad, n)));
  CHECK(worst > 1e-4);
}

TEST_CASE("equivalent constructions of J^(3) and J^(4)") {
  const Braiding b = twist3().sigma;
  CHECK(max_abs_diff(build_jn(b, 3), jn_from_yang_baxter(build_J(b.S()))) <= 1e-12);
  CHECK(max_abs_diff(build_jn(b, 3), j3_recursive(b)) <= 1e-12);
  CHECK(max_abs_diff(build_jn(b, 4), j4_recursive_1_3(b)) <= 1e-12);
  CHECK(max_abs_diff(build_jn(b, 4), j4_recursive_2_2(b)) <= 1e-12);
  CHECK(max_abs_diff(build_jn(b, 4), build_jn(b, 4, alternative_reverse_word(4))) <= 1e-12);
}

TEST_CASE("fifa and the sigma-inverse relation") {
  const Braiding flip(CentralTensor::flip(3));
  CHECK(check_fifa(flip, 3, 1) == 0.0);
  for (int i = 1; i < 4; ++i) CHECK(check_fifa(twist3().sigma, 4, i) <= 1e-12);
  CHECK(check_sigma_inverse_j4(twist3().sigma) <= 1e-10);

  fixtures::Rng rng(4);
  const Braiding random(fixtures::random_tensor(3, 4, rng));
  CHECK(check_fifa(random, 3, 1) > 1e-3);
}

TEST_CASE("sigma unitarity") {
  CHECK(check_sigma_unitarity(CentralTensor::flip(3)) == 0.0);
  CHECK(check_sigma_unitarity(twist3().sigma.S()) <= 1e-12);
  CHECK(check_sigma_unitarity(fixtures::braid_violating_braiding(3, 1).S()) <= 1e-12);
}

TEST_CASE("star on forms") {
  const auto l = fixtures::su2_lambda();
  const FrameTensorField xi = left_mul(l[0], FrameTensorField::basis(3, 2, {0}));
  CHECK(max_coeff_distance(star_form(xi, {}), -1.0 * xi) == 0.0);

  const FrameTensorField theta = dirac_form(fixtures::su2_flip_geometry());
  CHECK(max_coeff_distance(star_form(theta, {}), -1.0 * theta) == 0.0);

  const CentralTensor J = build_J(CentralTensor::flip(3));
  const FrameTensorField mono = FrameTensorField::basis(3, 2, {1, 2});
  CHECK(max_coeff_distance(star_form(mono, J), mono) == 0.0);
}

TEST_CASE("star is antilinear, involutive and reverses products") {
  const Braiding braids[] = {Braiding(CentralTensor::flip(3)), twist3().sigma};
  fixtures::Rng rng(17);
  for (const Braiding& b : braids)
    for (int n = 1; n <= 4; ++n) {
      const std::optional<CentralTensor> Jn = n >= 2 ? std::optional(build_jn(b, n)) : std::nullopt;
      const FrameTensorField t = fixtures::random_field(3, 2, n, rng);
      const FrameTensorField u = fixtures::random_field(3, 2, n, rng);
      const AlgebraElement f = fixtures::random_element(2, rng);
      const Complex c(0.3, -1.7);
      CHECK(max_coeff_distance(star_form(star_form(t, Jn), Jn), t) <= 1e-10);
      CHECK(max_coeff_distance(star_form(c * t + u, Jn), std::conj(c) * star_form(t, Jn) + star_form(u, Jn)) <= 1e-12);
      CHECK(max_coeff_distance(star_form(left_mul(f, t), Jn), right_mul(star_form(t, Jn), adjoint(f))) <= 1e-12);
      CHECK(max_coeff_distance(star_form(right_mul(t, f), Jn), left_mul(adjoint(f), star_form(t, Jn))) <= 1e-12);
    }
}

TEST_CASE("compatibility of P with the involution") {
  const FrameGeometry geoms[] = {fixtures::su2_flip_geometry(), fixtures::su2_twist_geometry(fixtures::default_twist_phases()),
                                 fixtures::random_flat_geometry(1)};
  for (const FrameGeometry& g : geoms) {
    CAPTURE(g.name);
    CHECK(check_P_star(g.P) <= 1e-12);
  }
  const FrameGeometry su2 = fixtures::su2_flip_geometry();
  CHECK(check_involution_compat(su2.P, build_J(su2.S), build_I(su2.P)) == 0.0);
}

TEST_CASE("products of differentials under star") {
  FrameGeometry g = fixtures::su2_flip_geometry();
  const CentralTensor J = build_J(g.S);
  fixtures::Rng rng(2);
  double worst = 0.0;
  for (int s = 0; s < 10; ++s)
    worst = std::max(worst, check_wedge_star(g, J, fixtures::random_element(2, rng), fixtures::random_element(2, rng)));
  CHECK(worst <= 1e-10);

  g.P = 0.5 * (CentralTensor::identity(3, 2) + CentralTensor::flip(3));
  CHECK(check_wedge_star(g, J, g.lambda[0], g.lambda[1]) > 1e-3);
}

TEST_CASE("metric reality") {
  const CentralTensor flip = CentralTensor::flip(3);
  CHECK(check_metric_reality(CentralTensor::identity(3, 1), flip) == 0.0);
  CentralTensor sym(3, 2);
  sym(0, 1) = sym(1, 0) = 0.7;
  sym(2, 2) = 2.0;
  CHECK(check_metric_reality(sym, flip) == 0.0);
  CentralTensor skew = CentralTensor::identity(3, 1);
  skew(0, 1) = Complex(0.0, 0.5);
  skew(1, 0) = Complex(0.0, 0.1);
  CHECK(check_metric_reality(skew, flip) > 1e-3);
}

TEST_CASE("connection reality") {
  const CentralTensor J = build_J(CentralTensor::flip(3));
  CHECK(check_connection_reality(su2_d0(), J) == 0.0);
  const Connection tf = fixtures::su2_torsionfree_connection();
  CHECK(check_connection_reality(tf, J) <= 1e-12);

  FrameTensorField kick(3, 2, 3);
  kick.at(0, 1, 2) = Complex(0.0, 0.2) * identity_element(2);
  CHECK(check_connection_reality(connection_from_omega(tf.geom, tf.sigma, tf.omega + kick), J) > 1e-3);

  fixtures::Rng rng(8);
  const Connection tw = twist_d0();
  const CentralTensor Jt = build_J(tw.sigma.S());
  const Connection shifted =
      connection_from_omega(tw.geom, tw.sigma, tw.omega + fixtures::real_central_perturbation(Jt, 2, rng));
  CHECK(check_connection_reality(tw, Jt) <= 1e-12);
  CHECK(check_connection_reality(shifted, Jt) <= 1e-12);
}

TEST_CASE("D_2 reality triangle") {
  const D2Reality d0 = check_D2_reality(su2_d0());
  CHECK(d0.dopo == 0.0);
  CHECK(d0.real2nd == 0.0);
  CHECK(d0.equi == 0.0);

  const D2Reality tf = check_D2_reality(fixtures::su2_torsionfree_connection());
  CHECK(tf.dopo <= 1e-10);
  CHECK(tf.real2nd <= 1e-10);
  CHECK(tf.equi <= 1e-10);

  const Connection tw = twist_d0();
  const D2Reality base = check_D2_reality(tw);
  CHECK(std::max({base.dopo, base.real2nd, base.equi}) <= 1e-12);

  fixtures::Rng rng(31);
  for (int s = 0; s < 3; ++s) {
    FrameTensorField dw = fixtures::real_central_perturbation(build_J(tw.sigma.S()), 2, rng);
    dw *= 0.01;
    const D2Reality r = check_D2_reality(connection_from_omega(tw.geom, tw.sigma, tw.omega + dw));
    CHECK(r.real1st <= 1e-12);
    CHECK(r.dopo > 1e-4);
    CHECK(r.real2nd > 1e-4);
    CHECK(r.equi > 1e-4);
    CHECK(std::abs(r.dopo - r.real2nd) <= 1e-10);
    CHECK(std::abs(r.real2nd - r.equi) <= 1e-10);
  }
}

TEST_CASE("D_n reality") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(check_Dn_reality(su2_d0(), n) <= 1e-12);
    CHECK(check_Dn_reality(fixtures::su2_torsionfree_connection(), n) <= 1e-10);
    CHECK(check_Dn_reality(twist_d0(), n) <= 1e-10);
  }
}
