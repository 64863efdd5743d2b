#include <doctest.h>

#include "stehbein/braiding.hpp"
#include "stehbein/involution.hpp"
#include "support.hpp"

using namespace stehbein;
using stehbein::test::share;

namespace {

double left_leibniz_worst(const Connection& c, std::uint64_t seed) {
  fixtures::Rng rng(seed);
  double worst = 0.0;
  for (int s = 0; s < 50; ++s) {
    const AlgebraElement f = fixtures::random_element(c.geom->N, rng);
    worst = std::max(worst, check_left_leibniz(c, f, fixtures::random_field(c.geom->n, c.geom->N, 1, rng)));
  }
  return worst;
}

double right_leibniz_worst(const Connection& c, std::uint64_t seed) {
  fixtures::Rng rng(seed);
  double worst = 0.0;
  for (int s = 0; s < 50; ++s) {
    const AlgebraElement f = fixtures::random_element(c.geom->N, rng);
    worst = std::max(worst, check_right_leibniz(c, f, fixtures::random_field(c.geom->n, c.geom->N, 1, rng)));
  }
  return worst;
}

Connection su2_d0() {
  const auto g = share(fixtures::su2_flip_geometry());
  return d0_connection(g, Braiding(g->S));
}

}  // namespace

TEST_CASE("D_(0) coefficients") {
  CHECK(max_coeff_norm(su2_d0().omega) == 0.0);

  const auto triv = share(test::trivial_geometry());
  CHECK(max_coeff_norm(d0_connection(triv, Braiding(triv->S)).omega) == 0.0);

  // Twisted sigma: compare with -theta (x) theta^a + sigma(theta^a (x) theta) expanded directly.
  const auto g = share(fixtures::su2_twist_geometry(fixtures::default_twist_phases()));
  const Braiding s(g->S);
  const Connection d0 = d0_connection(g, s);
  const FrameTensorField theta = dirac_form(*g);
  for (int a = 0; a < 3; ++a) {
    const FrameTensorField ta = FrameTensorField::basis(3, 2, {a});
    const FrameTensorField direct =
        apply_sigma_at(tensor_product(ta, theta), s, 1) - tensor_product(theta, ta);
    CHECK(max_coeff_distance(covariant_derivative(d0, ta), direct) <= 1e-15);
  }
  CHECK(max_coeff_norm(d0.omega) > 0.1);
}

TEST_CASE("covariant derivative examples") {
  const Connection d0 = su2_d0();
  for (int a = 0; a < 3; ++a) CHECK(max_coeff_norm(covariant_derivative(d0, FrameTensorField::basis(3, 2, {a}))) == 0.0);

  const auto triv = share(test::trivial_geometry());
  FrameTensorField central(3, 2, 1);
  central.at(0) = Complex(0.0, 2.0) * identity_element(2);
  CHECK(max_coeff_norm(covariant_derivative(d0_connection(triv, Braiding(triv->S)), central)) == 0.0);
}

TEST_CASE("Leibniz rules") {
  const Connection tf = fixtures::su2_torsionfree_connection();
  CHECK(left_leibniz_worst(su2_d0(), 1) <= 1e-10);
  CHECK(right_leibniz_worst(su2_d0(), 2) <= 1e-10);
  CHECK(left_leibniz_worst(tf, 3) <= 1e-10);
  CHECK(right_leibniz_worst(tf, 4) <= 1e-10);

  // Central f: the two rules coincide and both hold.
  fixtures::Rng rng(5);
  const FrameTensorField xi = fixtures::random_field(3, 2, 1, rng);
  CHECK(check_right_leibniz(tf, Complex(0.3, -1.0) * identity_element(2), xi) <= 1e-14);

  // A noncentral change of omega keeps the left rule and breaks the right one.
  fixtures::Rng prng(6);
  const Connection bent = connection_from_omega(tf.geom, tf.sigma, tf.omega + 0.1 * fixtures::random_field(3, 2, 3, prng));
  CHECK(left_leibniz_worst(bent, 7) <= 1e-10);
  CHECK(right_leibniz_worst(bent, 8) > 1e-3);
}

TEST_CASE("torsion: two routes agree") {
  const auto agree = [](const Connection& c) {
    const TorsionResult t = torsion(c);
    const bool small_form = t.form_norm <= 1e-10;
    const bool small_alg = t.algebraic_residual <= 1e-10;
    CHECK(small_form == small_alg);
    if (!small_form) CHECK(t.algebraic_residual > 1e-3);
    return t;
  };
  // With F != 0 the flip D_(0) has torsion -1/2 C.
  const TorsionResult t0 = agree(su2_d0());
  CHECK(t0.form_norm == doctest::Approx(0.5 * std::sqrt(2.0)));

  const TorsionResult tf = agree(fixtures::su2_torsionfree_connection());
  CHECK(tf.form_norm <= 1e-12);
  CHECK(tf.algebraic_residual <= 1e-12);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = share(fixtures::random_geometry(seed));
    agree(d0_connection(g, Braiding(g->S)));
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = share(fixtures::random_flat_geometry(seed));
    CHECK(agree(d0_connection(g, Braiding(g->S))).form_norm <= 1e-10);
  }
}

TEST_CASE("torsion-free chi on su2 is half epsilon") {
  const Connection tf = fixtures::su2_torsionfree_connection();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        CHECK(test::diff(tf.omega.at(a, b, c), 0.5 * fixtures::epsilon(a, b, c) * identity_element(2)) <= 1e-12);
}

TEST_CASE("metric evaluation, symmetry and compatibility") {
  const CentralTensor delta = CentralTensor::identity(3, 1);
  CHECK(test::diff(metric_eval(delta, FrameTensorField::basis(3, 2, {0, 0})), identity_element(2)) == 0.0);
  CHECK(frobenius_norm(metric_eval(delta, FrameTensorField::basis(3, 2, {0, 1}))) == 0.0);

  const MetricSymmetry flip = check_metric_symmetry(delta, CentralTensor::flip(3));
  CHECK(flip.residual == 0.0);
  CHECK(std::abs(flip.factor - Complex(1.0)) <= 1e-15);

  const MetricSymmetry minus = check_metric_symmetry(delta, -1.0 * CentralTensor::identity(3, 2));
  CHECK(minus.residual <= 1e-15);
  CHECK(std::abs(minus.factor - Complex(-1.0)) <= 1e-15);

  // Twist: S^{ab}_{cd} delta^{cd} = delta^{ab} because Lambda_aa = 1.
  const fixtures::PhaseTwist tw = fixtures::phase_twist_braiding(fixtures::default_twist_phases());
  const MetricSymmetry twisted = check_metric_symmetry(delta, tw.sigma.S());
  CHECK(twisted.residual <= 1e-15);
  CHECK(std::abs(twisted.factor - Complex(1.0)) <= 1e-15);

  const MetricCompatibility c0 = check_metric_compatibility(su2_d0(), delta);
  CHECK(c0.first == 0.0);
  CHECK(c0.second == 0.0);

  const auto g = share(fixtures::su2_flip_geometry());
  CentralTensor bent = g->S;
  bent(0, 1, 1, 0) += 0.2;
  CHECK(check_metric_compatibility(d0_connection(g, Braiding(bent)), delta).second > 1e-3);
}

TEST_CASE("D_2 and D_n") {
  const Connection tf = fixtures::su2_torsionfree_connection();
  fixtures::Rng rng(12);
  for (int s = 0; s < 5; ++s) {
    const FrameTensorField xi = fixtures::random_field(3, 2, 1, rng);
    const FrameTensorField eta = fixtures::random_field(3, 2, 1, rng);
    const FrameTensorField t = tensor_product(xi, eta);
    CHECK(max_coeff_distance(Dn(tf, xi), covariant_derivative(tf, xi)) == 0.0);
    CHECK(max_coeff_distance(Dn(tf, t), D2(tf, t)) <= 1e-13);
    CHECK(max_coeff_distance(D2(tf, t), D2_decomposable(tf, xi, eta)) <= 1e-13);
  }

  const auto triv = share(test::trivial_geometry());
  const Connection flat = d0_connection(triv, Braiding(triv->S));
  FrameTensorField central(3, 2, 2);
  central.at(0, 1) = Complex(1.0, 1.0) * identity_element(2);
  CHECK(max_coeff_norm(D2(flat, central)) == 0.0);

  CHECK(max_coeff_norm(Dn(su2_d0(), FrameTensorField::basis(3, 2, {0, 2, 1}))) == 0.0);
}

TEST_CASE("D_n commutes with sigma as in the lemma") {
  const auto tw = share(fixtures::su2_twist_geometry(fixtures::default_twist_phases()));
  const Connection conns[] = {fixtures::su2_torsionfree_connection(), d0_connection(tw, Braiding(tw->S))};
  fixtures::Rng rng(13);
  for (const Connection& c : conns)
    for (int n = 2; n <= 4; ++n)
      for (int i = 2; i <= n; ++i) CHECK(check_Dn_lemma(c, fixtures::random_field(3, 2, n, rng), i) <= 1e-10);
}

TEST_CASE("curvature") {
  const CurvatureData zero = curvature(su2_d0());
  CHECK(max_coeff_norm(zero.R) == 0.0);
  REQUIRE(zero.ricci.has_value());
  CHECK(max_coeff_norm(*zero.ricci) == 0.0);

  // Oracle: R^a_{bcd} = 1/4 (delta_ac delta_bd - delta_ad delta_bc), Ricci = 1/4 delta.
  const CurvatureData cd = curvature(fixtures::su2_torsionfree_connection());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const double v = 0.25 * ((a == c && b == d) - (a == d && b == c));
          CHECK(test::diff(cd.R.at(a, b, c, d), v * identity_element(2)) <= 1e-12);
        }
      CHECK(test::diff(cd.ricci->at(a, b), 0.25 * (a == b) * identity_element(2)) <= 1e-12);
    }
  CHECK(cd.centrality_residual <= 1e-12);
  CHECK(cd.reduction_residual <= 1e-12);

  auto no_metric = fixtures::su2_flip_geometry();
  no_metric.g.reset();
  const auto nm = share(no_metric);
  CHECK_FALSE(curvature(d0_connection(nm, Braiding(nm->S))).ricci.has_value());
}

TEST_CASE("closed form of the D_(0) curvature") {
  const auto check_geom = [](const FrameGeometry& geom) {
    const auto g = share(geom);
    const Braiding s(g->S);
    const Connection d0 = d0_connection(g, s);
    const auto closed = curvature_d0_formula(*g, s);
    for (int a = 0; a < g->n; ++a) {
      CHECK(max_coeff_distance(curvature_map(d0, FrameTensorField::basis(g->n, g->N, {a})),
                               closed[static_cast<std::size_t>(a)]) <= 1e-10);
    }
  };
  check_geom(fixtures::su2_flip_geometry());
  check_geom(test::trivial_geometry());
  for (std::uint64_t seed = 1; seed <= 5; ++seed) check_geom(fixtures::random_flat_geometry(seed));

  for (const auto& c : curvature_d0_formula(fixtures::su2_flip_geometry(), Braiding(CentralTensor::flip(3))))
    CHECK(max_coeff_norm(c) == 0.0);
}

TEST_CASE("curvature is left-linear for torsion-free connections") {
  fixtures::Rng rng(21);
  const auto flat = share(fixtures::random_flat_geometry(2));
  const Connection conns[] = {fixtures::su2_torsionfree_connection(), d0_connection(flat, Braiding(flat->S))};
  for (const Connection& c : conns) {
    REQUIRE(torsion(c).form_norm <= 1e-10);
    for (int s = 0; s < 10; ++s) {
      const AlgebraElement f = fixtures::random_element(c.geom->N, rng);
      const FrameTensorField xi = fixtures::random_field(c.geom->n, c.geom->N, 1, rng);
      CHECK(max_coeff_distance(curvature_map(c, left_mul(f, xi)), left_mul(f, curvature_map(c, xi))) <= 1e-10);
    }
    // The closed form also holds on general xi once Curv_(0) is left-linear.
  }
  const Braiding fs(flat->S);
  const Connection d0 = d0_connection(flat, fs);
  for (int s = 0; s < 5; ++s) {
    const FrameTensorField xi = fixtures::random_field(flat->n, flat->N, 1, rng);
    CHECK(max_coeff_distance(curvature_map(d0, xi), curvature_d0_formula(*flat, fs, xi)) <= 1e-10);
  }
}

TEST_CASE("curvature defect with torsion") {
  const Connection d0 = su2_d0();
  fixtures::Rng rng(22);
  double naive = 0.0;
  for (int s = 0; s < 10; ++s) {
    const AlgebraElement f = fixtures::random_element(2, rng);
    const FrameTensorField xi = fixtures::random_field(3, 2, 1, rng);
    const FrameTensorField defect = curvature_map(d0, left_mul(f, xi)) - left_mul(f, curvature_map(d0, xi));
    naive = std::max(naive, max_coeff_norm(defect));
    const FrameTensorField df = differential0(f, *d0.geom);
    FrameTensorField rhs(3, 2, 3);
    for (int a = 0; a < 3; ++a)
      rhs -= tensor_product(torsion_map(d0, right_mul(df, AlgebraElement(xi.at(a)))), FrameTensorField::basis(3, 2, {a}));
    CHECK(max_coeff_distance(defect, rhs) <= 1e-12);
  }
  CHECK(naive > 1e-3);
}
