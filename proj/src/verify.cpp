#include "stehbein/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "stehbein/errors.hpp"
#include "stehbein/fixtures.hpp"
#include "stehbein/involution.hpp"

namespace stehbein {

namespace {

constexpr int kDSquaredSamples = 100;
constexpr int kLeibnizSamples = 50;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Outcome {
  double residual = 0.0;
  std::string note;
  bool skipped = false;
  bool pass_override = false;  ///< status decided by the check itself
  bool pass = false;
};

Outcome skip(std::string note) {
  Outcome o;
  o.skipped = true;
  o.note = std::move(note);
  return o;
}

Outcome value(double r, std::string note = {}) {
  Outcome o;
  o.residual = r;
  o.note = std::move(note);
  return o;
}

class Runner {
 public:
  Runner(VerificationReport& report, const VerifyOptions& opt) : report_(report), opt_(opt) {}

  void run(const std::string& group, const std::string& name, const std::string& anchor,
           double tol, const std::function<Outcome()>& body) {
    CheckResult r{name, anchor, 0.0, tol, CheckStatus::Skipped, {}};
    if (!opt_.groups.empty() && !opt_.groups.count(group)) {
      r.note = "not selected";
    } else {
      Outcome o;
      try {
        o = body();
      } catch (const InputError& e) {
        o = skip(e.what());
      }
      r.residual = o.residual;
      r.note = o.note;
      if (o.skipped) {
        r.status = CheckStatus::Skipped;
      } else {
        r.status = o.residual <= tol ? CheckStatus::Pass : CheckStatus::Fail;
      }
    }
    report_.checks.push_back(std::move(r));
  }

  double tol() const { return opt_.tol; }

 private:
  VerificationReport& report_;
  const VerifyOptions& opt_;
};

void run_checks(VerificationReport& report, const FrameGeometry* geom, const Braiding& sigma,
                const VerifyOptions& opt) {
  Runner R(report, opt);
  const double tol = opt.tol;
  const int n = sigma.n();
  const std::string no_geom = "braiding-only input: no geometry";
  const std::string no_metric = "input has no metric";
  using fixtures::Rng;

  std::shared_ptr<const FrameGeometry> gp;
  std::optional<Connection> conn;
  std::string conn_error;
  if (geom) {
    gp = std::make_shared<const FrameGeometry>(*geom);
    try {
      conn = make_connection(gp, opt.connection, &report.connection);
    } catch (const InputError& e) {
      conn_error = std::string("no connection: ") + e.what();
    }
  }
  const auto need_geom = [&]() -> const FrameGeometry& {
    if (!geom) throw InputError(no_geom);
    return *geom;
  };
  const auto need_conn = [&]() -> const Connection& {
    need_geom();
    if (!conn) throw InputError(conn_error);
    return *conn;
  };
  const auto need_metric = [&]() -> const CentralTensor& {
    const FrameGeometry& g = need_geom();
    if (!g.g) throw InputError(no_metric);
    return *g.g;
  };

  // Differential calculus.
  R.run("structure", "structure", "2 λ_c λ_d P^{cd}_{ab} − λ_c F^c_{ab} − K_{ab} = 0", tol,
        [&] { return value(check_structure(need_geom())); });
  R.run("theta2", "theta_squared", "dθ + θ² + ½ K_{ab} θ^a θ^b = 0", tol,
        [&] { return value(check_theta_squared(need_geom())); });
  R.run("d2", "d_squared", "d(df) = 0", tol, [&] {
    const FrameGeometry& g = need_geom();
    Rng rng(opt.seed);
    double worst = 0.0;
    for (int s = 0; s < kDSquaredSamples; ++s) {
      const AlgebraElement f = fixtures::random_element(g.N, rng);
      worst = std::max(worst, max_coeff_norm(differential1(differential0(f, g), g)));
    }
    return value(worst, std::to_string(kDSquaredSamples) + " seeded f");
  });
  R.run("sigma", "sigma_consistency", "π ∘ (σ + 1) = 0", tol,
        [&] { return value(check_sigma_consistency(sigma.S(), need_geom().P)); });

  // Braiding.
  const double braid = check_braid(sigma);
  const std::string braid_note = "braid residual " + fmt(braid);
  const bool braid_holds = braid <= tol;
  R.run("braid", "braid", "σ₁₂σ₂₃σ₁₂ = σ₂₃σ₁₂σ₂₃", tol, [&] { return value(braid); });
  R.run("braid", "block_unambiguous", "σ((ξ⊗η)⊗ζ) = σ₁₂σ₂₃(ξ⊗η⊗ζ), σ(ξ⊗(η⊗ζ)) = σ₂₃σ₁₂(ξ⊗η⊗ζ)", tol,
        [&] { return value(check_block_unambiguous(sigma, opt.max_order), "both bracketings, degree <= " + std::to_string(opt.max_order)); });
  R.run("braid", "block_braid", "extended σ satisfies the braid equation on three blocks", tol, [&] {
    double worst = 0.0;
    const int top = std::max(3, std::min(opt.max_order + 1, 5));
    for (int p = 1; p <= top; ++p)
      for (int q = 1; p + q <= top; ++q)
        for (int r = 1; p + q + r <= top; ++r) worst = std::max(worst, check_block_braid(sigma, p, q, r));
    return value(worst, "block sizes up to total degree " + std::to_string(top));
  });
  const CentralTensor J = build_J(sigma.S());
  R.run("yb", "yang_baxter", "J^{ab}_{pq}J^{pc}_{dr}J^{qr}_{ef} = J^{bc}_{pq}J^{aq}_{rf}J^{rp}_{de}", tol,
        [&] { return value(check_yang_baxter(J)); });
  R.run("yb", "jn_yang_baxter_formula", "J^{abc}_{def} = J^{ab}_{pq}J^{pc}_{dr}J^{qr}_{ef}", tol, [&] {
    if (!braid_holds) return skip("braid equation fails (" + braid_note + ")");
    return value(max_abs_diff(build_jn(sigma, 3), jn_from_yang_baxter(J)));
  });
  R.run("unitarity", "sigma_unitarity", "(S^{ba}_{cd})* S^{dc}_{ef} = δ^a_e δ^b_f", tol,
        [&] { return value(check_sigma_unitarity(sigma.S())); });

  // Connection.
  R.run("leibniz", "left_leibniz", "D(fξ) = df ⊗ ξ + f Dξ", tol, [&] {
    const Connection& c = need_conn();
    Rng rng(opt.seed + 1);
    double worst = 0.0;
    for (int s = 0; s < kLeibnizSamples; ++s) {
      const AlgebraElement f = fixtures::random_element(gp->N, rng);
      const FrameTensorField xi = fixtures::random_field(gp->n, gp->N, 1, rng);
      worst = std::max(worst, check_left_leibniz(c, f, xi));
    }
    return value(worst, std::to_string(kLeibnizSamples) + " seeded (f, ξ)");
  });
  R.run("leibniz", "right_leibniz", "D(ξf) = σ(ξ ⊗ df) + (Dξ) f", tol, [&] {
    const Connection& c = need_conn();
    Rng rng(opt.seed + 2);
    double worst = 0.0;
    for (int s = 0; s < kLeibnizSamples; ++s) {
      const AlgebraElement f = fixtures::random_element(gp->N, rng);
      const FrameTensorField xi = fixtures::random_field(gp->n, gp->N, 1, rng);
      worst = std::max(worst, check_right_leibniz(c, f, xi));
    }
    return value(worst, std::to_string(kLeibnizSamples) + " seeded (f, ξ)");
  });
  std::optional<TorsionResult> tors;
  R.run("torsion", "torsion", "Θ^a = dθ^a − π∘Dθ^a vanishes iff ω^a_{de}P^{de}_{bc} = ½C^a_{bc}", tol, [&] {
    tors = torsion(need_conn());
    const bool free = tors->form_norm <= tol;
    return value(std::abs(tors->form_norm - tors->algebraic_residual),
                 "two-route agreement; torsion magnitude " + fmt(tors->form_norm) +
                     (free ? " (torsion-free)" : " (has torsion)"));
  });

  // Metric.
  R.run("metric", "metric_symmetry", "g ∘ σ ∝ g", tol, [&] {
    const MetricSymmetry m = check_metric_symmetry(need_metric(), sigma.S());
    return value(m.residual, "factor c = " + fmt(m.factor.real()) + (m.factor.imag() >= 0 ? "+" : "") +
                                 fmt(m.factor.imag()) + "i");
  });
  std::optional<MetricCompatibility> compat;
  const auto get_compat = [&]() -> const MetricCompatibility& {
    if (!compat) compat = check_metric_compatibility(need_conn(), need_metric());
    return *compat;
  };
  R.run("metric", "metric_compatibility_first", "ω^a_{bc} + ω_{cd}^e S^{ad}_{be} = 0", tol, [&] {
    need_metric();
    return value(get_compat().first, "indices lowered with g_{ab} = (g^{ab})^{-1}");
  });
  R.run("metric", "metric_compatibility_second", "S^{ae}_{df} g^{fg} S^{bc}_{eg} = g^{ab} δ^c_d", tol, [&] {
    need_metric();
    return value(get_compat().second, "stated for F = 0; evaluated regardless");
  });
  R.run("metric", "metric_reality", "S^{ab}_{cd} g^{cd} = (g^{ba})*", tol,
        [&] { return value(check_metric_reality(need_metric(), sigma.S())); });

  // Involution on 1- and 2-forms.
  R.run("reality", "connection_reality", "(ω^a_{bc})* = ω^a_{de}(J^{de}_{bc})*", tol,
        [&] { return value(check_connection_reality(need_conn(), J)); });
  R.run("reality", "involution_compat", "(P^{ab}_{cd})* J^{cd}_{ef} = I^{ab}_{cd}P^{cd}_{ef} = I^{ab}_{ef}", tol,
        [&] {
          const CentralTensor& P = need_geom().P;
          return value(check_involution_compat(P, J, build_I(P)), "I^{ab}_{cd} = −P^{ba}_{cd}");
        });
  R.run("reality", "P_star", "(P^{ab}_{cd})* P^{dc}_{ef} = P^{ba}_{ef}", tol,
        [&] { return value(check_P_star(need_geom().P)); });
  R.run("reality", "wedge_star", "(θ^aθ^b)* = −θ^bθ^a, (df dg)* = −dg* df*", tol, [&] {
    const FrameGeometry& g = need_geom();
    Rng rng(opt.seed + 3);
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
      const AlgebraElement f = fixtures::random_element(g.N, rng);
      const AlgebraElement h = fixtures::random_element(g.N, rng);
      worst = std::max(worst, check_wedge_star(g, J, f, h));
    }
    return value(worst, "10 seeded (f, g)");
  });
  R.run("reality", "I_weak_yang_baxter", "I = −Pᵀ weak Yang–Baxter form", tol,
        [&] { return skip("not checked: condition not stated"); });

  // D_2 reality triangle.
  std::optional<D2Reality> d2r;
  const auto get_d2r = [&]() -> const D2Reality& {
    if (!d2r) d2r = check_D2_reality(need_conn());
    return *d2r;
  };
  R.run("d2reality", "D2_reality_dopo", "D₂ ∘ ȷ₂ = ȷ₃ ∘ D₂", tol, [&] {
    return value(get_d2r().dopo, braid_holds ? std::string{} : braid_note);
  });
  R.run("d2reality", "D2_reality_real2nd",
        "J^{ab}_{pe}ω^p_{cd} − J^{ap}_{de}ω^b_{cp} + J^{ab}_{pq}J^{rp}_{cd}ω^q_{re} − J^{qb}_{cp}J^{rp}_{de}ω^a_{qr} = 0",
        tol, [&] { return value(get_d2r().real2nd); });
  R.run("d2reality", "D2_reality_equi", "D₂ ∘ σ = σ₂₃ ∘ D₂", tol, [&] { return value(get_d2r().equi); });
  R.run("d2reality", "D2_reality_triangle", "D₂∘ȷ₂ = ȷ₃∘D₂ ⇔ four-term form ⇔ D₂∘σ = σ₂₃∘D₂", 10 * tol, [&] {
    const D2Reality& r = get_d2r();
    const bool real1st = r.real1st <= tol;
    double worst = std::abs(r.real2nd - r.equi);
    std::string note = "max pairwise difference";
    if (real1st) {
      worst = std::max({worst, std::abs(r.dopo - r.real2nd), std::abs(r.dopo - r.equi)});
    } else {
      note += "; D₂∘ȷ₂ leg excluded: connection is not real (residual " + fmt(r.real1st) + ")";
    }
    return value(worst, note);
  });

  // Involutions on higher tensor powers.
  for (int k = 2; k <= opt.max_order; ++k) {
    R.run("jn", "jn_involutive_" + std::to_string(k), "(J^{(" + std::to_string(k) + ")})* J^{(" + std::to_string(k) + ")} = 1", tol,
          [&] { return value(check_jn_involutive(build_jn(sigma, k)), braid_holds ? std::string{} : braid_note); });
  }
  R.run("jn", "jn_recursive_forms",
        "ȷ₃ = σ₁₂σ₂₃ε₂₃ε₁₂(ȷ₁⊗ȷ₂); ȷ₄ = σ₁₂σ₂₃σ₃₄ε₃₄ε₂₃ε₁₂(ȷ₁⊗ȷ₃) = σ₂₃σ₃₄σ₁₂σ₂₃ε₂₃ε₁₂ε₃₄ε₂₃(ȷ₂⊗ȷ₂)", tol, [&] {
          if (!braid_holds) return skip("braid equation fails (" + braid_note + ")");
          double worst = max_abs_diff(build_jn(sigma, 3), j3_recursive(sigma));
          worst = std::max(worst, max_abs_diff(build_jn(sigma, 4), j4_recursive_1_3(sigma)));
          worst = std::max(worst, max_abs_diff(build_jn(sigma, 4), j4_recursive_2_2(sigma)));
          for (int k = 3; k <= opt.max_order; ++k) {
            worst = std::max(worst, max_abs_diff(build_jn(sigma, k),
                                                 build_jn(sigma, k, alternative_reverse_word(k))));
          }
          return value(worst, "includes the alternative reduced word up to order " + std::to_string(opt.max_order));
        });
  R.run("fifa", "fifa", "σ_{i(i+1)} ℓ_n = ℓ_n σ⁻¹_{(n−i)(n+1−i)}", tol, [&] {
    double worst = 0.0;
    for (int k = 2; k <= opt.max_order; ++k)
      for (int i = 1; i < k; ++i) worst = std::max(worst, check_fifa(sigma, k, i));
    return value(worst, "n = 2.." + std::to_string(opt.max_order) + ", all i");
  });
  R.run("fifa", "sigma_inverse_j4", "σ₁₂⁻¹ ȷ₄ = ȷ₄ σ₁₂", tol, [&] { return value(check_sigma_inverse_j4(sigma)); });

  // Higher covariant derivatives.
  R.run("lemma", "Dn_lemma", "D_n ∘ σ_{(i−1)i} = σ_{i(i+1)} ∘ D_n", tol, [&] {
    const Connection& c = need_conn();
    Rng rng(opt.seed + 4);
    double worst = 0.0;
    for (int k = 2; k <= opt.max_order; ++k)
      for (int i = 2; i <= k; ++i) {
        worst = std::max(worst, check_Dn_lemma(c, fixtures::random_field(n, gp->N, k, rng), i));
      }
    return value(worst, "seeded fields, n = 2.." + std::to_string(opt.max_order));
  });
  for (int k = 1; k < opt.max_order; ++k) {
    R.run("dnreality", "Dn_reality_" + std::to_string(k), "D_n ∘ ȷ_n = ȷ_{n+1} ∘ D_n", tol, [&] {
      return value(check_Dn_reality(need_conn(), k), braid_holds ? std::string{} : braid_note);
    });
  }

  // Curvature.
  R.run("curvature", "curvature_d0_formula", "Curv_(0)(θ^a) = θ²⊗θ^a + π₁₂σ₁₂σ₂₃σ₁₂(θ^a⊗θ⊗θ)", tol, [&] {
    const FrameGeometry& g = need_geom();
    const Connection d0 = d0_connection(gp, sigma);
    const std::vector<FrameTensorField> closed = curvature_d0_formula(g, sigma);
    double worst = 0.0;
    for (int a = 0; a < g.n; ++a) {
      worst = std::max(worst, max_coeff_distance(curvature_map(d0, FrameTensorField::basis(g.n, g.N, {a})),
                                                 closed[static_cast<std::size_t>(a)]));
    }
    return value(worst, "evaluated for D_(0)");
  });
  R.run("curvature", "curvature_left_linearity", "Curv(fξ) = f Curv(ξ)", tol, [&] {
    const Connection& c = need_conn();
    const double t = tors ? tors->form_norm : torsion(c).form_norm;
    if (t > tol) return skip("connection has torsion " + fmt(t) + "; left-linearity needs a torsion-free connection");
    Rng rng(opt.seed + 5);
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
      const AlgebraElement f = fixtures::random_element(gp->N, rng);
      const FrameTensorField xi = fixtures::random_field(gp->n, gp->N, 1, rng);
      worst = std::max(worst, max_coeff_distance(curvature_map(c, left_mul(f, xi)), left_mul(f, curvature_map(c, xi))));
    }
    return value(worst, "10 seeded (f, ξ)");
  });
  R.run("curvature", "curvature_left_linearity_defect", "Curv(fξ) − f Curv(ξ) = −Σ_a Θ(df ξ_a) ⊗ θ^a", tol, [&] {
    const Connection& c = need_conn();
    Rng rng(opt.seed + 6);
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
      const AlgebraElement f = fixtures::random_element(gp->N, rng);
      const FrameTensorField xi = fixtures::random_field(gp->n, gp->N, 1, rng);
      const FrameTensorField df = differential0(f, *gp);
      FrameTensorField rhs(gp->n, gp->N, 3);
      for (int a = 0; a < gp->n; ++a) {
        rhs -= tensor_product(torsion_map(c, right_mul(df, AlgebraElement(xi.at(a)))),
                              FrameTensorField::basis(gp->n, gp->N, {a}));
      }
      const FrameTensorField lhs = curvature_map(c, left_mul(f, xi)) - left_mul(f, curvature_map(c, xi));
      worst = std::max(worst, max_coeff_distance(lhs, rhs));
    }
    return value(worst, "10 seeded (f, ξ)");
  });
  R.run("curvature", "curvature_reduction", "R^a_{bcd} P^{cd}_{ef} = R^a_{bef}", tol, [&] {
    const CurvatureData cd = curvature(need_conn());
    return value(cd.reduction_residual, "R centrality residual " + fmt(cd.centrality_residual) + " (diagnostic)");
  });
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "skipped";
}

int VerificationReport::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

int VerificationReport::exit_code() const { return count(CheckStatus::Fail) > 0 ? 1 : 0; }

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

io::Json VerificationReport::to_json() const {
  io::Json j;
  j["subject"] = subject;
  j["kind"] = kind;
  j["connection"] = connection.empty() ? io::Json(nullptr) : io::Json(connection);
  j["tolerance"] = tolerance;
  io::Json arr = io::Json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"equation_anchor", c.equation_anchor},
                   {"residual", c.residual},
                   {"tolerance", c.tolerance},
                   {"status", to_string(c.status)},
                   {"note", c.note}});
  }
  j["checks"] = std::move(arr);
  j["summary"] = {{"passed", count(CheckStatus::Pass)},
                  {"failed", count(CheckStatus::Fail)},
                  {"skipped", count(CheckStatus::Skipped)},
                  {"total", static_cast<int>(checks.size())},
                  {"exit_code", exit_code()}};
  return j;
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << subject << " (" << kind << (connection.empty() ? "" : ", connection " + connection) << ")\n";
  for (const auto& c : checks) {
    char line[160];
    const char* tag = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIP";
    if (c.status == CheckStatus::Skipped) {
      std::snprintf(line, sizeof line, "%s  %-34s", tag, c.name.c_str());
    } else {
      std::snprintf(line, sizeof line, "%s  %-34s residual %.3e  tol %.1e", tag, c.name.c_str(), c.residual, c.tolerance);
    }
    out << line;
    if (!c.note.empty()) out << "  " << c.note;
    out << '\n';
  }
  out << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail) << " failed, "
      << count(CheckStatus::Skipped) << " skipped\n";
  return out.str();
}

ConnectionMode parse_connection_mode(const std::string& s) {
  if (s == "auto") return ConnectionMode::Auto;
  if (s == "file") return ConnectionMode::File;
  if (s == "d0") return ConnectionMode::D0;
  if (s == "chi") return ConnectionMode::Chi;
  if (s == "torsion-free") return ConnectionMode::TorsionFree;
  throw InputError("unknown connection mode: " + s + " (auto, file, d0, chi, torsion-free)");
}

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> groups = {
      "structure", "theta2", "d2",      "sigma", "braid", "yb",     "unitarity", "leibniz",  "torsion",
      "metric",    "reality", "d2reality", "jn", "fifa",  "lemma", "dnreality", "curvature"};
  return groups;
}

std::set<std::string> parse_groups(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (std::find(check_groups().begin(), check_groups().end(), item) == check_groups().end()) {
      throw InputError("unknown check group: " + item);
    }
    out.insert(item);
  }
  return out;
}

double default_tolerance() {
  const char* env = std::getenv("STEHBEIN_TOL");
  if (!env || !*env) return 1e-9;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0)) throw InputError(std::string("invalid STEHBEIN_TOL: ") + env);
  return v;
}

Connection make_connection(std::shared_ptr<const FrameGeometry> geom, ConnectionMode mode, std::string* description) {
  const Braiding sigma(geom->S);
  const auto describe = [&](const char* d) {
    if (description) *description = d;
  };
  if (mode == ConnectionMode::Auto) {
    mode = geom->omega ? ConnectionMode::File : geom->chi ? ConnectionMode::Chi : ConnectionMode::D0;
  }
  switch (mode) {
    case ConnectionMode::File:
      if (!geom->omega) throw InputError("connection mode 'file' needs \"omega\" in the input");
      describe("omega from file");
      return connection_from_omega(geom, sigma, *geom->omega);
    case ConnectionMode::Chi:
      if (!geom->chi) throw InputError("connection mode 'chi' needs \"chi\" in the input");
      describe("D_(0) + chi from file");
      return with_central_correction(d0_connection(geom, sigma), *geom->chi);
    case ConnectionMode::TorsionFree: {
      const Connection base = d0_connection(geom, sigma);
      describe("D_(0) + minimum-norm torsion-free chi");
      return with_central_correction(base, solve_torsion_free_chi(base));
    }
    case ConnectionMode::D0:
    case ConnectionMode::Auto:
      break;
  }
  describe("D_(0)");
  return d0_connection(geom, sigma);
}

VerificationReport run_verify(const FrameGeometry& geom, const VerifyOptions& opt) {
  if (opt.max_order < 2) throw InputError("--max-order must be at least 2");
  VerificationReport report;
  report.subject = geom.name.empty() ? "geometry" : geom.name;
  report.kind = "geometry";
  report.tolerance = opt.tol;
  run_checks(report, &geom, Braiding(geom.S), opt);
  return report;
}

VerificationReport run_verify(const Braiding& b, const std::string& subject, const VerifyOptions& opt) {
  if (opt.max_order < 2) throw InputError("--max-order must be at least 2");
  VerificationReport report;
  report.subject = subject;
  report.kind = "braiding";
  report.tolerance = opt.tol;
  run_checks(report, nullptr, b, opt);
  return report;
}

CurvatureRun run_curvature(const FrameGeometry& geom, ConnectionMode mode) {
  CurvatureRun run;
  const Connection c = make_connection(std::make_shared<const FrameGeometry>(geom), mode, &run.connection);
  run.data = curvature(c);
  return run;
}

io::Json curvature_run_to_json(const CurvatureRun& run) {
  io::Json j = io::curvature_to_json(run.data);
  j["connection"] = run.connection;
  return j;
}

}  // namespace stehbein
