// stehbein: verify frame-based differential calculi from JSON files.
//
//   stehbein fixture su2-flip --out su2.json
//   stehbein verify su2.json --report report.json
//   stehbein curvature su2.json --connection torsion-free --out R.json
//   stehbein braid-check twist.json
//   stehbein jn twist.json --order 3

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stehbein/errors.hpp"
#include "stehbein/fixtures.hpp"
#include "stehbein/involution.hpp"
#include "stehbein/io.hpp"
#include "stehbein/verify.hpp"

namespace {

using namespace stehbein;

constexpr int kExitInput = 2;

struct Common {
  double tol = 0.0;
  std::string checks;
  int max_order = 4;
  std::uint64_t seed = 42;
  std::string report;
  std::string connection = "auto";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--tol", c.tol, "residual tolerance (default 1e-9, or $STEHBEIN_TOL)")->check(CLI::PositiveNumber);
  cmd->add_option("--checks", c.checks, "comma list of check groups (default: all)");
  cmd->add_option("--max-order", c.max_order, "highest tensor degree for j_n and D_n")->check(CLI::Range(2, 6));
  cmd->add_option("--seed", c.seed, "seed for sampled checks");
  cmd->add_option("--report", c.report, "write the JSON report here ('-' for stdout)");
}

VerifyOptions options_from(const Common& c) {
  VerifyOptions opt;
  opt.tol = c.tol > 0 ? c.tol : default_tolerance();
  opt.groups = parse_groups(c.checks);
  opt.max_order = c.max_order;
  opt.seed = c.seed;
  opt.connection = parse_connection_mode(c.connection);
  return opt;
}

int emit(const VerificationReport& report, const Common& c) {
  // With the report on stdout the summary moves to stderr so the JSON stays parseable.
  (c.report == "-" ? std::cerr : std::cout) << report.summary();
  if (!c.report.empty()) io::write_json_file(c.report, report.to_json());
  return report.exit_code();
}

int do_verify(const std::string& path, const Common& c, const std::set<std::string>& restrict_to) {
  VerifyOptions opt = options_from(c);
  if (!restrict_to.empty() && opt.groups.empty()) opt.groups = restrict_to;
  const io::Json j = io::read_json_file(path);
  if (io::detect_kind(j) == io::FileKind::Braiding) {
    return emit(run_verify(io::braiding_from_json(j), j.value("name", path), opt), c);
  }
  return emit(run_verify(io::load_geometry(path, opt.tol), opt), c);
}

PermutationWord parse_word(const std::string& text, int order) {
  PermutationWord w{order, {}};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int letter = 0;
    try {
      letter = std::stoi(item);
    } catch (const std::exception&) {
      throw InputError("bad letter in --word: '" + item + "'");
    }
    if (letter < 1 || letter >= order) throw InputError("--word letter out of range 1.." + std::to_string(order - 1));
    w.letters.push_back(letter);
  }
  return w;
}

io::Json fixture_json(const std::string& name, std::uint64_t seed) {
  if (name == "phase-twist") {
    fixtures::Rng rng(seed);
    const int n = 2 + static_cast<int>(seed % 3);
    io::Json j = io::braiding_to_json(fixtures::phase_twist_braiding(fixtures::random_phases(n, rng)).sigma);
    j["name"] = "phase-twist";
    return j;
  }
  if (name == "braid-violating") {
    io::Json j = io::braiding_to_json(fixtures::braid_violating_braiding(3, seed));
    j["name"] = "braid-violating";
    return j;
  }
  return io::geometry_to_json(fixtures::geometry_by_name(name, seed));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for frame-based noncommutative differential calculi"};
  app.require_subcommand(1);

  Common common;
  std::string file;
  std::string out = "-";

  auto* verify = app.add_subcommand("verify", "run the check suite on a geometry or braiding file");
  verify->add_option("file", file, "geometry or braiding JSON")->required();
  add_common(verify, common);
  verify->add_option("--connection", common.connection, "auto, file, d0, chi or torsion-free");

  std::string curv_connection;
  auto* curv = app.add_subcommand("curvature", "curvature tensor R^a_{bcd} of a connection");
  curv->add_option("file", file, "geometry JSON")->required();
  curv->add_option("--connection", curv_connection, "file, d0, chi, torsion-free or auto")->required();
  curv->add_option("--out", out, "output path ('-' for stdout)");
  curv->add_option("--tol", common.tol, "load tolerance")->check(CLI::PositiveNumber);

  auto* braid = app.add_subcommand("braid-check", "braid, Yang-Baxter, unitarity and j_n checks");
  braid->add_option("file", file, "geometry or braiding JSON")->required();
  add_common(braid, common);

  int order = 2;
  std::string word;
  auto* jn = app.add_subcommand("jn", "the involution tensor J^(n)");
  jn->add_option("file", file, "geometry or braiding JSON")->required();
  jn->add_option("--order", order, "tensor degree n")->check(CLI::Range(1, 6));
  jn->add_option("--word", word, "reduced word as a comma list of letters (default: the reversal word)");
  jn->add_option("--out", out, "output path ('-' for stdout)");
  jn->add_option("--tol", common.tol, "load tolerance")->check(CLI::PositiveNumber);

  std::string fixture_name;
  std::uint64_t fixture_seed = 42;
  auto* fixture = app.add_subcommand("fixture", "write a built-in fixture");
  fixture->add_option("name", fixture_name, "fixture name")->required()->check(CLI::IsMember(fixtures::fixture_names()));
  fixture->add_option("--seed", fixture_seed, "seed for random fixtures");
  fixture->add_option("--out", out, "output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*verify) return do_verify(file, common, {});
    if (*braid) return do_verify(file, common, {"braid", "yb", "unitarity", "jn", "fifa"});
    if (*curv) {
      const double tol = common.tol > 0 ? common.tol : default_tolerance();
      const CurvatureRun run = run_curvature(io::load_geometry(file, tol), parse_connection_mode(curv_connection));
      io::write_json_file(out, curvature_run_to_json(run));
      return 0;
    }
    if (*jn) {
      const double tol = common.tol > 0 ? common.tol : default_tolerance();
      const io::Json j = io::read_json_file(file);
      const Braiding b = io::detect_kind(j) == io::FileKind::Braiding ? io::braiding_from_json(j)
                                                                      : Braiding(io::load_geometry(file, tol).S);
      std::optional<PermutationWord> w;
      if (!word.empty()) w = parse_word(word, order);
      io::write_json_file(out, io::jn_to_json(order, build_jn(b, order, w)));
      return 0;
    }
    if (*fixture) {
      io::write_json_file(out, fixture_json(fixture_name, fixture_seed));
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
