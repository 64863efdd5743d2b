#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "stehbein/io.hpp"

namespace stehbein {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string equation_anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Skipped;
  std::string note;
};

struct VerificationReport {
  std::string subject;
  std::string kind;        ///< "geometry" or "braiding"
  std::string connection;  ///< empty without a geometry
  double tolerance = 0.0;
  std::vector<CheckResult> checks;

  int count(CheckStatus s) const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const;
  const CheckResult* find(const std::string& name) const;
  io::Json to_json() const;
  /// One line per check plus a totals line.
  std::string summary() const;
};

enum class ConnectionMode { Auto, File, D0, Chi, TorsionFree };

ConnectionMode parse_connection_mode(const std::string& s);

struct VerifyOptions {
  double tol = 1e-9;
  std::set<std::string> groups;  ///< empty selects every group
  int max_order = 4;
  std::uint64_t seed = 42;
  ConnectionMode connection = ConnectionMode::Auto;
};

/// Check groups accepted by --checks, in report order.
const std::vector<std::string>& check_groups();

/// Splits a comma list and validates every entry against check_groups().
std::set<std::string> parse_groups(const std::string& list);

/// 1e-9, or the value of STEHBEIN_TOL when set. Throws InputError on a bad value.
double default_tolerance();

/// Auto picks the file's omega, then D_(0) + the file's chi, then D_(0).
/// `description` receives a short label for reports.
Connection make_connection(std::shared_ptr<const FrameGeometry> geom, ConnectionMode mode,
                           std::string* description = nullptr);

VerificationReport run_verify(const FrameGeometry& geom, const VerifyOptions& opt);
/// Braiding-only input: every check needing a geometry is skipped with a note.
VerificationReport run_verify(const Braiding& b, const std::string& subject, const VerifyOptions& opt);

struct CurvatureRun {
  CurvatureData data;
  std::string connection;
};
CurvatureRun run_curvature(const FrameGeometry& geom, ConnectionMode mode);
io::Json curvature_run_to_json(const CurvatureRun& run);

}  // namespace stehbein
