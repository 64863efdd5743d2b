#include "stehbein/io.hpp"

#include <fstream>
#include <iostream>

#include "detail/contract.hpp"
#include "stehbein/errors.hpp"

namespace stehbein::io {

namespace {

const Json& require_array(const Json& j, std::size_t size, const std::string& what) {
  if (!j.is_array() || j.size() != size) {
    throw InputError(what + ": expected an array of length " + std::to_string(size));
  }
  return j;
}

int require_positive_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<int>() < 1) {
    throw InputError(std::string("missing or invalid \"") + key + "\" (positive integer)");
  }
  return j.at(key).get<int>();
}

// Walks a nested array of the given depth and extent, calling leaf(flat, json).
template <class Leaf>
void walk(const Json& j, int depth, int extent, std::size_t prefix, const std::string& what, Leaf&& leaf) {
  if (depth == 0) {
    leaf(prefix, j);
    return;
  }
  require_array(j, static_cast<std::size_t>(extent), what);
  for (int i = 0; i < extent; ++i) {
    walk(j[static_cast<std::size_t>(i)], depth - 1, extent,
         prefix * static_cast<std::size_t>(extent) + static_cast<std::size_t>(i), what, leaf);
  }
}

template <class Leaf>
Json build(int depth, int extent, std::size_t prefix, Leaf&& leaf) {
  if (depth == 0) return leaf(prefix);
  Json arr = Json::array();
  for (int i = 0; i < extent; ++i) {
    arr.push_back(build(depth - 1, extent, prefix * static_cast<std::size_t>(extent) + static_cast<std::size_t>(i), leaf));
  }
  return arr;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw InputError(what + ": expected a complex number [re, im]");
}

Json matrix_to_json(const AlgebraElement& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

AlgebraElement matrix_from_json(const Json& j, int N, const std::string& what) {
  require_array(j, static_cast<std::size_t>(N), what);
  AlgebraElement m(N, N);
  for (int r = 0; r < N; ++r) {
    require_array(j[static_cast<std::size_t>(r)], static_cast<std::size_t>(N), what);
    for (int c = 0; c < N; ++c) {
      m(r, c) = complex_from_json(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], what);
    }
  }
  return m;
}

Json tensor_to_json(const CentralTensor& t) {
  return build(t.rank(), t.n(), 0, [&](std::size_t flat) { return complex_to_json(t[flat]); });
}

CentralTensor tensor_from_json(const Json& j, int n, int rank, const std::string& what) {
  CentralTensor t(n, rank);
  walk(j, rank, n, 0, what, [&](std::size_t flat, const Json& leaf) {
    if (leaf.is_array() && !leaf.empty() && leaf[0].is_array()) {
      throw InputError(what + " must be central: entries are complex numbers, not matrices");
    }
    t[flat] = complex_from_json(leaf, what);
  });
  return t;
}

Json field_to_json(const FrameTensorField& t) {
  return build(t.degree(), t.frame_dim(), 0,
               [&](std::size_t flat) { return matrix_to_json(AlgebraElement(t.coeff(flat))); });
}

FrameTensorField field_from_json(const Json& j, int n, int N, int degree, const std::string& what) {
  FrameTensorField t(n, N, degree);
  walk(j, degree, n, 0, what,
       [&](std::size_t flat, const Json& leaf) { t.coeff(flat) = matrix_from_json(leaf, N, what); });
  return t;
}

Json geometry_to_json(const FrameGeometry& g) {
  Json j;
  j["name"] = g.name;
  j["matrix_dim"] = g.N;
  j["frame_dim"] = g.n;
  Json lambda = Json::array();
  for (const auto& l : g.lambda) lambda.push_back(matrix_to_json(l));
  j["lambda"] = std::move(lambda);
  j["P"] = tensor_to_json(g.P);
  j["S"] = tensor_to_json(g.S);
  if (g.tau) j["tau"] = tensor_to_json(*g.tau);
  j["F"] = tensor_to_json(g.F);
  j["K"] = tensor_to_json(g.K);
  if (g.g) j["metric"] = tensor_to_json(*g.g);
  if (g.omega) j["omega"] = field_to_json(*g.omega);
  if (g.chi) j["chi"] = tensor_to_json(*g.chi);
  return j;
}

FrameGeometry geometry_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("geometry file: top level must be an object");
  FrameGeometry g;
  g.N = require_positive_int(j, "matrix_dim");
  g.n = require_positive_int(j, "frame_dim");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("\"name\" must be a string");
    g.name = j["name"].get<std::string>();
  }
  if (!j.contains("lambda")) throw InputError("geometry file: missing \"lambda\"");
  require_array(j["lambda"], static_cast<std::size_t>(g.n), "lambda");
  for (int a = 0; a < g.n; ++a) {
    g.lambda.push_back(matrix_from_json(j["lambda"][static_cast<std::size_t>(a)], g.N, "lambda"));
  }
  if (!j.contains("P")) throw InputError("geometry file: missing \"P\"");
  g.P = tensor_from_json(j["P"], g.n, 4, "P");
  if (j.contains("tau")) g.tau = tensor_from_json(j["tau"], g.n, 4, "tau");
  if (j.contains("S")) {
    g.S = tensor_from_json(j["S"], g.n, 4, "S");
  } else if (g.tau) {
    g.S = sigma_from_tau(*g.tau, g.P).S();
  } else {
    throw InputError("geometry file: one of \"S\" or \"tau\" is required");
  }
  g.F = j.contains("F") ? tensor_from_json(j["F"], g.n, 3, "F") : CentralTensor(g.n, 3);
  g.K = j.contains("K") ? tensor_from_json(j["K"], g.n, 2, "K") : CentralTensor(g.n, 2);
  if (j.contains("metric")) g.g = tensor_from_json(j["metric"], g.n, 2, "metric");
  if (j.contains("omega")) g.omega = field_from_json(j["omega"], g.n, g.N, 3, "omega");
  if (j.contains("chi")) g.chi = tensor_from_json(j["chi"], g.n, 3, "chi");
  return g;
}

Json braiding_to_json(const Braiding& b) {
  Json j;
  j["n"] = b.n();
  j["S"] = tensor_to_json(b.S());
  return j;
}

Braiding braiding_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("braiding file: top level must be an object");
  const int n = require_positive_int(j, "n");
  if (!j.contains("S")) throw InputError("braiding file: missing \"S\"");
  return Braiding(tensor_from_json(j["S"], n, 4, "S"));
}

FileKind detect_kind(const Json& j) {
  if (j.is_object() && j.contains("lambda")) return FileKind::Geometry;
  if (j.is_object() && j.contains("n") && j.contains("S")) return FileKind::Braiding;
  throw InputError("input is neither a geometry file nor a braiding file");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

FrameGeometry load_geometry(const std::string& path, double tol) {
  FrameGeometry g = geometry_from_json(read_json_file(path));
  validate_geometry(g, tol);
  if (g.tau) {
    const double r = max_abs_diff(sigma_from_tau(*g.tau, g.P).S(), g.S);
    if (r > tol) throw InvariantViolation("S_matches_tau", r);
  }
  return g;
}

Json curvature_to_json(const CurvatureData& data) {
  Json j;
  j["R"] = field_to_json(data.R);
  j["Ricci"] = data.ricci ? field_to_json(*data.ricci) : Json(nullptr);
  j["centrality_residual"] = data.centrality_residual;
  j["reduction_residual"] = data.reduction_residual;
  return j;
}

Json jn_to_json(int order, const CentralTensor& Jn) {
  Json j;
  j["order"] = order;
  j["n"] = Jn.n();
  j["J"] = tensor_to_json(Jn);
  return j;
}

}  // namespace stehbein::io
