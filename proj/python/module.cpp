#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stehbein/errors.hpp"
#include "stehbein/fixtures.hpp"
#include "stehbein/involution.hpp"
#include "stehbein/io.hpp"
#include "stehbein/verify.hpp"

namespace py = pybind11;
using namespace stehbein;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

// S^{ab}_{cd} from an (n, n, n, n) array.
CentralTensor tensor_from_array(const ComplexArray& a) {
  if (a.ndim() != 4 || a.shape(0) != a.shape(1) || a.shape(0) != a.shape(2) || a.shape(0) != a.shape(3))
    throw InputError("S must have shape (n, n, n, n)");
  CentralTensor t(static_cast<int>(a.shape(0)), 4);
  std::copy(a.data(), a.data() + a.size(), t.data().begin());
  return t;
}

ComplexArray tensor_to_array(const CentralTensor& t) {
  std::vector<py::ssize_t> shape(static_cast<std::size_t>(t.rank()), t.n());
  ComplexArray out(shape);
  std::copy(t.data().begin(), t.data().end(), out.mutable_data());
  return out;
}

std::string verify_json(const std::string& text, double tol, const std::string& checks, int max_order,
                        std::uint64_t seed, const std::string& connection) {
  VerifyOptions opt;
  opt.tol = tol > 0 ? tol : default_tolerance();
  opt.groups = parse_groups(checks);
  opt.max_order = max_order;
  opt.seed = seed;
  opt.connection = parse_connection_mode(connection);
  const io::Json j = io::Json::parse(text);
  if (io::detect_kind(j) == io::FileKind::Braiding)
    return run_verify(io::braiding_from_json(j), j.value("name", "braiding"), opt).to_json().dump();
  FrameGeometry g = io::geometry_from_json(j);
  validate_geometry(g, opt.tol);
  return run_verify(g, opt).to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Verification engine for frame-based noncommutative differential calculi";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const io::Json::exception& e) {
      py::set_error(input_error, e.what());
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    }
  });

  m.def("fixture_names", &fixtures::fixture_names);
  m.def("check_groups", &check_groups);

  m.def(
      "fixture_json",
      [](const std::string& name, std::uint64_t seed) {
        if (name == "phase-twist") {
          fixtures::Rng rng(seed);
          io::Json j = io::braiding_to_json(
              fixtures::phase_twist_braiding(fixtures::random_phases(2 + static_cast<int>(seed % 3), rng)).sigma);
          j["name"] = name;
          return j.dump();
        }
        if (name == "braid-violating") {
          io::Json j = io::braiding_to_json(fixtures::braid_violating_braiding(3, seed));
          j["name"] = name;
          return j.dump();
        }
        return io::geometry_to_json(fixtures::geometry_by_name(name, seed)).dump();
      },
      py::arg("name"), py::arg("seed") = 42);

  m.def("verify_json", &verify_json, py::arg("text"), py::arg("tol") = 0.0, py::arg("checks") = "",
        py::arg("max_order") = 4, py::arg("seed") = 42, py::arg("connection") = "auto");

  m.def(
      "curvature_json",
      [](const std::string& text, const std::string& connection) {
        const FrameGeometry g = io::geometry_from_json(io::Json::parse(text));
        return curvature_run_to_json(run_curvature(g, parse_connection_mode(connection))).dump();
      },
      py::arg("text"), py::arg("connection"));

  m.def(
      "jn", [](const ComplexArray& S, int order) { return tensor_to_array(build_jn(Braiding(tensor_from_array(S)), order)); },
      py::arg("S"), py::arg("order"), "J^(n) as an array with 2n indices, upper indices first.");
  m.def(
      "check_braid", [](const ComplexArray& S) { return check_braid(Braiding(tensor_from_array(S))); }, py::arg("S"));
  m.def(
      "check_jn_involutive",
      [](const ComplexArray& S, int order) { return check_jn_involutive(build_jn(Braiding(tensor_from_array(S)), order)); },
      py::arg("S"), py::arg("order"));
  m.def(
      "check_sigma_unitarity", [](const ComplexArray& S) { return check_sigma_unitarity(tensor_from_array(S)); },
      py::arg("S"));
}
