#pragma once

#include <string>

#include <json.hpp>

#include "stehbein/braiding.hpp"
#include "stehbein/calculus.hpp"
#include "stehbein/connection.hpp"

namespace stehbein::io {

using Json = nlohmann::json;

// Complex numbers are [re, im]. Matrices and tensors are row-major nested arrays.

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& what);

Json matrix_to_json(const AlgebraElement& m);
AlgebraElement matrix_from_json(const Json& j, int N, const std::string& what);

Json tensor_to_json(const CentralTensor& t);
/// Rejects matrix-valued entries: central tensors carry plain complex numbers.
CentralTensor tensor_from_json(const Json& j, int n, int rank, const std::string& what);

/// Nested arrays of depth `degree`, each leaf an N x N matrix.
Json field_to_json(const FrameTensorField& t);
FrameTensorField field_from_json(const Json& j, int n, int N, int degree, const std::string& what);

/// Keys: "name", "matrix_dim", "frame_dim", "lambda", "P", "S" and/or "tau",
/// optional "F", "K", "metric", "omega", "chi".
Json geometry_to_json(const FrameGeometry& geom);
/// Shape checks only; see load_geometry for invariant validation.
FrameGeometry geometry_from_json(const Json& j);

/// { "n", "S" }.
Json braiding_to_json(const Braiding& b);
Braiding braiding_from_json(const Json& j);

enum class FileKind { Geometry, Braiding };
FileKind detect_kind(const Json& j);

/// Throws InputError when the file is missing or is not valid JSON.
Json read_json_file(const std::string& path);
/// "-" writes to stdout.
void write_json_file(const std::string& path, const Json& j);

/// Parses and validates. Throws InputError on malformed input and
/// InvariantViolation naming the first broken invariant.
FrameGeometry load_geometry(const std::string& path, double tol);

Json curvature_to_json(const CurvatureData& data);
Json jn_to_json(int order, const CentralTensor& Jn);

}  // namespace stehbein::io
