#pragma once

// A validator for the JSON-schema subset used by schemas/report.schema.json:
// type (single or list), required, properties, additionalProperties: false,
// items, enum, minimum, exclusiveMinimum, minLength.

#include <string>
#include <vector>

#include "stehbein/io.hpp"

namespace stehbein::test {

using Json = io::Json;

inline bool has_type(const Json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "number") return v.is_number();
  if (t == "integer") return v.is_number_integer() || (v.is_number_float() && v.get<double>() == static_cast<long long>(v.get<double>()));
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

inline void validate(const Json& v, const Json& schema, const std::string& where, std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const Json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) ok = has_type(v, t.get<std::string>());
    for (const auto& alt : t.is_array() ? t : Json::array()) ok = ok || has_type(v, alt.get<std::string>());
    if (!ok) {
      errors.push_back(where + ": wrong type");
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == v;
    if (!found) errors.push_back(where + ": not in enum");
  }
  if (v.is_number()) {
    if (schema.contains("minimum") && v.get<double>() < schema["minimum"].get<double>())
      errors.push_back(where + ": below minimum");
    if (schema.contains("exclusiveMinimum") && v.get<double>() <= schema["exclusiveMinimum"].get<double>())
      errors.push_back(where + ": not above exclusiveMinimum");
  }
  if (v.is_string() && schema.contains("minLength") &&
      v.get<std::string>().size() < schema["minLength"].get<std::size_t>())
    errors.push_back(where + ": too short");
  if (v.is_object()) {
    for (const auto& r : schema.value("required", Json::array()))
      if (!v.contains(r.get<std::string>())) errors.push_back(where + ": missing " + r.get<std::string>());
    const Json props = schema.value("properties", Json::object());
    for (const auto& [key, val] : v.items()) {
      if (props.contains(key)) {
        validate(val, props[key], where + "." + key, errors);
      } else if (schema.contains("additionalProperties") && schema["additionalProperties"] == false) {
        errors.push_back(where + ": unexpected " + key);
      }
    }
  }
  if (v.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i)
      validate(v[i], schema["items"], where + "[" + std::to_string(i) + "]", errors);
  }
}

inline std::vector<std::string> validate(const Json& v, const Json& schema) {
  std::vector<std::string> errors;
  validate(v, schema, "$", errors);
  return errors;
}

}  // namespace stehbein::test
