#include "uncert/problem_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uncert/errors.hpp"

namespace uncert {

namespace {

using nlohmann::json;

Complex parse_complex(const json& node, const std::string& path) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
    raise(ErrorCode::ParseError, path + ": expected a [re, im] pair");
  return Complex{node[0].get<double>(), node[1].get<double>()};
}

CVec parse_vector(const json& node, std::size_t dim, const std::string& path) {
  if (!node.is_array() || node.size() != dim)
    raise(ErrorCode::ParseError, path + ": expected an array of " + std::to_string(dim) +
                                     " complex entries");
  CVec v(dim);
  for (std::size_t i = 0; i < dim; ++i)
    v[i] = parse_complex(node[i], path + "[" + std::to_string(i) + "]");
  return v;
}

CMat parse_matrix(const json& node, std::size_t dim, const std::string& path) {
  if (!node.is_array() || node.size() != dim)
    raise(ErrorCode::ParseError,
          path + ": expected " + std::to_string(dim) + " rows");
  CMat m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = node[i];
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != dim)
      raise(ErrorCode::ParseError,
            row_path + ": expected " + std::to_string(dim) + " complex entries");
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = parse_complex(row[j], row_path + "[" + std::to_string(j) + "]");
  }
  return m;
}

}  // namespace

ProblemFile ProblemFile::parse(const std::string& json_text, const Tolerances& tol) {
  json root = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded()) raise(ErrorCode::ParseError, "not valid JSON");
  if (!root.is_object()) raise(ErrorCode::ParseError, "top level must be an object");

  for (const auto& [key, value] : root.items()) {
    if (key != "dim" && key != "operators" && key != "states" && key != "density_matrices")
      raise(ErrorCode::ParseError, "unknown key \"" + key + "\"");
  }
  if (!root.contains("dim") || !root["dim"].is_number_unsigned())
    raise(ErrorCode::ParseError, "dim: expected a positive integer");
  ProblemFile file;
  file.dim = root["dim"].get<std::size_t>();
  if (file.dim == 0) raise(ErrorCode::ParseError, "dim: expected a positive integer");

  if (root.contains("operators")) {
    if (!root["operators"].is_object())
      raise(ErrorCode::ParseError, "operators: expected an object of named matrices");
    for (const auto& [name, value] : root["operators"].items()) {
      CMat m = parse_matrix(value, file.dim, "operators." + name);
      try {
        file.operators.emplace(name, HermitianOperator(std::move(m), tol));
      } catch (const Error& e) {
        raise(e.code(), "operators." + name + ": " + e.what());
      }
    }
  }
  if (root.contains("states")) {
    if (!root["states"].is_object())
      raise(ErrorCode::ParseError, "states: expected an object of named vectors");
    for (const auto& [name, value] : root["states"].items()) {
      CVec v = parse_vector(value, file.dim, "states." + name);
      try {
        file.states.emplace(name, StateVector(std::move(v), tol));
      } catch (const Error& e) {
        raise(e.code(), "states." + name + ": " + e.what());
      }
    }
  }
  if (root.contains("density_matrices")) {
    if (!root["density_matrices"].is_object())
      raise(ErrorCode::ParseError, "density_matrices: expected an object of named matrices");
    for (const auto& [name, value] : root["density_matrices"].items()) {
      CMat m = parse_matrix(value, file.dim, "density_matrices." + name);
      try {
        file.density_matrices.emplace(name, DensityMatrix(std::move(m), tol));
      } catch (const Error& e) {
        raise(e.code(), "density_matrices." + name + ": " + e.what());
      }
    }
  }
  return file;
}

ProblemFile ProblemFile::load(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::ParseError, "cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), tol);
}

}  // namespace uncert
