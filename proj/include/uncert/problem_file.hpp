#pragma once

#include <map>
#include <string>

#include "uncert/quantum.hpp"

namespace uncert {

/// User-supplied problem: named observables, states and optional density
/// matrices of one dimension. Parsing is strict — unknown keys are rejected
/// and every entry is validated on load with the standard tolerances.
/// Complex numbers are two-element arrays [re, im].
struct ProblemFile {
  std::size_t dim = 0;
  std::map<std::string, HermitianOperator> operators;
  std::map<std::string, StateVector> states;
  std::map<std::string, DensityMatrix> density_matrices;

  static ProblemFile parse(const std::string& json_text,
                           const Tolerances& tol = default_tolerances());
  static ProblemFile load(const std::string& path,
                          const Tolerances& tol = default_tolerances());
};

}  // namespace uncert
