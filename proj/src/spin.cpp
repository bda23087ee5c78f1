#include "uncert/spin.hpp"

#include <cmath>
#include <string>

#include "uncert/errors.hpp"

namespace uncert {

SpinTriple spin_operators(double j, std::size_t max_dim, const Tolerances& tol) {
  const double two_j = 2.0 * j;
  if (!(j >= 0.0) || std::abs(two_j - std::round(two_j)) > 1e-9)
    raise(ErrorCode::InvalidSpin, "j must be a nonnegative half-integer, got " + std::to_string(j));
  const std::size_t dim = static_cast<std::size_t>(std::llround(two_j)) + 1;
  if (dim > max_dim)
    raise(ErrorCode::InvalidSpin,
          "dimension " + std::to_string(dim) + " exceeds limit " + std::to_string(max_dim));

  CMat jz(dim, dim);
  CMat jplus(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double m = j - static_cast<double>(i);  // descending m
    jz(i, i) = Complex{m, 0.0};
    if (i > 0) jplus(i - 1, i) = Complex{std::sqrt(j * (j + 1.0) - m * (m + 1.0)), 0.0};
  }
  const CMat jminus = jplus.adjoint();

  CMat jx = jplus;
  jx += jminus;
  jx *= Complex{0.5, 0.0};
  CMat jy = jplus;
  jy -= jminus;
  jy *= Complex{0.0, -0.5};  // 1/(2i)

  return SpinTriple{j, HermitianOperator(std::move(jx), tol), HermitianOperator(std::move(jy), tol),
                    HermitianOperator(std::move(jz), tol)};
}

StateVector figure1_state(double phi, const Tolerances& tol) {
  CVec amp(3);
  amp[0] = Complex{std::cos(phi), 0.0};
  amp[2] = Complex{std::sin(phi), 0.0};
  return StateVector(std::move(amp), tol);
}

}  // namespace uncert
