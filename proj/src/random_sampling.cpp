#include "uncert/random_sampling.hpp"

#include <cmath>
#include <string>

#include "uncert/errors.hpp"

namespace uncert {

namespace {

CMat ginibre(std::size_t dim, SeededRng& rng) {
  CMat g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.next_complex_gaussian();
  return g;
}

}  // namespace

CMat haar_unitary(std::size_t dim, SeededRng& rng) {
  if (dim == 0) raise(ErrorCode::InvalidArgument, "haar_unitary needs dim >= 1");
  for (int attempt = 0; attempt < 2; ++attempt) {
    const CMat g = ginibre(dim, rng);
    QrResult qr = householder_qr(g);
    bool degenerate = false;
    for (std::size_t i = 0; i < dim; ++i) {
      if (std::abs(qr.r(i, i)) < 1e-300) {
        degenerate = true;
        break;
      }
    }
    if (degenerate) continue;  // probability-zero event, retry once
    CMat u = std::move(qr.q);
    for (std::size_t j = 0; j < dim; ++j) {
      const Complex lambda = qr.r(j, j) / std::abs(qr.r(j, j));
      for (std::size_t i = 0; i < dim; ++i) u(i, j) *= lambda;
    }
    return u;
  }
  raise(ErrorCode::DegenerateDraw, "Ginibre draw produced a singular R twice");
}

StateVector random_state(std::size_t dim, SeededRng& rng, const Tolerances& tol) {
  const CMat u = haar_unitary(dim, rng);
  CVec col(dim);
  for (std::size_t i = 0; i < dim; ++i) col[i] = u(i, 0);
  return StateVector(std::move(col), tol);
}

HermitianOperator random_hermitian(std::size_t dim, SeededRng& rng, const Tolerances& tol) {
  const CMat g = ginibre(dim, rng);
  CMat h(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  return HermitianOperator(std::move(h), tol);
}

}  // namespace uncert
