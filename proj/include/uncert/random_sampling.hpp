#pragma once

#include "uncert/quantum.hpp"
#include "uncert/rng.hpp"

namespace uncert {

/// Haar-distributed unitary: Ginibre matrix (independent standard complex
/// Gaussians, row-major draw order) → Householder QR → each column of Q
/// rescaled by the unit phase of the matching diagonal of R (U = QΛ,
/// Λ = diag(r_ii/|r_ii|)). Unitary within 1e-12 by construction.
CMat haar_unitary(std::size_t dim, SeededRng& rng);

/// First column of a Haar unitary.
StateVector random_state(std::size_t dim, SeededRng& rng,
                         const Tolerances& tol = default_tolerances());

/// (G + G†)/2 for Ginibre G — GUE-distributed and exactly Hermitian.
HermitianOperator random_hermitian(std::size_t dim, SeededRng& rng,
                                   const Tolerances& tol = default_tolerances());

}  // namespace uncert
