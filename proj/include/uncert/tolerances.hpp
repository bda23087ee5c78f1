#pragma once

namespace uncert {

/// Numerical tolerances used across the library. The defaults are the
/// contract: validation at 1e-12, identities at 1e-10, inequality slack at
/// 1e-9 (slack accumulates over more operations than identities do). Every
/// entry point takes a Tolerances so call sites can override per call.
struct Tolerances {
  double norm_tol = 1e-12;       // |Σ|a_i|² − 1| for states, |Tr ρ − 1|
  double herm_tol = 1e-12;       // max |M_ij − conj(M_ji)|
  double ortho_tol = 1e-10;      // |⟨ψ|ψ⊥⟩|
  double psd_tol = 1e-10;        // density-matrix eigenvalue floor (≥ −psd_tol)
  double eig_tol = 1e-10;        // eigenstate cutoff: ΔO ≤ eig_tol·max(1, spectral scale)
  double identity_tol = 1e-10;   // algebraic identities (Vaidman, parallelogram, p3)
  double violation_tol = 1e-9;   // inequality contracts LHS ≥ RHS − violation_tol
  double residual_tol = 1e-12;   // internal real/imaginary residual asserts
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace uncert
