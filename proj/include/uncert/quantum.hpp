#pragma once

#include "uncert/linalg.hpp"
#include "uncert/tolerances.hpp"

namespace uncert {

/// Unit-norm pure state. Validates on construction (finite entries,
/// Σ|a_i|² = 1 within norm_tol) and is immutable afterwards.
class StateVector {
 public:
  explicit StateVector(CVec amplitudes, const Tolerances& tol = default_tolerances());

  std::size_t dim() const { return amp_.dim(); }
  const CVec& amplitudes() const { return amp_; }
  const Complex& operator[](std::size_t i) const { return amp_[i]; }

 private:
  CVec amp_;
};

/// d×d self-adjoint observable. Hermiticity is checked at construction
/// (within herm_tol) and the entries are stored as given.
class HermitianOperator {
 public:
  explicit HermitianOperator(CMat entries, const Tolerances& tol = default_tolerances());

  std::size_t dim() const { return entries_.rows(); }
  const CMat& matrix() const { return entries_; }
  CVec apply(const CVec& v) const { return entries_.apply(v); }
  /// max row-sum norm, the scale in the eigenstate cutoff.
  double spectral_scale() const { return spectral_scale_; }

 private:
  CMat entries_;
  double spectral_scale_;
};

/// Hermitian, unit-trace, positive-semidefinite (eigenvalues ≥ −psd_tol).
class DensityMatrix {
 public:
  explicit DensityMatrix(CMat entries, const Tolerances& tol = default_tolerances());

  static DensityMatrix pure(const StateVector& psi, const Tolerances& tol = default_tolerances());

  std::size_t dim() const { return entries_.rows(); }
  const CMat& matrix() const { return entries_; }
  CVec apply(const CVec& v) const { return entries_.apply(v); }

 private:
  CMat entries_;
};

struct VaidmanDecomposition {
  double mean;        // ⟨O⟩
  double deviation;   // ΔO ≥ 0
  StateVector perp;   // (O − ⟨O⟩)|ψ⟩ / ΔO
};

// --- core operations -------------------------------------------------------

double expectation(const HermitianOperator& a, const StateVector& psi,
                   const Tolerances& tol = default_tolerances());

double expectation_mixed(const HermitianOperator& a, const DensityMatrix& rho,
                         const Tolerances& tol = default_tolerances());

/// ⟨A²⟩ − ⟨A⟩², computed as ‖(A−⟨A⟩)|ψ⟩‖² and clamped to [0, ∞).
double variance(const HermitianOperator& a, const StateVector& psi,
                const Tolerances& tol = default_tolerances());

double variance_mixed(const HermitianOperator& a, const DensityMatrix& rho,
                      const Tolerances& tol = default_tolerances());

/// The real number c with ⟨[A,B]⟩ = i·c (the expectation of a commutator of
/// Hermitian operators is purely imaginary; the real residual is asserted).
double commutator_mean(const HermitianOperator& a, const HermitianOperator& b,
                       const StateVector& psi, const Tolerances& tol = default_tolerances());

double commutator_mean_mixed(const HermitianOperator& a, const HermitianOperator& b,
                             const DensityMatrix& rho,
                             const Tolerances& tol = default_tolerances());

/// ½⟨{A,B}₊⟩ − ⟨A⟩⟨B⟩.
double symmetrized_covariance(const HermitianOperator& a, const HermitianOperator& b,
                              const StateVector& psi,
                              const Tolerances& tol = default_tolerances());

/// True when ΔO ≤ eig_tol · max(1, spectral scale of O).
bool is_eigenstate(const HermitianOperator& o, const StateVector& psi,
                   const Tolerances& tol = default_tolerances());

/// O|ψ⟩ = ⟨O⟩|ψ⟩ + ΔO|ψ⊥_O⟩. Throws EigenstateNoPerp below the cutoff.
VaidmanDecomposition vaidman_decompose(const HermitianOperator& o, const StateVector& psi,
                                       const Tolerances& tol = default_tolerances());

/// normalize((I − |ψ⟩⟨ψ|)χ); NullProjection when χ is parallel to ψ
/// (‖(I−P)χ‖ ≤ 1e-12·‖χ‖).
StateVector project_out(const StateVector& psi, const CVec& chi,
                        const Tolerances& tol = default_tolerances());

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace uncert
