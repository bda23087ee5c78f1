#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "uncert/perp.hpp"
#include "uncert/quantum.hpp"

namespace uncert {

/// Heisenberg–Robertson: ΔA²ΔB² ≥ |½⟨[A,B]⟩|².
double hr_bound(const HermitianOperator& a, const HermitianOperator& b, const StateVector& psi,
                const Tolerances& tol = default_tolerances());

/// Schrödinger: adds the anticommutator term |½⟨{A,B}₊⟩ − ⟨A⟩⟨B⟩|².
double schroedinger_bound(const HermitianOperator& a, const HermitianOperator& b,
                          const StateVector& psi, const Tolerances& tol = default_tolerances());

/// ΔA² + ΔB² ≥ |⟨[A,B]⟩| (implied by HR; trivial whenever HR is).
double weak_sum_bound(const HermitianOperator& a, const HermitianOperator& b,
                      const StateVector& psi, const Tolerances& tol = default_tolerances());

/// Sum relation with an orthogonal state:
///   ΔA² + ΔB² ≥ s·i⟨[A,B]⟩ + |⟨ψ|A + s·iB|ψ⊥⟩|².
/// Holds for either sign; under the sign rule the first term is |⟨[A,B]⟩|.
/// The caller-supplied ψ⊥ is checked for orthogonality, never repaired.
double mp_sum_bound_perp(const HermitianOperator& a, const HermitianOperator& b,
                         const StateVector& psi, const StateVector& psi_perp,
                         std::optional<Sign> sign = std::nullopt,
                         const Tolerances& tol = default_tolerances());

/// Sum relation via A+B: ΔA² + ΔB² ≥ ½Δ(A+B)². Zero iff ψ is an eigenstate
/// of A+B; equality iff ψ is an eigenstate of A−B.
double mp_sum_bound_aplusb(const HermitianOperator& a, const HermitianOperator& b,
                           const StateVector& psi, const Tolerances& tol = default_tolerances());

/// max of the two sum bounds above.
double mp_combined_bound(const HermitianOperator& a, const HermitianOperator& b,
                         const StateVector& psi, const StateVector& psi_perp,
                         std::optional<Sign> sign = std::nullopt,
                         const Tolerances& tol = default_tolerances());

/// max(½Δ(A+B)², ΔA², ΔB²) — nontrivial except on joint eigenstates.
double mp_triple_max_bound(const HermitianOperator& a, const HermitianOperator& b,
                           const StateVector& psi, const Tolerances& tol = default_tolerances());

/// Amended product relation:
///   ΔAΔB ≥ (s·i⟨[A,B]⟩/2) / (1 − ½|⟨ψ|A/ΔA + s·iB/ΔB|ψ⊥⟩|²).
/// With the sign rule the denominator is ≥ |⟨[A,B]⟩|/(2ΔAΔB) ≥ 0;
/// DegenerateDenominator signals sign/orthogonality misuse.
double amended_hr_bound(const HermitianOperator& a, const HermitianOperator& b,
                        const StateVector& psi, const StateVector& psi_perp,
                        std::optional<Sign> sign = std::nullopt,
                        const Tolerances& tol = default_tolerances());

/// Mixed-state extension: for ψ⊥ orthogonal to the support of ρ,
///   ΔA²_ρ + ΔB²_ρ ≥ s·i·Tr([A,B]ρ) + ⟨(A+s·iB)ψ⊥| ρ |(A+s·iB)ψ⊥⟩.
/// Reduces to mp_sum_bound_perp on rank-1 ρ.
double mixed_sum_bound(const HermitianOperator& a, const HermitianOperator& b,
                       const DensityMatrix& rho, const StateVector& psi_perp,
                       std::optional<Sign> sign = std::nullopt,
                       const Tolerances& tol = default_tolerances());

/// Holevo: ΔA + ΔA′ ≥ (a − a′)|⟨ψ|ψ′⟩| / √(2(1−|⟨ψ|ψ′⟩|)).
/// Implemented literally with (a − a′): negative (vacuous) when a < a′;
/// callers may symmetrize.
double holevo_bound(const HermitianOperator& a, const StateVector& psi,
                    const StateVector& psi_prime, const Tolerances& tol = default_tolerances());

/// Two-state extension: with Ā = A−a, B̄′ = B−b′, ε = ⟨ψ|ψ′⟩/|⟨ψ|ψ′⟩|,
///   ΔA²_ψ + ΔB²_ψ′ ≥ [Re(ε⟨ψ′|−Ā − σiB̄′|ψ⟩)]²/(2(1−|⟨ψ|ψ′⟩|))
///                     − σi(ε*⟨ψ|ĀB̄′|ψ′⟩ − ε⟨ψ′|B̄′Ā|ψ⟩)
/// for both linked signs σ; returns the larger branch.
double two_state_sum_bound(const HermitianOperator& a, const HermitianOperator& b,
                           const StateVector& psi, const StateVector& psi_prime,
                           const Tolerances& tol = default_tolerances());

/// Single branch of the above (σ = +1 or −1); used by the limit checks.
double two_state_sum_bound_branch(const HermitianOperator& a, const HermitianOperator& b,
                                  const StateVector& psi, const StateVector& psi_prime,
                                  double branch_sign,
                                  const Tolerances& tol = default_tolerances());

/// Parallelogram law with C = A−⟨A⟩, D = B−⟨B⟩ and |α| = 1:
/// returns (2ΔA²+2ΔB², ‖(C+αD)ψ‖² + ‖(C−αD)ψ‖²); the two agree to rounding.
std::pair<double, double> parallelogram_sides(const HermitianOperator& a,
                                              const HermitianOperator& b, const StateVector& psi,
                                              Complex alpha,
                                              const Tolerances& tol = default_tolerances());

/// ‖(C − s·iD)ψ‖² = ΔA² + ΔB² + s·⟨[A,B]⟩/i for s = ±1; both sides returned
/// for identity tests.
std::pair<double, double> p3_identity_sides(const HermitianOperator& a,
                                            const HermitianOperator& b, const StateVector& psi,
                                            double s, const Tolerances& tol = default_tolerances());

/// Everything evaluated on one (A, B, ψ [, ψ⊥]) instance.
struct BoundReport {
  double sum_of_variances = 0.0;
  double product_of_variances = 0.0;
  double hr = 0.0;
  double schroedinger = 0.0;
  double weak_sum = 0.0;
  std::optional<double> eq3;         // needs ψ⊥
  double eq4 = 0.0;
  double eq5 = 0.0;                  // max of applicable sum bounds
  double triple_max = 0.0;
  std::optional<double> amended_hr;  // needs ψ⊥ and nonzero deviations
  std::string active_bound;          // "eq3" or "eq4"
  std::string resolved_sign;         // "+" or "-"
  std::map<std::string, double> residuals;  // bound name → LHS − RHS

  bool operator==(const BoundReport&) const = default;
};

BoundReport evaluate_bounds(const HermitianOperator& a, const HermitianOperator& b,
                            const StateVector& psi, const StateVector* psi_perp = nullptr,
                            std::optional<Sign> sign = std::nullopt,
                            const Tolerances& tol = default_tolerances());

}  // namespace uncert
