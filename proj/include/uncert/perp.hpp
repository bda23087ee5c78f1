#pragma once

#include <cstdint>
#include <optional>

#include "uncert/quantum.hpp"
#include "uncert/rng.hpp"

namespace uncert {

/// Sign s of the ±i⟨[A,B]⟩ term. The rule: pick s so that s·i⟨[A,B]⟩ ≥ 0 as
/// a real number; ties (⟨[A,B]⟩ = 0 on ψ) resolve to Plus for reproducibility.
enum class Sign { plus, minus };

inline double sign_factor(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }
inline char sign_symbol(Sign s) { return s == Sign::plus ? '+' : '-'; }

Sign select_sign(const HermitianOperator& a, const HermitianOperator& b, const StateVector& psi,
                 const Tolerances& tol = default_tolerances());

Sign select_sign_mixed(const HermitianOperator& a, const HermitianOperator& b,
                       const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// ψ⊥ saturating the sum relation for bound sign s. The equality direction is
/// (A − s·iB − ⟨A − s·iB⟩)|ψ⟩; when that vector is null the bound is already
/// tight for every perp and the mirrored direction (A + s·iB − ⟨·⟩)|ψ⟩ is
/// returned instead. Null both ways means ψ is a joint eigenstate.
StateVector optimal_perp_sum(const HermitianOperator& a, const HermitianOperator& b,
                             const StateVector& psi, Sign sign,
                             const Tolerances& tol = default_tolerances());

/// Same construction on A/ΔA, B/ΔB, saturating the amended product relation.
StateVector optimal_perp_product(const HermitianOperator& a, const HermitianOperator& b,
                                 const StateVector& psi, Sign sign,
                                 const Tolerances& tol = default_tolerances());

/// The illustrative case analysis: eigenstate of A → ψ⊥_B; eigenstate of
/// B → ψ⊥_A; neither and ψ⊥_A ≠ ψ⊥_B (ray-wise) → project ψ⊥_B out of ψ⊥_A;
/// equal rays → ψ⊥_A.
StateVector prescribed_perp(const HermitianOperator& a, const HermitianOperator& b,
                            const StateVector& psi, const Tolerances& tol = default_tolerances());

/// normalize((I − |ψ⟩⟨ψ|) U e₀) for a fresh Haar U; retries on the
/// probability-zero null projection, at most 16 times.
StateVector random_perp(const StateVector& psi, SeededRng& rng,
                        const Tolerances& tol = default_tolerances());

/// A perp usable with a density matrix: any unit vector in the null space of
/// ρ (mixed bounds need ⟨ψ⊥| orthogonal to the support). NoValidPerp when ρ
/// is full rank.
StateVector null_space_perp(const DensityMatrix& rho, SeededRng& rng,
                            const Tolerances& tol = default_tolerances());

struct PerpStrategy {
  enum class Kind { vaidman_a, vaidman_b, prescribed, optimal_sum, optimal_product, random };
  Kind kind = Kind::optimal_sum;
  std::uint64_t seed = 0;  // used by Kind::random only
};

StateVector make_perp(const PerpStrategy& strategy, const HermitianOperator& a,
                      const HermitianOperator& b, const StateVector& psi,
                      std::optional<Sign> sign = std::nullopt,
                      const Tolerances& tol = default_tolerances());

}  // namespace uncert
