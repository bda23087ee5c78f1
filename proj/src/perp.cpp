#include "uncert/perp.hpp"

#include <cmath>
#include <string>

#include "uncert/errors.hpp"
#include "uncert/random_sampling.hpp"

namespace uncert {

Sign select_sign(const HermitianOperator& a, const HermitianOperator& b, const StateVector& psi,
                 const Tolerances& tol) {
  // ⟨[A,B]⟩ = i·c; s·i⟨[A,B]⟩ = −s·c must be ≥ 0.
  const double c = commutator_mean(a, b, psi, tol);
  return c > 0.0 ? Sign::minus : Sign::plus;
}

Sign select_sign_mixed(const HermitianOperator& a, const HermitianOperator& b,
                       const DensityMatrix& rho, const Tolerances& tol) {
  const double c = commutator_mean_mixed(a, b, rho, tol);
  return c > 0.0 ? Sign::minus : Sign::plus;
}

namespace {

// (A + coeff·iB − ⟨A + coeff·iB⟩)|ψ⟩, projected against ψ twice.
CVec centered_combination(const HermitianOperator& a, const HermitianOperator& b,
                          const StateVector& psi, double coeff) {
  CVec w = a.apply(psi.amplitudes());
  w += Complex{0.0, coeff} * b.apply(psi.amplitudes());
  w -= dot(psi.amplitudes(), w) * psi.amplitudes();
  w -= dot(psi.amplitudes(), w) * psi.amplitudes();
  return w;
}

CVec centered_scaled_combination(const HermitianOperator& a, double inv_da,
                                 const HermitianOperator& b, double inv_db,
                                 const StateVector& psi, double coeff) {
  CVec w = Complex{inv_da, 0.0} * a.apply(psi.amplitudes());
  w += Complex{0.0, coeff * inv_db} * b.apply(psi.amplitudes());
  w -= dot(psi.amplitudes(), w) * psi.amplitudes();
  w -= dot(psi.amplitudes(), w) * psi.amplitudes();
  return w;
}

StateVector normalized(CVec w, const Tolerances& tol) {
  w *= Complex{1.0 / w.norm(), 0.0};
  return StateVector(std::move(w), tol);
}

}  // namespace

StateVector optimal_perp_sum(const HermitianOperator& a, const HermitianOperator& b,
                             const StateVector& psi, Sign sign, const Tolerances& tol) {
  require_same_dim(a.dim(), b.dim(), "optimal_perp_sum");
  require_same_dim(a.dim(), psi.dim(), "optimal_perp_sum");
  if (psi.dim() < 2) raise(ErrorCode::DimensionMismatch, "optimal_perp_sum needs dim >= 2");
  const double s = sign_factor(sign);
  const double scale =
      std::max(1.0, a.apply(psi.amplitudes()).norm() + b.apply(psi.amplitudes()).norm());

  CVec primary = centered_combination(a, b, psi, -s);
  if (primary.norm() > 1e-8 * scale) return normalized(std::move(primary), tol);
  // ‖(A−s·iB−⟨·⟩)ψ‖² = ΔA²+ΔB²−|⟨[A,B]⟩| vanished: every perp saturates, so
  // return the mirrored combination (nonzero unless ψ is a joint eigenstate).
  CVec mirrored = centered_combination(a, b, psi, s);
  if (mirrored.norm() > 1e-8 * scale) return normalized(std::move(mirrored), tol);
  raise(ErrorCode::JointEigenstate, "state is a joint eigenstate of A and B");
}

StateVector optimal_perp_product(const HermitianOperator& a, const HermitianOperator& b,
                                 const StateVector& psi, Sign sign, const Tolerances& tol) {
  require_same_dim(a.dim(), b.dim(), "optimal_perp_product");
  require_same_dim(a.dim(), psi.dim(), "optimal_perp_product");
  if (psi.dim() < 2) raise(ErrorCode::DimensionMismatch, "optimal_perp_product needs dim >= 2");
  const double da = std::sqrt(variance(a, psi, tol));
  const double db = std::sqrt(variance(b, psi, tol));
  const double eig_a = tol.eig_tol * std::max(1.0, a.spectral_scale());
  const double eig_b = tol.eig_tol * std::max(1.0, b.spectral_scale());
  if (da <= eig_a || db <= eig_b)
    raise(ErrorCode::ZeroVariance, "deviations " + std::to_string(da) + ", " + std::to_string(db));
  const double s = sign_factor(sign);

  CVec primary = centered_scaled_combination(a, 1.0 / da, b, 1.0 / db, psi, -s);
  if (primary.norm() > 1e-8) return normalized(std::move(primary), tol);
  CVec mirrored = centered_scaled_combination(a, 1.0 / da, b, 1.0 / db, psi, s);
  if (mirrored.norm() > 1e-8) return normalized(std::move(mirrored), tol);
  raise(ErrorCode::NullProjection, "both scaled combinations project to zero");
}

StateVector prescribed_perp(const HermitianOperator& a, const HermitianOperator& b,
                            const StateVector& psi, const Tolerances& tol) {
  require_same_dim(a.dim(), b.dim(), "prescribed_perp");
  require_same_dim(a.dim(), psi.dim(), "prescribed_perp");
  if (psi.dim() < 2) raise(ErrorCode::DimensionMismatch, "prescribed_perp needs dim >= 2");
  const bool eig_a = is_eigenstate(a, psi, tol);
  const bool eig_b = is_eigenstate(b, psi, tol);
  if (eig_a && eig_b) raise(ErrorCode::JointEigenstate, "state is a joint eigenstate of A and B");
  if (eig_a) return vaidman_decompose(b, psi, tol).perp;
  if (eig_b) return vaidman_decompose(a, psi, tol).perp;

  const StateVector perp_a = vaidman_decompose(a, psi, tol).perp;
  const StateVector perp_b = vaidman_decompose(b, psi, tol).perp;
  const double overlap = std::abs(dot(perp_a.amplitudes(), perp_b.amplitudes()));
  if (overlap >= 1.0 - 1e-10) return perp_a;  // equal rays

  CVec w = perp_a.amplitudes();
  w -= dot(perp_b.amplitudes(), w) * perp_b.amplitudes();
  // Stays inside span{ψ⊥_A, ψ⊥_B} ⊂ ψ-orthocomplement; re-project for rounding.
  w -= dot(psi.amplitudes(), w) * psi.amplitudes();
  return normalized(std::move(w), tol);
}

StateVector random_perp(const StateVector& psi, SeededRng& rng, const Tolerances& tol) {
  if (psi.dim() < 2) raise(ErrorCode::DimensionMismatch, "random_perp needs dim >= 2");
  for (int attempt = 0; attempt < 16; ++attempt) {
    const CMat u = haar_unitary(psi.dim(), rng);
    CVec chi(psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i) chi[i] = u(i, 0);  // U|+⟩, reference slot 0
    CVec w = chi;
    w -= dot(psi.amplitudes(), chi) * psi.amplitudes();
    if (w.norm() <= 1e-12) continue;
    w -= dot(psi.amplitudes(), w) * psi.amplitudes();
    return normalized(std::move(w), tol);
  }
  raise(ErrorCode::RandomPerpFailed, "16 draws projected to zero");
}

StateVector null_space_perp(const DensityMatrix& rho, SeededRng& rng, const Tolerances& tol) {
  const EighResult eig = eigh(rho.matrix());
  const std::size_t d = rho.dim();
  std::vector<std::size_t> null_cols;
  for (std::size_t k = 0; k < d; ++k)
    if (eig.eigenvalues[k] <= tol.psd_tol) null_cols.push_back(k);
  if (null_cols.empty())
    raise(ErrorCode::NoValidPerp, "density matrix is full rank; no vector orthogonal to support");

  CVec w(d);
  for (std::size_t k : null_cols) {
    const Complex coeff = rng.next_complex_gaussian();
    for (std::size_t i = 0; i < d; ++i) w[i] += coeff * eig.eigenvectors(i, k);
  }
  if (w.norm() <= 1e-12) raise(ErrorCode::RandomPerpFailed, "null-space draw collapsed");
  return normalized(std::move(w), tol);
}

StateVector make_perp(const PerpStrategy& strategy, const HermitianOperator& a,
                      const HermitianOperator& b, const StateVector& psi,
                      std::optional<Sign> sign, const Tolerances& tol) {
  const Sign s = sign.value_or(select_sign(a, b, psi, tol));
  switch (strategy.kind) {
    case PerpStrategy::Kind::vaidman_a:
      return vaidman_decompose(a, psi, tol).perp;
    case PerpStrategy::Kind::vaidman_b:
      return vaidman_decompose(b, psi, tol).perp;
    case PerpStrategy::Kind::prescribed:
      return prescribed_perp(a, b, psi, tol);
    case PerpStrategy::Kind::optimal_sum:
      return optimal_perp_sum(a, b, psi, s, tol);
    case PerpStrategy::Kind::optimal_product:
      return optimal_perp_product(a, b, psi, s, tol);
    case PerpStrategy::Kind::random: {
      SeededRng rng(strategy.seed);
      return random_perp(psi, rng, tol);
    }
  }
  raise(ErrorCode::InvalidArgument, "unknown perp strategy");
}

}  // namespace uncert
