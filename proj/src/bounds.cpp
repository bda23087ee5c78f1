#include "uncert/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uncert/errors.hpp"

namespace uncert {

namespace {

void require_uncertainty_dim(std::size_t dim, const char* what) {
  if (dim < 2)
    raise(ErrorCode::DimensionMismatch, std::string(what) + " needs dim >= 2");
}

void check_orthogonal(const StateVector& psi, const StateVector& psi_perp,
                      const Tolerances& tol, const char* what) {
  const double overlap = std::abs(dot(psi.amplitudes(), psi_perp.amplitudes()));
  if (overlap > tol.ortho_tol)
    raise(ErrorCode::NotOrthogonal,
          std::string(what) + ": |<psi|psi_perp>| = " + std::to_string(overlap));
}

HermitianOperator sum_operator(const HermitianOperator& a, const HermitianOperator& b,
                               const Tolerances& tol) {
  CMat m = a.matrix();
  m += b.matrix();
  return HermitianOperator(std::move(m), tol);
}

// ⟨ψ|A + s·iB|ψ⊥⟩
Complex cross_element(const HermitianOperator& a, const HermitianOperator& b,
                      const StateVector& psi, const StateVector& psi_perp, double s) {
  const Complex ma = dot(psi.amplitudes(), a.apply(psi_perp.amplitudes()));
  const Complex mb = dot(psi.amplitudes(), b.apply(psi_perp.amplitudes()));
  return ma + Complex{0.0, s} * mb;
}

}  // namespace

double hr_bound(const HermitianOperator& a, const HermitianOperator& b, const StateVector& psi,
                const Tolerances& tol) {
  require_uncertainty_dim(psi.dim(), "hr_bound");
  const double c = commutator_mean(a, b, psi, tol);
  return 0.25 * c * c;
}

double schroedinger_bound(const HermitianOperator& a, const HermitianOperator& b,
                          const StateVector& psi, const Tolerances& tol) {
  const double cov = symmetrized_covariance(a, b, psi, tol);
  return hr_bound(a, b, psi, tol) + cov * cov;
}

double weak_sum_bound(const HermitianOperator& a, const HermitianOperator& b,
                      const StateVector& psi, const Tolerances& tol) {
  require_uncertainty_dim(psi.dim(), "weak_sum_bound");
  return std::abs(commutator_mean(a, b, psi, tol));
}

double mp_sum_bound_perp(const HermitianOperator& a, const HermitianOperator& b,
                         const StateVector& psi, const StateVector& psi_perp,
                         std::optional<Sign> sign, const Tolerances& tol) {
  require_uncertainty_dim(psi.dim(), "mp_sum_bound_perp");
  require_same_dim(a.dim(), b.dim(), "mp_sum_bound_perp");
  require_same_dim(a.dim(), psi.dim(), "mp_sum_bound_perp");
  require_same_dim(psi.dim(), psi_perp.dim(), "mp_sum_bound_perp");
  check_orthogonal(psi, psi_perp, tol, "mp_sum_bound_perp");
  const Sign resolved = sign.value_or(select_sign(a, b, psi, tol));
  const double s = sign_factor(resolved);
  const double c = commutator_mean(a, b, psi, tol);
  return -s * c + std::norm(cross_element(a, b, psi, psi_perp, s));
}

double mp_sum_bound_aplusb(const HermitianOperator& a, const HermitianOperator& b,
                           const StateVector& psi, const Tolerances& tol) {
  require_uncertainty_dim(psi.dim(), "mp_sum_bound_aplusb");
  require_same_dim(a.dim(), b.dim(), "mp_sum_bound_aplusb");
  require_same_dim(a.dim(), psi.dim(), "mp_sum_bound_aplusb");
  // Variance form; no 0/0 at eigenstates of A+B (it just returns 0 there).
  return 0.5 * variance(sum_operator(a, b, tol), psi, tol);
}

double mp_combined_bound(const HermitianOperator& a, const HermitianOperator& b,
                         const StateVector& psi, const StateVector& psi_perp,
                         std::optional<Sign> sign, const Tolerances& tol) {
  return std::max(mp_sum_bound_perp(a, b, psi, psi_perp, sign, tol),
                  mp_sum_bound_aplusb(a, b, psi, tol));
}

double mp_triple_max_bound(const HermitianOperator& a, const HermitianOperator& b,
                           const StateVector& psi, const Tolerances& tol) {
  const double half_sum = mp_sum_bound_aplusb(a, b, psi, tol);
  return std::max({half_sum, variance(a, psi, tol), variance(b, psi, tol)});
}

double amended_hr_bound(const HermitianOperator& a, const HermitianOperator& b,
                        const StateVector& psi, const StateVector& psi_perp,
                        std::optional<Sign> sign, const Tolerances& tol) {
  require_uncertainty_dim(psi.dim(), "amended_hr_bound");
  require_same_dim(a.dim(), b.dim(), "amended_hr_bound");
  require_same_dim(a.dim(), psi.dim(), "amended_hr_bound");
  require_same_dim(psi.dim(), psi_perp.dim(), "amended_hr_bound");
  check_orthogonal(psi, psi_perp, tol, "amended_hr_bound");
  const double da = std::sqrt(variance(a, psi, tol));
  const double db = std::sqrt(variance(b, psi, tol));
  if (da <= tol.eig_tol * std::max(1.0, a.spectral_scale()) ||
      db <= tol.eig_tol * std::max(1.0, b.spectral_scale()))
    raise(ErrorCode::ZeroVariance, "deviations " + std::to_string(da) + ", " + std::to_string(db));
  const Sign resolved = sign.value_or(select_sign(a, b, psi, tol));
  const double s = sign_factor(resolved);
  const double c = commutator_mean(a, b, psi, tol);

  const Complex ma = dot(psi.amplitudes(), a.apply(psi_perp.amplitudes()));
  const Complex mb = dot(psi.amplitudes(), b.apply(psi_perp.amplitudes()));
  const Complex w = ma / da + Complex{0.0, s / db} * mb;
  const double denom = 1.0 - 0.5 * std::norm(w);
  if (denom <= 1e-12)
    raise(ErrorCode::DegenerateDenominator, "denominator " + std::to_string(denom));
  return (-s * c / 2.0) / denom;
}

double mixed_sum_bound(const HermitianOperator& a, const HermitianOperator& b,
                       const DensityMatrix& rho, const StateVector& psi_perp,
                       std::optional<Sign> sign, const Tolerances& tol) {
  require_uncertainty_dim(rho.dim(), "mixed_sum_bound");
  require_same_dim(a.dim(), b.dim(), "mixed_sum_bound");
  require_same_dim(a.dim(), rho.dim(), "mixed_sum_bound");
  require_same_dim(rho.dim(), psi_perp.dim(), "mixed_sum_bound");
  const double support_overlap = rho.apply(psi_perp.amplitudes()).norm();
  if (support_overlap >= 1e-10)
    raise(ErrorCode::PerpNotOrthogonalToSupport,
          "||rho |psi_perp>|| = " + std::to_string(support_overlap));
  const Sign resolved = sign.value_or(select_sign_mixed(a, b, rho, tol));
  const double s = sign_factor(resolved);
  const double c = commutator_mean_mixed(a, b, rho, tol);

  CVec z = a.apply(psi_perp.amplitudes());
  z += Complex{0.0, s} * b.apply(psi_perp.amplitudes());
  const Complex sandwich = dot(z, rho.apply(z));
  const double scale = std::max(1.0, z.norm_sq());
  if (std::abs(sandwich.imag()) > tol.residual_tol * scale)
    raise(ErrorCode::NumericalResidual,
          "mixed_sum_bound: imaginary residual " + std::to_string(sandwich.imag()));
  return -s * c + sandwich.real();
}

double holevo_bound(const HermitianOperator& a, const StateVector& psi,
                    const StateVector& psi_prime, const Tolerances& tol) {
  require_uncertainty_dim(psi.dim(), "holevo_bound");
  require_same_dim(a.dim(), psi.dim(), "holevo_bound");
  require_same_dim(psi.dim(), psi_prime.dim(), "holevo_bound");
  const double overlap = std::abs(dot(psi.amplitudes(), psi_prime.amplitudes()));
  if (overlap >= 1.0 - 1e-12)
    raise(ErrorCode::StatesCoincide, "|<psi|psi'>| = " + std::to_string(overlap));
  const double mean = expectation(a, psi, tol);
  const double mean_prime = expectation(a, psi_prime, tol);
  return (mean - mean_prime) * overlap / std::sqrt(2.0 * (1.0 - overlap));
}

double two_state_sum_bound_branch(const HermitianOperator& a, const HermitianOperator& b,
                                  const StateVector& psi, const StateVector& psi_prime,
                                  double branch_sign, const Tolerances& tol) {
  require_uncertainty_dim(psi.dim(), "two_state_sum_bound");
  require_same_dim(a.dim(), b.dim(), "two_state_sum_bound");
  require_same_dim(a.dim(), psi.dim(), "two_state_sum_bound");
  require_same_dim(psi.dim(), psi_prime.dim(), "two_state_sum_bound");
  const Complex inner = dot(psi.amplitudes(), psi_prime.amplitudes());
  const double overlap = std::abs(inner);
  if (overlap <= 1e-12) raise(ErrorCode::StatesOrthogonal, "states are orthogonal");
  if (overlap >= 1.0 - 1e-12)
    raise(ErrorCode::StatesCoincide, "|<psi|psi'>| = " + std::to_string(overlap));
  const Complex eps = inner / overlap;

  const double mean_a = expectation(a, psi, tol);
  const double mean_b_prime = expectation(b, psi_prime, tol);

  // Ā|ψ⟩ and B̄′|ψ⟩ with Ā = A − a, B̄′ = B − b′.
  CVec abar_psi = a.apply(psi.amplitudes());
  abar_psi -= Complex{mean_a, 0.0} * psi.amplitudes();
  CVec bbar_psi = b.apply(psi.amplitudes());
  bbar_psi -= Complex{mean_b_prime, 0.0} * psi.amplitudes();

  // Re(ε⟨ψ′|(−Ā − σ·iB̄′)|ψ⟩)² / (2(1−|⟨ψ|ψ′⟩|))
  Complex bra = dot(psi_prime.amplitudes(), abar_psi);
  bra += Complex{0.0, branch_sign} * dot(psi_prime.amplitudes(), bbar_psi);
  const double num = (eps * (-bra)).real();
  const double schwarz_term = num * num / (2.0 * (1.0 - overlap));

  // −σ·i(ε*⟨ψ|ĀB̄′|ψ′⟩ − ε⟨ψ′|B̄′Ā|ψ⟩) = 2σ·Im(ε*⟨ψ|ĀB̄′|ψ′⟩)
  CVec bbar_psi_prime = b.apply(psi_prime.amplitudes());
  bbar_psi_prime -= Complex{mean_b_prime, 0.0} * psi_prime.amplitudes();
  CVec a_bbar_prime = a.apply(bbar_psi_prime);
  a_bbar_prime -= Complex{mean_a, 0.0} * bbar_psi_prime;
  const Complex q = std::conj(eps) * dot(psi.amplitudes(), a_bbar_prime);
  return schwarz_term + 2.0 * branch_sign * q.imag();
}

double two_state_sum_bound(const HermitianOperator& a, const HermitianOperator& b,
                           const StateVector& psi, const StateVector& psi_prime,
                           const Tolerances& tol) {
  return std::max(two_state_sum_bound_branch(a, b, psi, psi_prime, +1.0, tol),
                  two_state_sum_bound_branch(a, b, psi, psi_prime, -1.0, tol));
}

std::pair<double, double> parallelogram_sides(const HermitianOperator& a,
                                              const HermitianOperator& b, const StateVector& psi,
                                              Complex alpha, const Tolerances& tol) {
  require_uncertainty_dim(psi.dim(), "parallelogram_sides");
  require_same_dim(a.dim(), b.dim(), "parallelogram_sides");
  require_same_dim(a.dim(), psi.dim(), "parallelogram_sides");
  if (std::abs(std::abs(alpha) - 1.0) > tol.norm_tol)
    raise(ErrorCode::InvalidArgument, "alpha must have unit modulus");
  const double lhs = 2.0 * variance(a, psi, tol) + 2.0 * variance(b, psi, tol);

  CVec c_psi = a.apply(psi.amplitudes());
  c_psi -= Complex{expectation(a, psi, tol), 0.0} * psi.amplitudes();
  CVec d_psi = b.apply(psi.amplitudes());
  d_psi -= Complex{expectation(b, psi, tol), 0.0} * psi.amplitudes();

  CVec plus = c_psi;
  plus += alpha * d_psi;
  CVec minus = c_psi;
  minus -= alpha * d_psi;
  return {lhs, plus.norm_sq() + minus.norm_sq()};
}

std::pair<double, double> p3_identity_sides(const HermitianOperator& a,
                                            const HermitianOperator& b, const StateVector& psi,
                                            double s, const Tolerances& tol) {
  CVec c_psi = a.apply(psi.amplitudes());
  c_psi -= Complex{expectation(a, psi, tol), 0.0} * psi.amplitudes();
  CVec d_psi = b.apply(psi.amplitudes());
  d_psi -= Complex{expectation(b, psi, tol), 0.0} * psi.amplitudes();
  CVec combo = c_psi;
  combo -= Complex{0.0, s} * d_psi;
  const double lhs = combo.norm_sq();
  const double rhs = variance(a, psi, tol) + variance(b, psi, tol) +
                     s * commutator_mean(a, b, psi, tol);
  return {lhs, rhs};
}

BoundReport evaluate_bounds(const HermitianOperator& a, const HermitianOperator& b,
                            const StateVector& psi, const StateVector* psi_perp,
                            std::optional<Sign> sign, const Tolerances& tol) {
  BoundReport report;
  const double var_a = variance(a, psi, tol);
  const double var_b = variance(b, psi, tol);
  report.sum_of_variances = var_a + var_b;
  report.product_of_variances = var_a * var_b;
  report.hr = hr_bound(a, b, psi, tol);
  report.schroedinger = schroedinger_bound(a, b, psi, tol);
  report.weak_sum = weak_sum_bound(a, b, psi, tol);
  report.eq4 = mp_sum_bound_aplusb(a, b, psi, tol);
  report.triple_max = mp_triple_max_bound(a, b, psi, tol);

  const Sign resolved = sign.value_or(select_sign(a, b, psi, tol));
  report.resolved_sign = std::string(1, sign_symbol(resolved));

  if (psi_perp != nullptr) {
    report.eq3 = mp_sum_bound_perp(a, b, psi, *psi_perp, resolved, tol);
    const double da = std::sqrt(var_a);
    const double db = std::sqrt(var_b);
    if (da > tol.eig_tol * std::max(1.0, a.spectral_scale()) &&
        db > tol.eig_tol * std::max(1.0, b.spectral_scale())) {
      try {
        report.amended_hr = amended_hr_bound(a, b, psi, *psi_perp, resolved, tol);
      } catch (const Error& e) {
        // vanishing commutator mean with the saturating perp: the quotient is
        // 0/0 and the optional field stays absent
        if (e.code() != ErrorCode::DegenerateDenominator) throw;
      }
    }
  }
  if (report.eq3.has_value() && *report.eq3 >= report.eq4) {
    report.eq5 = *report.eq3;
    report.active_bound = "eq3";
  } else {
    report.eq5 = report.eq4;
    report.active_bound = "eq4";
  }

  report.residuals["hr"] = report.product_of_variances - report.hr;
  report.residuals["schroedinger"] = report.product_of_variances - report.schroedinger;
  report.residuals["weak_sum"] = report.sum_of_variances - report.weak_sum;
  report.residuals["eq4"] = report.sum_of_variances - report.eq4;
  report.residuals["eq5"] = report.sum_of_variances - report.eq5;
  report.residuals["triple_max"] = report.sum_of_variances - report.triple_max;
  if (report.eq3.has_value()) report.residuals["eq3"] = report.sum_of_variances - *report.eq3;
  if (report.amended_hr.has_value())
    report.residuals["amended_hr"] = std::sqrt(var_a) * std::sqrt(var_b) - *report.amended_hr;
  return report;
}

}  // namespace uncert
