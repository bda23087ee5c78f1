#include "uncert/quantum.hpp"

#include <cmath>
#include <string>

#include "uncert/errors.hpp"

namespace uncert {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    raise(ErrorCode::DimensionMismatch,
          std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

StateVector::StateVector(CVec amplitudes, const Tolerances& tol) : amp_(std::move(amplitudes)) {
  if (amp_.dim() == 0) raise(ErrorCode::DimensionMismatch, "state needs dim >= 1");
  if (!amp_.all_finite()) raise(ErrorCode::NotFinite, "state has NaN/Inf amplitudes");
  const double n2 = amp_.norm_sq();
  if (std::abs(n2 - 1.0) > tol.norm_tol)
    raise(ErrorCode::NotNormalized,
          "sum of |amplitude|^2 is " + std::to_string(n2) + ", expected 1");
}

HermitianOperator::HermitianOperator(CMat entries, const Tolerances& tol)
    : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
    raise(ErrorCode::DimensionMismatch, "observable must be square and nonempty");
  if (!entries_.all_finite()) raise(ErrorCode::NotFinite, "observable has NaN/Inf entries");
  const double resid = entries_.hermiticity_residual();
  if (resid > tol.herm_tol)
    raise(ErrorCode::NotHermitian, "hermiticity residual " + std::to_string(resid));
  spectral_scale_ = entries_.max_row_sum();
}

DensityMatrix::DensityMatrix(CMat entries, const Tolerances& tol) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
    raise(ErrorCode::DimensionMismatch, "density matrix must be square and nonempty");
  if (!entries_.all_finite()) raise(ErrorCode::NotFinite, "density matrix has NaN/Inf entries");
  const double resid = entries_.hermiticity_residual();
  if (resid > tol.herm_tol)
    raise(ErrorCode::NotDensityMatrix, "hermiticity residual " + std::to_string(resid));
  const Complex tr = entries_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > tol.norm_tol)
    raise(ErrorCode::NotDensityMatrix, "trace is " + std::to_string(tr.real()) + ", expected 1");
  const EighResult eig = eigh(entries_);
  if (!eig.eigenvalues.empty() && eig.eigenvalues.front() < -tol.psd_tol)
    raise(ErrorCode::NotDensityMatrix,
          "negative eigenvalue " + std::to_string(eig.eigenvalues.front()));
}

DensityMatrix DensityMatrix::pure(const StateVector& psi, const Tolerances& tol) {
  const std::size_t d = psi.dim();
  CMat m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  return DensityMatrix(std::move(m), tol);
}

namespace {

double real_checked(Complex z, double scale, const Tolerances& tol, const char* what) {
  if (std::abs(z.imag()) > tol.residual_tol * std::max(1.0, scale))
    raise(ErrorCode::NumericalResidual,
          std::string(what) + ": imaginary residual " + std::to_string(z.imag()));
  return z.real();
}

double imag_checked(Complex z, double scale, const Tolerances& tol, const char* what) {
  if (std::abs(z.real()) > tol.residual_tol * std::max(1.0, scale))
    raise(ErrorCode::NumericalResidual,
          std::string(what) + ": real residual " + std::to_string(z.real()));
  return z.imag();
}

Complex trace_product(const CMat& m, const CMat& rho) {
  // Tr(M ρ) without forming the product matrix.
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) s += m(i, k) * rho(k, i);
  return s;
}

}  // namespace

double expectation(const HermitianOperator& a, const StateVector& psi, const Tolerances& tol) {
  require_same_dim(a.dim(), psi.dim(), "expectation");
  const Complex z = dot(psi.amplitudes(), a.apply(psi.amplitudes()));
  return real_checked(z, a.spectral_scale(), tol, "expectation");
}

double expectation_mixed(const HermitianOperator& a, const DensityMatrix& rho,
                         const Tolerances& tol) {
  require_same_dim(a.dim(), rho.dim(), "expectation_mixed");
  const Complex z = trace_product(a.matrix(), rho.matrix());
  return real_checked(z, a.spectral_scale(), tol, "expectation_mixed");
}

double variance(const HermitianOperator& a, const StateVector& psi, const Tolerances& tol) {
  require_same_dim(a.dim(), psi.dim(), "variance");
  const double mean = expectation(a, psi, tol);
  CVec centered = a.apply(psi.amplitudes());
  centered -= Complex{mean, 0.0} * psi.amplitudes();
  const double v = centered.norm_sq();
  return v < 0.0 ? 0.0 : v;
}

double variance_mixed(const HermitianOperator& a, const DensityMatrix& rho,
                      const Tolerances& tol) {
  require_same_dim(a.dim(), rho.dim(), "variance_mixed");
  const double mean = expectation_mixed(a, rho, tol);
  const CMat& m = a.matrix();
  const Complex second = trace_product(m * m, rho.matrix());
  const double v = real_checked(second, a.spectral_scale() * a.spectral_scale(), tol,
                                "variance_mixed") -
                   mean * mean;
  return v < 0.0 ? 0.0 : v;
}

double commutator_mean(const HermitianOperator& a, const HermitianOperator& b,
                       const StateVector& psi, const Tolerances& tol) {
  require_same_dim(a.dim(), b.dim(), "commutator_mean");
  require_same_dim(a.dim(), psi.dim(), "commutator_mean");
  const CVec& v = psi.amplitudes();
  const Complex ab = dot(v, a.apply(b.apply(v)));
  const Complex ba = dot(v, b.apply(a.apply(v)));
  const double scale = a.spectral_scale() * b.spectral_scale();
  return imag_checked(ab - ba, scale, tol, "commutator_mean");
}

double commutator_mean_mixed(const HermitianOperator& a, const HermitianOperator& b,
                             const DensityMatrix& rho, const Tolerances& tol) {
  require_same_dim(a.dim(), b.dim(), "commutator_mean_mixed");
  require_same_dim(a.dim(), rho.dim(), "commutator_mean_mixed");
  const CMat comm = a.matrix() * b.matrix() - b.matrix() * a.matrix();
  const double scale = a.spectral_scale() * b.spectral_scale();
  return imag_checked(trace_product(comm, rho.matrix()), scale, tol, "commutator_mean_mixed");
}

double symmetrized_covariance(const HermitianOperator& a, const HermitianOperator& b,
                              const StateVector& psi, const Tolerances& tol) {
  require_same_dim(a.dim(), b.dim(), "symmetrized_covariance");
  require_same_dim(a.dim(), psi.dim(), "symmetrized_covariance");
  const CVec& v = psi.amplitudes();
  const Complex ab = dot(v, a.apply(b.apply(v)));
  const Complex ba = dot(v, b.apply(a.apply(v)));
  const double scale = a.spectral_scale() * b.spectral_scale();
  const double sym = real_checked(0.5 * (ab + ba), scale, tol, "symmetrized_covariance");
  return sym - expectation(a, psi, tol) * expectation(b, psi, tol);
}

bool is_eigenstate(const HermitianOperator& o, const StateVector& psi, const Tolerances& tol) {
  const double dev = std::sqrt(variance(o, psi, tol));
  return dev <= tol.eig_tol * std::max(1.0, o.spectral_scale());
}

VaidmanDecomposition vaidman_decompose(const HermitianOperator& o, const StateVector& psi,
                                       const Tolerances& tol) {
  require_same_dim(o.dim(), psi.dim(), "vaidman_decompose");
  const double mean = expectation(o, psi, tol);
  CVec centered = o.apply(psi.amplitudes());
  centered -= Complex{mean, 0.0} * psi.amplitudes();
  const double dev = centered.norm();
  if (dev <= tol.eig_tol * std::max(1.0, o.spectral_scale()))
    raise(ErrorCode::EigenstateNoPerp, "state is an eigenstate, deviation " + std::to_string(dev));
  centered *= Complex{1.0 / dev, 0.0};
  return VaidmanDecomposition{mean, dev, StateVector(std::move(centered), tol)};
}

StateVector project_out(const StateVector& psi, const CVec& chi, const Tolerances& tol) {
  require_same_dim(psi.dim(), chi.dim(), "project_out");
  if (!chi.all_finite()) raise(ErrorCode::NotFinite, "project_out input has NaN/Inf entries");
  const double chi_norm = chi.norm();
  CVec w = chi;
  w -= dot(psi.amplitudes(), chi) * psi.amplitudes();
  if (w.norm() <= 1e-12 * chi_norm)
    raise(ErrorCode::NullProjection, "input is parallel to the state");
  // Second projection pass removes the rounding left by the first.
  w -= dot(psi.amplitudes(), w) * psi.amplitudes();
  w *= Complex{1.0 / w.norm(), 0.0};
  return StateVector(std::move(w), tol);
}

}  // namespace uncert
