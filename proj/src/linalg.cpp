#include "uncert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "uncert/errors.hpp"

namespace uncert {

CVec CVec::basis(std::size_t dim, std::size_t index) {
  CVec v(dim);
  v[index] = Complex{1.0, 0.0};
  return v;
}

double CVec::norm_sq() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return s;
}

double CVec::norm() const { return std::sqrt(norm_sq()); }

bool CVec::all_finite() const {
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

CVec& CVec::operator+=(const CVec& rhs) {
  if (rhs.dim() != dim()) raise(ErrorCode::DimensionMismatch, "vector sizes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

CVec& CVec::operator-=(const CVec& rhs) {
  if (rhs.dim() != dim()) raise(ErrorCode::DimensionMismatch, "vector sizes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

CVec& CVec::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

Complex dot(const CVec& a, const CVec& b) {
  if (a.dim() != b.dim()) raise(ErrorCode::DimensionMismatch, "vector sizes differ");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

CMat CMat::identity(std::size_t dim) {
  CMat m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Complex{1.0, 0.0};
  return m;
}

CMat CMat::adjoint() const {
  CMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CVec CMat::apply(const CVec& v) const {
  if (v.dim() != cols_) raise(ErrorCode::DimensionMismatch, "matrix/vector sizes differ");
  CVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex s{0.0, 0.0};
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

CMat CMat::operator*(const CMat& rhs) const {
  if (cols_ != rhs.rows_) raise(ErrorCode::DimensionMismatch, "matrix product sizes differ");
  CMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
    }
  }
  return out;
}

CMat& CMat::operator+=(const CMat& rhs) {
  if (rhs.rows_ != rows_ || rhs.cols_ != cols_)
    raise(ErrorCode::DimensionMismatch, "matrix sizes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& rhs) {
  if (rhs.rows_ != rows_ || rhs.cols_ != cols_)
    raise(ErrorCode::DimensionMismatch, "matrix sizes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

CMat& CMat::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

Complex CMat::trace() const {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

double CMat::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double CMat::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double CMat::max_row_sum() const {
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) row += std::abs((*this)(i, j));
    m = std::max(m, row);
  }
  return m;
}

bool CMat::all_finite() const {
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double CMat::hermiticity_residual() const {
  if (rows_ != cols_) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

namespace {

Complex unit_phase(Complex z) {
  const double a = std::abs(z);
  return a == 0.0 ? Complex{1.0, 0.0} : z / a;
}

}  // namespace

QrResult householder_qr(const CMat& a) {
  if (a.rows() != a.cols()) raise(ErrorCode::InvalidArgument, "QR expects a square matrix");
  const std::size_t n = a.rows();
  CMat r = a;
  CMat q = CMat::identity(n);

  std::vector<Complex> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    double xnorm_sq = 0.0;
    for (std::size_t i = k; i < n; ++i) xnorm_sq += std::norm(r(i, k));
    const double xnorm = std::sqrt(xnorm_sq);
    if (xnorm == 0.0) continue;  // column already zero below the diagonal

    const Complex beta = -unit_phase(r(k, k)) * xnorm;
    for (std::size_t i = k; i < n; ++i) v[i] = r(i, k);
    v[k] -= beta;
    double vnorm_sq = 0.0;
    for (std::size_t i = k; i < n; ++i) vnorm_sq += std::norm(v[i]);
    if (vnorm_sq == 0.0) continue;

    // R ← H R on the trailing block, H = I − 2 v v†/‖v‖².
    for (std::size_t j = k; j < n; ++j) {
      Complex w{0.0, 0.0};
      for (std::size_t i = k; i < n; ++i) w += std::conj(v[i]) * r(i, j);
      w *= 2.0 / vnorm_sq;
      for (std::size_t i = k; i < n; ++i) r(i, j) -= v[i] * w;
    }
    // Q ← Q H (H is Hermitian).
    for (std::size_t i = 0; i < n; ++i) {
      Complex w{0.0, 0.0};
      for (std::size_t j = k; j < n; ++j) w += q(i, j) * v[j];
      w *= 2.0 / vnorm_sq;
      for (std::size_t j = k; j < n; ++j) q(i, j) -= w * std::conj(v[j]);
    }
    r(k, k) = beta;
    for (std::size_t i = k + 1; i < n; ++i) r(i, k) = Complex{0.0, 0.0};
  }
  return QrResult{std::move(q), std::move(r)};
}

EighResult eigh(const CMat& hermitian) {
  if (hermitian.rows() != hermitian.cols())
    raise(ErrorCode::InvalidArgument, "eigh expects a square matrix");
  const std::size_t n = hermitian.rows();

  // Work on the exactly Hermitian part; callers validate closeness separately.
  CMat a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (hermitian(i, j) + std::conj(hermitian(j, i)));
  CMat v = CMat::identity(n);

  const double scale = std::max(a.frobenius_norm(), 1e-300);
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-15 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double absapq = std::abs(apq);
        if (absapq <= 1e-18 * scale) continue;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const Complex ph = apq / absapq;
        const double tau = (aqq - app) / (2.0 * absapq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex jpq = s * ph;              // J_pq
        const Complex jqp = -s * std::conj(ph);  // J_qp

        // A ← J† A J, touching only rows/columns p and q.
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip + jqp * aiq;
          a(i, q) = jpq * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const Complex api = a(p, i);
          const Complex aqi = a(q, i);
          a(p, i) = c * api + std::conj(jqp) * aqi;
          a(q, i) = std::conj(jpq) * api + c * aqi;
        }
        a(p, q) = Complex{0.0, 0.0};
        a(q, p) = Complex{0.0, 0.0};
        a(p, p) = Complex{a(p, p).real(), 0.0};
        a(q, q) = Complex{a(q, q).real(), 0.0};

        for (std::size_t i = 0; i < n; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip + jqp * viq;
          v(i, q) = jpq * vip + c * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EighResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMat(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

}  // namespace uncert
