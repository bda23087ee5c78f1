#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace uncert {

using Complex = std::complex<double>;

/// Dense complex vector. Small fixed-size workloads only (d ≤ ~64), so the
/// implementation favors clarity and deterministic evaluation order over
/// vectorization.
class CVec {
 public:
  CVec() = default;
  explicit CVec(std::size_t dim) : data_(dim, Complex{0.0, 0.0}) {}
  CVec(std::initializer_list<Complex> entries) : data_(entries) {}

  static CVec basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return data_.size(); }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  double norm_sq() const;
  double norm() const;
  bool all_finite() const;

  CVec& operator+=(const CVec& rhs);
  CVec& operator-=(const CVec& rhs);
  CVec& operator*=(Complex scale);

  friend CVec operator+(CVec lhs, const CVec& rhs) { return lhs += rhs; }
  friend CVec operator-(CVec lhs, const CVec& rhs) { return lhs -= rhs; }
  friend CVec operator*(Complex scale, CVec v) { return v *= scale; }

 private:
  std::vector<Complex> data_;
};

/// ⟨a|b⟩ = Σ conj(a_i)·b_i (conjugate-linear in the first argument).
Complex dot(const CVec& a, const CVec& b);

/// Dense row-major complex matrix.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

  static CMat identity(std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  CMat adjoint() const;
  CVec apply(const CVec& v) const;
  CMat operator*(const CMat& rhs) const;
  CMat& operator+=(const CMat& rhs);
  CMat& operator-=(const CMat& rhs);
  CMat& operator*=(Complex scale);
  friend CMat operator+(CMat lhs, const CMat& rhs) { return lhs += rhs; }
  friend CMat operator-(CMat lhs, const CMat& rhs) { return lhs -= rhs; }
  friend CMat operator*(Complex scale, CMat m) { return m *= scale; }

  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;
  /// Induced infinity norm (max row sum of moduli); the "spectral scale"
  /// used by the eigenstate cutoff.
  double max_row_sum() const;
  bool all_finite() const;
  double hermiticity_residual() const;  // max |M_ij − conj(M_ji)|

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

struct QrResult {
  CMat q;  // unitary
  CMat r;  // upper triangular
};

/// Householder QR of a square complex matrix, columns processed left to
/// right, reflector sign chosen as beta = −phase(x0)·‖x‖ (no cancellation).
/// The fixed order keeps outputs byte-stable for a given input.
QrResult householder_qr(const CMat& a);

struct EighResult {
  std::vector<double> eigenvalues;  // ascending
  CMat eigenvectors;                // columns, same order
};

/// Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi
/// rotations. Accurate to ~1e-14·‖A‖ for the small dimensions used here.
EighResult eigh(const CMat& hermitian);

}  // namespace uncert
