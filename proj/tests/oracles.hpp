// Test-side oracles, deliberately independent of the library's linear
// algebra: raw std::vector storage, index arithmetic, and the moment form
// of the variance (the library uses the centered-norm form).
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;
using Mat = std::vector<std::vector<C>>;

inline Vec matvec(const Mat& m, const Vec& v) {
  Vec out(m.size(), C{0.0, 0.0});
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline C inner(const Vec& a, const Vec& b) {
  C s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline C expect(const Mat& m, const Vec& v) { return inner(v, matvec(m, v)); }

inline Mat matmul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat out(n, std::vector<C>(n, C{0.0, 0.0}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// ⟨A²⟩ − ⟨A⟩² (moment form)
inline double variance(const Mat& m, const Vec& v) {
  const C mean = expect(m, v);
  const C second = expect(matmul(m, m), v);
  return second.real() - mean.real() * mean.real();
}

// ⟨[A,B]⟩ as a complex number
inline C commutator_expect(const Mat& a, const Mat& b, const Vec& v) {
  return expect(matmul(a, b), v) - expect(matmul(b, a), v);
}

// ½⟨AB+BA⟩ − ⟨A⟩⟨B⟩
inline double covariance(const Mat& a, const Mat& b, const Vec& v) {
  const C sym = 0.5 * (expect(matmul(a, b), v) + expect(matmul(b, a), v));
  return sym.real() - expect(a, v).real() * expect(b, v).real();
}

// --- fixed matrices -------------------------------------------------------

inline Mat pauli_x() { return {{C{0, 0}, C{1, 0}}, {C{1, 0}, C{0, 0}}}; }
inline Mat pauli_y() { return {{C{0, 0}, C{0, -1}}, {C{0, 1}, C{0, 0}}}; }
inline Mat pauli_z() { return {{C{1, 0}, C{0, 0}}, {C{0, 0}, C{-1, 0}}}; }

// Spin-1 matrices in the |+⟩, |0⟩, |−⟩ basis, entries written out directly
// from the ladder coefficients (√2/2 = 1/√2 on the |Δm|=1 slots).
inline Mat spin1_jx() {
  const double r = 0.7071067811865476;  // 1/√2
  return {{C{0, 0}, C{r, 0}, C{0, 0}}, {C{r, 0}, C{0, 0}, C{r, 0}}, {C{0, 0}, C{r, 0}, C{0, 0}}};
}

inline Mat spin1_jy() {
  const double r = 0.7071067811865476;
  return {{C{0, 0}, C{0, -r}, C{0, 0}}, {C{0, r}, C{0, 0}, C{0, -r}}, {C{0, 0}, C{0, r}, C{0, 0}}};
}

inline Mat spin1_jz() {
  return {{C{1, 0}, C{0, 0}, C{0, 0}}, {C{0, 0}, C{0, 0}, C{0, 0}}, {C{0, 0}, C{0, 0}, C{-1, 0}}};
}

inline Vec phi_family(double phi) {
  return {C{std::cos(phi), 0.0}, C{0.0, 0.0}, C{std::sin(phi), 0.0}};
}

}  // namespace oracle
