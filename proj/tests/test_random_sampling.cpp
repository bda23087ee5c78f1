#include <doctest.h>

#include <cmath>
#include <set>

#include "uncert/random_sampling.hpp"

using namespace uncert;

TEST_SUITE("random_sampling") {

TEST_CASE("haar unitaries are unitary within 1e-12") {
  SeededRng rng(42);
  for (std::size_t dim : {1, 2, 3, 4, 8, 16}) {
    for (int rep = 0; rep < 10; ++rep) {
      const CMat u = haar_unitary(dim, rng);
      CMat utu = u.adjoint() * u;
      utu -= CMat::identity(dim);
      CHECK(utu.max_abs() < 1e-12);
    }
  }
}

TEST_CASE("dim 1 gives a unit-modulus scalar") {
  SeededRng rng(3);
  const CMat u = haar_unitary(1, rng);
  CHECK(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-14);
}

TEST_CASE("haar first-entry moment, dim 3") {
  // |U_00|² ~ Beta(1, 2) under Haar: mean 1/3, variance 1/18.
  SeededRng rng(2024);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const CMat u = haar_unitary(3, rng);
    sum += std::norm(u(0, 0));
  }
  const double mean = sum / n;
  const double se = std::sqrt((1.0 / 18.0) / n);
  CHECK(std::abs(mean - 1.0 / 3.0) < 3.0 * se);
}

TEST_CASE("determinism: equal seeds give bitwise-equal matrices") {
  SeededRng a(555);
  SeededRng b(555);
  const CMat ua = haar_unitary(5, a);
  const CMat ub = haar_unitary(5, b);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(ua(i, j) == ub(i, j));
}

TEST_CASE("random states are normalized and seed-distinct") {
  std::set<double> first_components;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SeededRng rng(seed);
    const StateVector psi = random_state(3, rng);
    CHECK(std::abs(psi.amplitudes().norm_sq() - 1.0) < 1e-12);
    first_components.insert(psi[0].real());
  }
  CHECK(first_components.size() == 1000);  // collisions have probability 0
}

TEST_CASE("haar state overlap moment, dim 2") {
  // |⟨0|ψ⟩|² uniform on [0,1] for Haar ψ in d=2: mean 1/2, variance 1/12.
  SeededRng rng(77);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const StateVector psi = random_state(2, rng);
    sum += std::norm(psi[0]);
  }
  const double se = std::sqrt((1.0 / 12.0) / n);
  CHECK(std::abs(sum / n - 0.5) < 3.0 * se);
}

TEST_CASE("random hermitian is exactly hermitian with GUE trace statistics") {
  SeededRng rng(31337);
  double trace_sum = 0.0;
  const int n = 10000;
  const std::size_t dim = 4;
  for (int i = 0; i < n; ++i) {
    const HermitianOperator h = random_hermitian(dim, rng);
    CHECK(h.matrix().hermiticity_residual() == 0.0);
    trace_sum += h.matrix().trace().real();
  }
  // trace ~ N(0, d): 3 SE window for the mean of n draws
  CHECK(std::abs(trace_sum / n) < 3.0 * std::sqrt(static_cast<double>(dim) / n));
}

TEST_CASE("random hermitian eigenvalues are real and accepted by eigh") {
  SeededRng rng(8);
  const HermitianOperator h = random_hermitian(6, rng);
  const EighResult eig = eigh(h.matrix());
  CHECK(eig.eigenvalues.size() == 6);
  for (std::size_t k = 1; k < 6; ++k) CHECK(eig.eigenvalues[k - 1] <= eig.eigenvalues[k]);
}

}  // TEST_SUITE
