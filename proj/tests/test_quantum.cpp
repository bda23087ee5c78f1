#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "uncert/errors.hpp"
#include "uncert/quantum.hpp"
#include "uncert/random_sampling.hpp"
#include "uncert/spin.hpp"

using namespace uncert;

namespace {

HermitianOperator from_oracle(const oracle::Mat& m) {
  CMat out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m[i][j];
  return HermitianOperator(std::move(out));
}


const double kInvSqrt2 = 0.7071067811865476;

}  // namespace

TEST_SUITE("quantum") {

TEST_CASE("type validation") {
  SUBCASE("state must be normalized") {
    CHECK_THROWS_WITH_AS(StateVector(CVec{Complex{0.5, 0.0}, Complex{0.5, 0.0}}),
                         doctest::Contains("NotNormalized"), Error);
  }
  SUBCASE("state must be finite") {
    CHECK_THROWS_WITH_AS(
        StateVector(CVec{Complex{std::nan(""), 0.0}, Complex{1.0, 0.0}}),
        doctest::Contains("NotFinite"), Error);
  }
  SUBCASE("observable must be hermitian") {
    CMat m(2, 2);
    m(0, 1) = Complex{1.0, 0.0};
    m(1, 0) = Complex{0.5, 0.0};
    CHECK_THROWS_WITH_AS(HermitianOperator(std::move(m)), doctest::Contains("NotHermitian"),
                         Error);
  }
  SUBCASE("near-hermitian within tolerance is accepted") {
    CMat m(2, 2);
    m(0, 1) = Complex{1.0, 1e-13};
    m(1, 0) = Complex{1.0, 1e-13};  // conj residual 2e-13 ... within 1e-12
    CHECK_NOTHROW(HermitianOperator(std::move(m)));
  }
  SUBCASE("density matrix must be PSD") {
    CMat m(2, 2);
    m(0, 0) = Complex{1.5, 0.0};
    m(1, 1) = Complex{-0.5, 0.0};
    CHECK_THROWS_WITH_AS(DensityMatrix(std::move(m)), doctest::Contains("NotDensityMatrix"),
                         Error);
  }
  SUBCASE("density matrix must have unit trace") {
    CMat m(2, 2);
    m(0, 0) = Complex{0.6, 0.0};
    m(1, 1) = Complex{0.6, 0.0};
    CHECK_THROWS_WITH_AS(DensityMatrix(std::move(m)), doctest::Contains("NotDensityMatrix"),
                         Error);
  }
  SUBCASE("dimension mismatch") {
    const SpinTriple spin = spin_operators(1.0);
    const StateVector psi(CVec{Complex{1.0, 0.0}, Complex{0.0, 0.0}});
    CHECK_THROWS_WITH_AS(expectation(spin.jz, psi), doctest::Contains("DimensionMismatch"),
                         Error);
  }
}

TEST_CASE("expectation examples") {
  const SpinTriple spin = spin_operators(1.0);
  const StateVector plus = figure1_state(0.0);
  CHECK(expectation(spin.jz, plus) == doctest::Approx(1.0).epsilon(1e-14));

  for (double phi : {0.1, 0.7, 2.0}) {
    const StateVector psi = figure1_state(phi);
    CHECK(std::abs(expectation(spin.jx, psi)) < 1e-14);
    // oracle cross-check with independent 3×3 arithmetic
    CHECK(expectation(spin.jx, psi) ==
          doctest::Approx(oracle::expect(oracle::spin1_jx(), oracle::phi_family(phi)).real())
              .epsilon(1e-13));
  }

  const HermitianOperator identity(CMat::identity(3));
  CHECK(expectation(identity, figure1_state(0.3)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("expectation_mixed examples") {
  const SpinTriple spin = spin_operators(1.0);
  const StateVector plus = figure1_state(0.0);
  const DensityMatrix pure = DensityMatrix::pure(plus);
  CHECK(expectation_mixed(spin.jz, pure) == doctest::Approx(1.0).epsilon(1e-14));

  CMat third = CMat::identity(3);
  third *= Complex{1.0 / 3.0, 0.0};
  CHECK(expectation_mixed(spin.jz, DensityMatrix(std::move(third))) ==
        doctest::Approx(0.0).epsilon(1e-14));

  // ½|+⟩⟨+| + ½|−⟩⟨−| — direct trace oracle gives 0 for J_z
  CMat half(3, 3);
  half(0, 0) = Complex{0.5, 0.0};
  half(2, 2) = Complex{0.5, 0.0};
  CHECK(std::abs(expectation_mixed(spin.jz, DensityMatrix(std::move(half)))) < 1e-14);
}

TEST_CASE("variance examples from the phi family") {
  const SpinTriple spin = spin_operators(1.0);
  // ΔJx² = (1+sin2φ)/2, ΔJy² = (1−sin2φ)/2 — closed forms derived from the
  // 3×3 matrices; cross-checked against the moment-form oracle.
  for (double phi : {0.0, 0.25, 0.78539816339744828, 1.9}) {
    const StateVector psi = figure1_state(phi);
    const double vx = variance(spin.jx, psi);
    const double vy = variance(spin.jy, psi);
    CHECK(vx == doctest::Approx((1.0 + std::sin(2.0 * phi)) / 2.0).epsilon(1e-12));
    CHECK(vy == doctest::Approx((1.0 - std::sin(2.0 * phi)) / 2.0).epsilon(1e-12));
    CHECK(vx == doctest::Approx(oracle::variance(oracle::spin1_jx(), oracle::phi_family(phi)))
                    .epsilon(1e-12));
  }
  CHECK(variance(spin.jx, figure1_state(0.0)) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(variance(spin.jy, figure1_state(0.78539816339744828)) < 1e-14);  // φ=π/4
  CHECK(variance(spin.jz, figure1_state(0.0)) < 1e-14);                  // eigenstate
}

TEST_CASE("commutator_mean examples") {
  const SpinTriple spin = spin_operators(1.0);
  for (double phi : {0.0, 0.4, 1.1}) {
    const StateVector psi = figure1_state(phi);
    CHECK(commutator_mean(spin.jx, spin.jy, psi) ==
          doctest::Approx(std::cos(2.0 * phi)).epsilon(1e-12));
    // oracle: ⟨[Jx,Jy]⟩ = i⟨Jz⟩
    const oracle::C comm =
        oracle::commutator_expect(oracle::spin1_jx(), oracle::spin1_jy(), oracle::phi_family(phi));
    CHECK(comm.imag() == doctest::Approx(commutator_mean(spin.jx, spin.jy, psi)).epsilon(1e-12));
  }
  CHECK(commutator_mean(spin.jx, spin.jx, figure1_state(0.3)) == doctest::Approx(0.0));

  const HermitianOperator sx = from_oracle(oracle::pauli_x());
  const HermitianOperator sy = from_oracle(oracle::pauli_y());
  const StateVector up(CVec{Complex{1.0, 0.0}, Complex{0.0, 0.0}});
  CHECK(commutator_mean(sx, sy, up) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("symmetrized_covariance examples") {
  const SpinTriple spin = spin_operators(1.0);
  const StateVector psi0 = figure1_state(0.0);
  CHECK(symmetrized_covariance(spin.jx, spin.jx, psi0) ==
        doctest::Approx(variance(spin.jx, psi0)).epsilon(1e-13));
  CHECK(std::abs(symmetrized_covariance(spin.jx, spin.jy, psi0)) < 1e-14);

  const HermitianOperator sx = from_oracle(oracle::pauli_x());
  const HermitianOperator sz = from_oracle(oracle::pauli_z());
  const StateVector plus(CVec{Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}});
  CHECK(std::abs(symmetrized_covariance(sx, sz, plus)) < 1e-14);
  CHECK(symmetrized_covariance(sx, sz, plus) ==
        doctest::Approx(oracle::covariance(oracle::pauli_x(), oracle::pauli_z(),
                                           {oracle::C{kInvSqrt2, 0}, oracle::C{kInvSqrt2, 0}}))
            .epsilon(1e-13));
}

TEST_CASE("vaidman decomposition") {
  const SpinTriple spin = spin_operators(1.0);
  const StateVector plus = figure1_state(0.0);

  SUBCASE("spin-1 example: J_x on |+⟩") {
    const VaidmanDecomposition dec = vaidman_decompose(spin.jx, plus);
    CHECK(dec.mean == doctest::Approx(0.0));
    CHECK(dec.deviation == doctest::Approx(kInvSqrt2).epsilon(1e-13));
    CHECK(std::norm(dec.perp[1]) == doctest::Approx(1.0).epsilon(1e-13));  // |0⟩ ray
  }
  SUBCASE("eigenstate has no perp") {
    CHECK_THROWS_WITH_AS(vaidman_decompose(spin.jz, plus), doctest::Contains("EigenstateNoPerp"),
                         Error);
  }
  SUBCASE("2x2 example: σ_z on (|0⟩+|1⟩)/√2") {
    const HermitianOperator sz = from_oracle(oracle::pauli_z());
    const StateVector psi(CVec{Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}});
    const VaidmanDecomposition dec = vaidman_decompose(sz, psi);
    CHECK(dec.mean == doctest::Approx(0.0));
    CHECK(dec.deviation == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(dec.perp[0].real() == doctest::Approx(kInvSqrt2).epsilon(1e-13));
    CHECK(dec.perp[1].real() == doctest::Approx(-kInvSqrt2).epsilon(1e-13));
  }
}

TEST_CASE("project_out examples") {
  const StateVector plus = figure1_state(0.0);
  SUBCASE("already orthogonal") {
    const StateVector out = project_out(plus, CVec::basis(3, 1));
    CHECK(std::norm(out[1]) == doctest::Approx(1.0).epsilon(1e-13));
  }
  SUBCASE("parallel input") {
    CHECK_THROWS_WITH_AS(project_out(plus, plus.amplitudes()),
                         doctest::Contains("NullProjection"), Error);
  }
  SUBCASE("2-dim hand oracle") {
    const StateVector psi(CVec{Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}});
    const StateVector out = project_out(psi, CVec::basis(2, 0));
    CHECK(out[0].real() == doctest::Approx(kInvSqrt2).epsilon(1e-13));
    CHECK(out[1].real() == doctest::Approx(-kInvSqrt2).epsilon(1e-13));
  }
}

TEST_CASE("property: hermiticity closure and vaidman identities over random draws") {
  SeededRng master(1001);
  int vaidman_checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    SeededRng rng = master.sub_rng(trial);
    const std::size_t dim = 2 + (trial % 7);  // dims 2..8
    const HermitianOperator a = random_hermitian(dim, rng);
    const HermitianOperator b = random_hermitian(dim, rng);
    const StateVector psi = random_state(dim, rng);

    // residual asserts inside these calls enforce closure at 1e-12
    CHECK_NOTHROW(commutator_mean(a, b, psi));
    CHECK_NOTHROW(symmetrized_covariance(a, b, psi));
    CHECK(variance(a, psi) >= 0.0);

    if (!is_eigenstate(a, psi)) {
      const VaidmanDecomposition dec = vaidman_decompose(a, psi);
      // O|ψ⟩ = ⟨O⟩|ψ⟩ + ΔO|ψ⊥⟩ within 1e-10
      CVec residual = a.apply(psi.amplitudes());
      residual -= Complex{dec.mean, 0.0} * psi.amplitudes();
      residual -= Complex{dec.deviation, 0.0} * dec.perp.amplitudes();
      CHECK(residual.norm() < 1e-10);
      CHECK(std::abs(dot(psi.amplitudes(), dec.perp.amplitudes())) < 1e-10);
      // ΔO = |⟨ψ⊥|O|ψ⟩|
      const Complex me = dot(dec.perp.amplitudes(), a.apply(psi.amplitudes()));
      CHECK(std::abs(std::abs(me) - dec.deviation) < 1e-10);
      ++vaidman_checked;
    }
  }
  CHECK(vaidman_checked > 900);  // random states are essentially never eigenstates
}

TEST_CASE("property: project_out output is unit and orthogonal") {
  SeededRng master(2002);
  for (int trial = 0; trial < 200; ++trial) {
    SeededRng rng = master.sub_rng(trial);
    const std::size_t dim = 2 + (trial % 7);
    const StateVector psi = random_state(dim, rng);
    CVec chi(dim);
    for (std::size_t i = 0; i < dim; ++i) chi[i] = rng.next_complex_gaussian();
    const StateVector out = project_out(psi, chi);
    CHECK(std::abs(out.amplitudes().norm_sq() - 1.0) < 1e-12);
    CHECK(std::abs(dot(psi.amplitudes(), out.amplitudes())) < 1e-10);
  }
}

}  // TEST_SUITE
