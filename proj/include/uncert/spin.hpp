#pragma once

#include "uncert/quantum.hpp"

namespace uncert {

/// Angular-momentum triple for spin j (ħ = 1), dimension 2j+1, basis ordered
/// by descending m: |j, m=+j⟩ first. Satisfies [J_x, J_y] = i J_z (cyclic)
/// and J_x² + J_y² + J_z² = j(j+1)·I to rounding.
struct SpinTriple {
  double j;
  HermitianOperator jx;
  HermitianOperator jy;
  HermitianOperator jz;
};

/// Ladder construction: J_z diagonal (j, j−1, …, −j), J_± with coefficients
/// √(j(j+1) − m(m±1)), J_x = (J_+ + J_−)/2, J_y = (J_+ − J_−)/(2i).
SpinTriple spin_operators(double j, std::size_t max_dim = 64,
                          const Tolerances& tol = default_tolerances());

/// cosφ·|+⟩ + sinφ·|−⟩ in the spin-1 basis |+⟩, |0⟩, |−⟩.
StateVector figure1_state(double phi, const Tolerances& tol = default_tolerances());

}  // namespace uncert
