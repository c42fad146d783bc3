#pragma once

#include <Eigen/Dense>

#include "rbnlab/matcore.hpp"
#include "rbnlab/measurement.hpp"

namespace rbnlab {

/// Werner state (1-mu) I/4 + mu |s><s| with |s> = (|01> - |10>)/sqrt(2).
/// mu is restricted to [0, 1].
DensityMatrix werner(double mu);

DensityMatrix singlet();
DensityMatrix bell_phi_plus();
DensityMatrix bell_phi_minus();

/// Tensor product of two single-subsystem states.
DensityMatrix product(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

/// Classical-classical state sum_ab p(a,b) A_a (x) B_b. The table must be
/// entrywise nonnegative and sum to 1 within tol::trace.
DensityMatrix classical_classical(const Eigen::Matrix2d& p,
                                  const ProjectiveBasis& basis_a,
                                  const ProjectiveBasis& basis_b);

}  // namespace rbnlab
