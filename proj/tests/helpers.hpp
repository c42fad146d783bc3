#pragma once

#include <cmath>
#include <numbers>

#include "rbnlab/matcore.hpp"
#include "rbnlab/measurement.hpp"
#include "rbnlab/rng.hpp"

namespace testutil {

using rbnlab::Cmat;
using rbnlab::Complex;

inline double max_abs_diff(const Cmat& a, const Cmat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline Cmat ginibre(rbnlab::SplitMix64& rng, int n) {
  Cmat g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  return g;
}

/// Haar-ish random unitary: QR of a Ginibre matrix with phase fixing.
inline Cmat random_unitary(rbnlab::SplitMix64& rng, int n) {
  const Cmat g = ginibre(rng, n);
  Eigen::HouseholderQR<Cmat> qr(g);
  Cmat q = qr.householderQ();
  const Cmat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

/// Full-rank random mixed state G G^dag / tr.
inline rbnlab::DensityMatrix random_density(rbnlab::SplitMix64& rng, int dim_a,
                                            int dim_b) {
  const Cmat g = ginibre(rng, dim_a * dim_b);
  Cmat m = g * g.adjoint();
  m /= m.trace().real();
  return rbnlab::DensityMatrix(dim_a, dim_b, std::move(m));
}

inline rbnlab::MeasurementDirection random_direction(rbnlab::SplitMix64& rng) {
  return rbnlab::canonical_direction(rng.uniform(0.0, std::numbers::pi),
                                     rng.uniform(0.0, 2.0 * std::numbers::pi));
}

/// Inverse of the (cos t, -sin t sin f, sin t cos f) Bloch parameterization.
inline rbnlab::MeasurementDirection direction_from_bloch(
    const Eigen::Vector3d& n) {
  const double theta = std::acos(std::clamp(n(0), -1.0, 1.0));
  const double phi = std::atan2(-n(1), n(2));
  return rbnlab::canonical_direction(theta, phi);
}

inline Cmat swap_gate() {
  Cmat s = Cmat::Zero(4, 4);
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

}  // namespace testutil
