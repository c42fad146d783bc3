#pragma once

#include <cstdint>

#include "rbnlab/matcore.hpp"
#include "rbnlab/measurement.hpp"

namespace rbnlab {

/// Settings for the two-stage context search: a deterministic coarse grid
/// over (theta_a, phi_a, theta_b, phi_b) followed by simplex refinement from
/// the best `restarts` grid cells. max_evals caps the refinement stage (the
/// grid always runs in full); seed is reserved for randomized restart
/// strategies, the default strategy is fully deterministic.
struct OptimizerConfig {
  int coarse_grid_per_angle = 12;
  int restarts = 32;
  double refine_tolerance = 1e-9;
  int max_evals = 20000;
  std::uint64_t seed = 0;
};

struct OptimizerResult {
  double value = 0.0;  // nats
  MeasurementDirection angles_a{0.0, 0.0};
  MeasurementDirection angles_b{0.0, 0.0};
  long evaluations = 0;
  bool converged = false;
};

/// Contextual nonlocality for a fixed context:
/// eta = S(Phi_A rho) + S(Phi_B rho) - S(Phi_AB rho) - S(rho), in nats.
/// Tiny negatives (> -1e-9) are clamped to 0.
double eta(const ProjectiveBasis& basis_a, const ProjectiveBasis& basis_b,
           const DensityMatrix& rho);

/// Two-qubit fast path of the same quantity, evaluated in the rotated frame
/// with analytic 2x2 block spectra. Agrees with the projector path to
/// numerical precision (tested).
double eta(const DensityMatrix& rho, const MeasurementDirection& dir_a,
           const MeasurementDirection& dir_b);

/// Realism-based nonlocality: max over measurement contexts of eta.
/// Deterministic for a fixed config; `converged` is false when the winning
/// refinement run exhausted its budget before reaching refine_tolerance.
OptimizerResult rbn(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

/// Same-axis eta of the Werner state, which is also its global maximum:
/// -1/2 [F(mu) + F(-mu)] - S(rho_mu), F(mu) = (1+mu) ln((1+mu)/4).
double werner_rbn_closed_form(double mu);

/// Global quantum discord: min over local projective bases of
/// [S(Phi_AB rho) - S(rho)] - [S(Phi_A rho_A) - S(rho_A)] - [S(Phi_B rho_B) - S(rho_B)].
OptimizerResult global_discord(const DensityMatrix& rho,
                               const OptimizerConfig& cfg = {});

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

}  // namespace rbnlab
