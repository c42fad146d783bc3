#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbnlab/channels.hpp"
#include "rbnlab/correlations.hpp"
#include "rbnlab/matcore.hpp"

namespace rbnlab {

/// Two-level system with level gap E (ground level at 0) in contact with a
/// reservoir at temperature kT > 0 (k_B = 1).
struct ThermalParams {
  double energy;
  double k_t;
  ThermalParams(double energy, double k_t);
  double beta() const { return 1.0 / k_t; }
  /// Ground-state population q = 1/(1 + e^{-beta E}) in [1/2, 1).
  double ground_population() const;
};

/// Gibbs state q|0><0| + (1-q)|1><1|.
DensityMatrix gibbs_qubit(const ThermalParams& params);

/// U = V2 V1: V1 swaps |10> and |11>, V2 maps |00> -> (|00>+|11>)/sqrt(2)
/// and |11> -> (|00>-|11>)/sqrt(2).
Cmat correlating_unitary();

/// The correlated thermal X state: diagonal (q/2, q(1-q), (1-q)^2, q/2) with
/// anti-diagonal corners q^2 - q/2. Equals U (tau (x) tau) U^dag.
DensityMatrix rho_x(double q);

struct ThermalRow {
  double energy = 0.0;
  double k_t = 0.0;
  double q = 0.0;
  double rbn = 0.0;
  double eta_xx = 0.0;
  double eta_zz = 0.0;
  double gd = 0.0;
};

/// Per (E, kT) grid point: q, N_rb(rho_X), same-axis etas, and global
/// discord. Row order follows the input grids (E outer, kT inner).
std::vector<ThermalRow> thermal_sweep(const std::vector<double>& energies,
                                      const std::vector<double>& kt_grid,
                                      const OptimizerConfig& cfg = {});

struct ThermalNoiseRow {
  ThermalRow base;
  std::string channel;
  double p = 0.0;
  double gamma = 0.0;  // NaN when the channel has no gamma
  double rbn_noisy = 0.0;
};

/// N_rb of rho_X after one-sided noise, per (kT, channel parameter point).
/// Each row carries the noiseless sweep values alongside the noisy one.
std::vector<ThermalNoiseRow> thermal_noise_sweep(
    double energy, const std::vector<double>& kt_grid, ChannelKind kind,
    const std::vector<std::pair<double, double>>& params,
    const OptimizerConfig& cfg = {});

}  // namespace rbnlab
