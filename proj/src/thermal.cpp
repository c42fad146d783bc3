#include "rbnlab/thermal.hpp"

#include <cmath>

#include "rbnlab/measurement.hpp"
#include "rbnlab/parallel.hpp"

namespace rbnlab {

namespace {

ThermalRow sweep_row(double energy, double k_t, const OptimizerConfig& cfg) {
  const ThermalParams params(energy, k_t);
  ThermalRow row;
  row.energy = energy;
  row.k_t = k_t;
  row.q = params.ground_population();
  const DensityMatrix state = rho_x(row.q);
  row.rbn = rbn(state, cfg).value;
  const MeasurementDirection x_dir = pauli_direction(PauliAxis::X);
  const MeasurementDirection z_dir = pauli_direction(PauliAxis::Z);
  row.eta_xx = eta(state, x_dir, x_dir);
  row.eta_zz = eta(state, z_dir, z_dir);
  row.gd = global_discord(state, cfg).value;
  return row;
}

}  // namespace

ThermalParams::ThermalParams(double energy_in, double k_t_in)
    : energy(energy_in), k_t(k_t_in) {
  if (!(k_t > 0.0)) {
    throw std::invalid_argument("kT must be positive");
  }
  if (!(energy >= 0.0)) {
    throw std::invalid_argument("level gap must be nonnegative");
  }
}

double ThermalParams::ground_population() const {
  return 1.0 / (1.0 + std::exp(-beta() * energy));
}

DensityMatrix gibbs_qubit(const ThermalParams& params) {
  const double q = params.ground_population();
  Cmat m = Cmat::Zero(2, 2);
  m(0, 0) = q;
  m(1, 1) = 1.0 - q;
  return DensityMatrix::unchecked(2, 1, std::move(m));
}

Cmat correlating_unitary() {
  Cmat v1 = Cmat::Zero(4, 4);
  v1(0, 0) = 1.0;
  v1(1, 1) = 1.0;
  v1(2, 3) = 1.0;
  v1(3, 2) = 1.0;
  const double r = 1.0 / std::sqrt(2.0);
  Cmat v2 = Cmat::Zero(4, 4);
  v2(0, 0) = r;
  v2(3, 0) = r;
  v2(1, 1) = 1.0;
  v2(2, 2) = 1.0;
  v2(0, 3) = r;
  v2(3, 3) = -r;
  return v2 * v1;
}

DensityMatrix rho_x(double q) {
  if (!(q >= 0.5 && q <= 1.0)) {
    throw std::invalid_argument("rho_x: q must lie in [1/2, 1]");
  }
  Cmat m = Cmat::Zero(4, 4);
  m(0, 0) = q / 2.0;
  m(1, 1) = q * (1.0 - q);
  m(2, 2) = (1.0 - q) * (1.0 - q);
  m(3, 3) = q / 2.0;
  m(0, 3) = q * q - q / 2.0;
  m(3, 0) = q * q - q / 2.0;
  return DensityMatrix::unchecked(2, 2, std::move(m));
}

std::vector<ThermalRow> thermal_sweep(const std::vector<double>& energies,
                                      const std::vector<double>& kt_grid,
                                      const OptimizerConfig& cfg) {
  std::vector<ThermalRow> rows(energies.size() * kt_grid.size());
  parallel_for(static_cast<std::int64_t>(rows.size()), [&](std::int64_t i) {
    const std::size_t e = static_cast<std::size_t>(i) / kt_grid.size();
    const std::size_t t = static_cast<std::size_t>(i) % kt_grid.size();
    rows[static_cast<std::size_t>(i)] = sweep_row(energies[e], kt_grid[t], cfg);
  });
  return rows;
}

std::vector<ThermalNoiseRow> thermal_noise_sweep(
    double energy, const std::vector<double>& kt_grid, ChannelKind kind,
    const std::vector<std::pair<double, double>>& params,
    const OptimizerConfig& cfg) {
  std::vector<ThermalNoiseRow> rows(kt_grid.size() * params.size());
  parallel_for(static_cast<std::int64_t>(kt_grid.size()), [&](std::int64_t t) {
    const ThermalRow base = sweep_row(energy, kt_grid[static_cast<std::size_t>(t)], cfg);
    const DensityMatrix state = rho_x(base.q);
    for (std::size_t c = 0; c < params.size(); ++c) {
      const auto [p, gamma] = params[c];
      ThermalNoiseRow row;
      row.base = base;
      row.channel = std::string(channel_name(kind));
      row.p = p;
      row.gamma = gamma;
      row.rbn_noisy =
          rbn(apply_local(make_channel(kind, p, gamma), state), cfg).value;
      rows[static_cast<std::size_t>(t) * params.size() + c] = row;
    }
  });
  return rows;
}

}  // namespace rbnlab
