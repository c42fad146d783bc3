#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rbnlab/matcore.hpp"
#include "rbnlab/measurement.hpp"

namespace rbnlab {

enum class Scenario { Ideal, EveRandom, EveAligned };

struct ProtocolConfig {
  long samples = 100000;
  double mu_min = 0.0;
  double mu_max = 1.0;
  Scenario scenario = Scenario::Ideal;
  std::uint64_t seed = 0;
};

/// How the legitimate axes were drawn for one sample: one of the three Pauli
/// observables, or a continuous direction on the sphere.
enum class AxisMode { Pauli, Continuous };

struct ProtocolRecord {
  double mu = 0.0;
  MeasurementDirection alice{0.0, 0.0};
  MeasurementDirection bob{0.0, 0.0};
  std::optional<MeasurementDirection> eve;
  double eta_value = 0.0;
  AxisMode axis_mode = AxisMode::Pauli;
};

/// Eve's intercept map: non-selective measurement of basis B' on side B.
DensityMatrix eve_intercept(const DensityMatrix& rho,
                            const ProjectiveBasis& basis_b_prime);

/// True iff all cross overlaps satisfy |<b|b'>|^2 = 1/d within tolerance.
bool mub_overlap_check(const ProjectiveBasis& b1, const ProjectiveBasis& b2);

/// Phi_B Phi_B' for mutually unbiased bases; the result is exactly
/// Tr_B(rho) (x) I/d_B. Throws when the bases are not unbiased.
DensityMatrix double_dephase_mub(const DensityMatrix& rho,
                                 const ProjectiveBasis& basis_b,
                                 const ProjectiveBasis& basis_b_prime);

/// Post-interception eta on the Werner state when Bob measures unbiased to
/// Eve and r is the Alice/Eve Bloch overlap:
/// (1/2)[F(mu) + F(-mu) - G(mu,r) - G(-mu,r)],
/// F(mu) = (1+mu) ln((1+mu)/4), G(mu,r) = (1+mu r) ln((1+mu r)/4).
double eta_after_eve_analytic(double mu, double r);

/// Largest nonlocality the legitimate parties can still certify after an
/// interception: (1/2)[F(mu) + F(-mu)] + ln 4; equals
/// eta_after_eve_analytic(mu, 0).
double rbn_after_eve_analytic(double mu);

/// Inner product of the two Bloch vectors (the r of the analytic display).
double bloch_overlap(const MeasurementDirection& d1,
                     const MeasurementDirection& d2);

/// Monte-Carlo run of the Alice/Bob(/Eve) rounds on Werner states.
/// Sample k draws from the (seed, k) substream, so results are independent
/// of evaluation order and reproducible.
std::vector<ProtocolRecord> simulate_protocol(const ProtocolConfig& cfg);

}  // namespace rbnlab
