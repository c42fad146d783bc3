#include "rbnlab/security.hpp"

#include <cmath>
#include <numbers>

#include "rbnlab/correlations.hpp"
#include "rbnlab/parallel.hpp"
#include "rbnlab/rng.hpp"
#include "rbnlab/states.hpp"

namespace rbnlab {

namespace {

constexpr double kPi = std::numbers::pi;

Cvec basis_ket(const ProjectiveBasis& basis, std::size_t i) {
  // rank-1 extraction: the column of largest norm, normalized
  const Cmat& p = basis.projectors()[i];
  Eigen::Index col = 0;
  p.colwise().norm().maxCoeff(&col);
  Cvec k = p.col(col);
  return k / k.norm();
}

MeasurementDirection random_direction(SplitMix64& rng) {
  const double theta = rng.uniform(0.0, kPi);
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  return canonical_direction(theta, phi);
}

MeasurementDirection random_pauli(SplitMix64& rng) {
  switch (rng.next_int(3)) {
    case 0: return pauli_direction(PauliAxis::X);
    case 1: return pauli_direction(PauliAxis::Y);
    default: return pauli_direction(PauliAxis::Z);
  }
}

}  // namespace

DensityMatrix eve_intercept(const DensityMatrix& rho,
                            const ProjectiveBasis& basis_b_prime) {
  return dephase(rho, basis_b_prime, Subsystem::B);
}

bool mub_overlap_check(const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
  if (b1.dim() != b2.dim()) {
    throw std::invalid_argument("bases must share one dimension");
  }
  const double target = 1.0 / b1.dim();
  for (std::size_t i = 0; i < b1.size(); ++i) {
    const Cvec u = basis_ket(b1, i);
    for (std::size_t j = 0; j < b2.size(); ++j) {
      const Cvec v = basis_ket(b2, j);
      if (std::abs(std::norm(u.dot(v)) - target) > tol::unbiased) return false;
    }
  }
  return true;
}

DensityMatrix double_dephase_mub(const DensityMatrix& rho,
                                 const ProjectiveBasis& basis_b,
                                 const ProjectiveBasis& basis_b_prime) {
  if (!mub_overlap_check(basis_b, basis_b_prime)) {
    throw InvalidStateError("bases are not mutually unbiased");
  }
  return dephase(dephase(rho, basis_b_prime, Subsystem::B), basis_b,
                 Subsystem::B);
}

double eta_after_eve_analytic(double mu, double r) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw std::invalid_argument("eta_after_eve_analytic: mu must lie in [0, 1]");
  }
  if (!(r >= -1.0 && r <= 1.0)) {
    throw std::invalid_argument("eta_after_eve_analytic: r must lie in [-1, 1]");
  }
  auto term = [](double u) { return u > 0.0 ? u * std::log(u / 4.0) : 0.0; };
  return 0.5 * (term(1.0 + mu) + term(1.0 - mu) - term(1.0 + mu * r) -
                term(1.0 - mu * r));
}

double rbn_after_eve_analytic(double mu) {
  return eta_after_eve_analytic(mu, 0.0);
}

double bloch_overlap(const MeasurementDirection& d1,
                     const MeasurementDirection& d2) {
  return bloch_vector(d1).dot(bloch_vector(d2));
}

std::vector<ProtocolRecord> simulate_protocol(const ProtocolConfig& cfg) {
  if (cfg.samples < 1) {
    throw std::invalid_argument("samples must be >= 1");
  }
  if (!(cfg.mu_min >= 0.0 && cfg.mu_max <= 1.0 && cfg.mu_min <= cfg.mu_max)) {
    throw std::invalid_argument(
        "mu range must lie within [0, 1] with mu-min <= mu-max");
  }
  std::vector<ProtocolRecord> records(cfg.samples);
  parallel_for(cfg.samples, [&](std::int64_t k) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(k));
    ProtocolRecord rec;
    rec.mu = rng.uniform(cfg.mu_min, cfg.mu_max);
    const bool pauli_round =
        cfg.scenario == Scenario::EveAligned || rng.next_double() < 0.5;
    rec.axis_mode = pauli_round ? AxisMode::Pauli : AxisMode::Continuous;
    if (pauli_round) {
      rec.alice = random_pauli(rng);
      rec.bob = random_pauli(rng);
    } else {
      rec.alice = random_direction(rng);
      rec.bob = random_direction(rng);
    }
    const DensityMatrix state = werner(rec.mu);
    switch (cfg.scenario) {
      case Scenario::Ideal:
        rec.eta_value = eta(state, rec.alice, rec.bob);
        break;
      case Scenario::EveRandom: {
        rec.eve = random_direction(rng);
        const DensityMatrix tapped =
            eve_intercept(state, qubit_basis(*rec.eve));
        rec.eta_value = eta(tapped, rec.alice, rec.bob);
        break;
      }
      case Scenario::EveAligned: {
        rec.eve = rec.bob;
        const DensityMatrix tapped =
            eve_intercept(state, qubit_basis(*rec.eve));
        rec.eta_value = eta(tapped, rec.alice, rec.bob);
        break;
      }
    }
    records[static_cast<std::size_t>(k)] = rec;
  });
  return records;
}

}  // namespace rbnlab
