#include "rbnlab/channels.hpp"

#include <cmath>

namespace rbnlab {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void check_unit_range(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

KrausChannel inversion(ChannelKind kind, const Cmat& sigma, double p) {
  check_unit_range(p, "p");
  std::vector<Cmat> ops;
  ops.push_back(std::sqrt(p) * identity(2));
  ops.push_back(std::sqrt(1.0 - p) * sigma);
  return KrausChannel(kind, std::move(ops), p, kNan);
}

}  // namespace

std::string_view channel_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip: return "IB";
    case ChannelKind::PhaseFlip: return "IF";
    case ChannelKind::BitPhaseFlip: return "IBF";
    case ChannelKind::Depolarizing: return "DP";
    case ChannelKind::AmplitudeDamping: return "AD";
  }
  throw std::invalid_argument("unknown channel kind");
}

std::optional<ChannelKind> parse_channel_name(std::string_view name) {
  if (name == "IB") return ChannelKind::BitFlip;
  if (name == "IF") return ChannelKind::PhaseFlip;
  if (name == "IBF") return ChannelKind::BitPhaseFlip;
  if (name == "DP") return ChannelKind::Depolarizing;
  if (name == "AD") return ChannelKind::AmplitudeDamping;
  return std::nullopt;
}

KrausChannel::KrausChannel(ChannelKind kind, std::vector<Cmat> ops, double p,
                           double gamma)
    : kind_(kind), ops_(std::move(ops)), p_(p), gamma_(gamma) {
  if (ops_.empty()) {
    throw std::invalid_argument("channel needs at least one Kraus operator");
  }
  const int d = static_cast<int>(ops_[0].rows());
  Cmat sum = Cmat::Zero(d, d);
  for (const Cmat& k : ops_) {
    if (k.rows() != d || k.cols() != d) {
      throw std::invalid_argument("Kraus operators must share one square dimension");
    }
    sum += k.adjoint() * k;
  }
  if ((sum - Cmat::Identity(d, d)).cwiseAbs().maxCoeff() > tol::kraus) {
    throw InvalidStateError("Kraus operators do not satisfy completeness");
  }
}

KrausChannel bit_flip(double p) {
  return inversion(ChannelKind::BitFlip, sigma_x(), p);
}

KrausChannel phase_flip(double p) {
  return inversion(ChannelKind::PhaseFlip, sigma_z(), p);
}

KrausChannel bit_phase_flip(double p) {
  return inversion(ChannelKind::BitPhaseFlip, sigma_y(), p);
}

KrausChannel depolarizing(double p) {
  check_unit_range(p, "p");
  std::vector<Cmat> ops;
  ops.push_back(std::sqrt(1.0 - 0.75 * p) * identity(2));
  ops.push_back(std::sqrt(0.25 * p) * sigma_x());
  ops.push_back(std::sqrt(0.25 * p) * sigma_y());
  ops.push_back(std::sqrt(0.25 * p) * sigma_z());
  return KrausChannel(ChannelKind::Depolarizing, std::move(ops), p, kNan);
}

KrausChannel amplitude_damping(double p, double gamma) {
  check_unit_range(p, "p");
  check_unit_range(gamma, "gamma");
  const double s = std::sqrt(1.0 - gamma);
  const double t = std::sqrt(gamma);
  const double a = std::sqrt(p);
  const double b = std::sqrt(1.0 - p);
  Cmat k0(2, 2), k1(2, 2), k2(2, 2), k3(2, 2);
  k0 << a, 0, 0, a * s;
  k1 << 0, a * t, 0, 0;
  k2 << b * s, 0, 0, b;
  k3 << 0, 0, b * t, 0;
  return KrausChannel(ChannelKind::AmplitudeDamping, {k0, k1, k2, k3}, p, gamma);
}

KrausChannel make_channel(ChannelKind kind, double p, double gamma) {
  switch (kind) {
    case ChannelKind::BitFlip: return bit_flip(p);
    case ChannelKind::PhaseFlip: return phase_flip(p);
    case ChannelKind::BitPhaseFlip: return bit_phase_flip(p);
    case ChannelKind::Depolarizing: return depolarizing(p);
    case ChannelKind::AmplitudeDamping:
      if (std::isnan(gamma)) {
        throw std::invalid_argument("amplitude damping requires gamma");
      }
      return amplitude_damping(p, gamma);
  }
  throw std::invalid_argument("unknown channel kind");
}

DensityMatrix apply_local(const KrausChannel& channel, const DensityMatrix& rho,
                          Subsystem side) {
  const int side_dim = side == Subsystem::A ? rho.dim_a() : rho.dim_b();
  if (channel.dim() != side_dim) {
    throw std::invalid_argument("channel dimension does not match the side");
  }
  const int n = rho.dim();
  Cmat out = Cmat::Zero(n, n);
  for (const Cmat& k : channel.kraus_ops()) {
    const Cmat op = side == Subsystem::A ? tensor(k, identity(rho.dim_b()))
                                         : tensor(identity(rho.dim_a()), k);
    out += op * rho.matrix() * op.adjoint();
  }
  return DensityMatrix::unchecked(rho.dim_a(), rho.dim_b(), std::move(out));
}

bool is_unital(const KrausChannel& channel, double tolerance) {
  const int d = channel.dim();
  Cmat sum = Cmat::Zero(d, d);
  for (const Cmat& k : channel.kraus_ops()) {
    sum += k * k.adjoint();
  }
  return (sum - Cmat::Identity(d, d)).cwiseAbs().maxCoeff() <= tolerance;
}

}  // namespace rbnlab
