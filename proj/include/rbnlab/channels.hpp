#pragma once

#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "rbnlab/matcore.hpp"

namespace rbnlab {

enum class ChannelKind { BitFlip, PhaseFlip, BitPhaseFlip, Depolarizing, AmplitudeDamping };

/// Canonical short identifiers: IB, IF, IBF, DP, AD.
std::string_view channel_name(ChannelKind kind);
std::optional<ChannelKind> parse_channel_name(std::string_view name);

/// Single-qubit channel as a Kraus-operator set.
/// Completeness sum K^dag K = I is enforced at construction (1e-12).
class KrausChannel {
 public:
  KrausChannel(ChannelKind kind, std::vector<Cmat> ops, double p, double gamma);

  ChannelKind kind() const { return kind_; }
  std::string_view name() const { return channel_name(kind_); }
  const std::vector<Cmat>& kraus_ops() const { return ops_; }
  double p() const { return p_; }
  /// NaN for channels without a damping parameter.
  double gamma() const { return gamma_; }
  int dim() const { return static_cast<int>(ops_[0].rows()); }

 private:
  ChannelKind kind_;
  std::vector<Cmat> ops_;
  double p_;
  double gamma_;
};

/// Inversion channels: {sqrt(p) 1, sqrt(1-p) sigma}. p = 1 is the identity
/// channel, p = 0 conjugation by the corresponding Pauli.
KrausChannel bit_flip(double p);
KrausChannel phase_flip(double p);
KrausChannel bit_phase_flip(double p);

/// {sqrt(1-3p/4) 1, sqrt(p/4) sigma_xyz}. p = 1 maps everything to I/2.
KrausChannel depolarizing(double p);

/// Generalized amplitude damping with mixing p and strength gamma:
/// sqrt(p) {[[1,0],[0,s]], [[0,t],[0,0]]} and
/// sqrt(1-p) {[[s,0],[0,1]], [[0,0],[t,0]]}, s = sqrt(1-gamma), t = sqrt(gamma).
KrausChannel amplitude_damping(double p, double gamma);

KrausChannel make_channel(ChannelKind kind, double p,
                          double gamma = std::numeric_limits<double>::quiet_NaN());

/// One-sided application (1 x K_i) rho (1 x K_i^dag); side B is the default
/// noise location, side A mirrored.
DensityMatrix apply_local(const KrausChannel& channel, const DensityMatrix& rho,
                          Subsystem side = Subsystem::B);

/// True iff sum K K^dag = I within the tolerance.
bool is_unital(const KrausChannel& channel, double tolerance = tol::hermitian);

}  // namespace rbnlab
