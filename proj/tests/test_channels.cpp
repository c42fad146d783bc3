#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rbnlab/channels.hpp"
#include "rbnlab/states.hpp"

using namespace rbnlab;
using testutil::max_abs_diff;

namespace {

Cmat single_qubit_action(const KrausChannel& channel, const Cmat& rho) {
  Cmat out = Cmat::Zero(2, 2);
  for (const Cmat& k : channel.kraus_ops()) {
    out += k * rho * k.adjoint();
  }
  return out;
}

}  // namespace

TEST_SUITE("channels") {

TEST_CASE("names round-trip") {
  for (const ChannelKind kind :
       {ChannelKind::BitFlip, ChannelKind::PhaseFlip, ChannelKind::BitPhaseFlip,
        ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping}) {
    CHECK(parse_channel_name(channel_name(kind)) == kind);
  }
  CHECK(parse_channel_name("XY") == std::nullopt);
  CHECK(parse_channel_name("ib") == std::nullopt);
}

TEST_CASE("completeness holds across the parameter range") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const double p = rng.next_double();
    const double gamma = rng.next_double();
    CHECK_NOTHROW(bit_flip(p));
    CHECK_NOTHROW(phase_flip(p));
    CHECK_NOTHROW(bit_phase_flip(p));
    CHECK_NOTHROW(depolarizing(p));
    CHECK_NOTHROW(amplitude_damping(p, gamma));
  }
  CHECK_THROWS_AS(bit_flip(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(depolarizing(1.01), std::invalid_argument);
  CHECK_THROWS_AS(amplitude_damping(0.5, 1.2), std::invalid_argument);

  Cmat not_complete = 0.9 * identity(2);
  CHECK_THROWS_AS(KrausChannel(ChannelKind::BitFlip, {not_complete}, 0.9,
                               std::numeric_limits<double>::quiet_NaN()),
                  InvalidStateError);
}

TEST_CASE("p = 1 is the identity channel for the inversion family") {
  SplitMix64 rng(31);
  const DensityMatrix rho = testutil::random_density(rng, 2, 2);
  for (const ChannelKind kind : {ChannelKind::BitFlip, ChannelKind::PhaseFlip,
                                 ChannelKind::BitPhaseFlip}) {
    const KrausChannel id = make_channel(kind, 1.0);
    CHECK(max_abs_diff(apply_local(id, rho).matrix(), rho.matrix()) < 1e-14);

    // p = 0 conjugates by the corresponding Pauli
    const KrausChannel full = make_channel(kind, 0.0);
    const Cmat sigma = full.kraus_ops()[1];
    const Cmat op = tensor(identity(2), sigma);
    CHECK(max_abs_diff(apply_local(full, rho).matrix(),
                       op * rho.matrix() * op.adjoint()) < 1e-14);
  }
}

TEST_CASE("depolarizing mixes toward the maximally mixed state") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const double p = rng.next_double();
    const KrausChannel dp = depolarizing(p);
    Cmat g = testutil::ginibre(rng, 2);
    Cmat rho = g * g.adjoint();
    rho /= rho.trace().real();
    const Cmat expected = (1.0 - p) * rho + 0.5 * p * identity(2);
    CHECK(max_abs_diff(single_qubit_action(dp, rho), expected) < 1e-13);
  }

  const DensityMatrix w = werner(0.8);
  const DensityMatrix out = apply_local(depolarizing(1.0), w, Subsystem::B);
  const Cmat expected =
      tensor(partial_trace(w, Subsystem::A).matrix(), 0.5 * identity(2));
  CHECK(max_abs_diff(out.matrix(), expected) < 1e-13);
}

TEST_CASE("amplitude damping endpoints") {
  SplitMix64 rng(41);
  const DensityMatrix rho = testutil::random_density(rng, 2, 2);

  // gamma = 0 leaves every state untouched, for any mixing p
  for (const double p : {0.0, 0.3, 1.0}) {
    CHECK(max_abs_diff(apply_local(amplitude_damping(p, 0.0), rho).matrix(),
                       rho.matrix()) < 1e-14);
  }

  // p = 1, gamma = 1 collapses the noisy side onto its ground level
  const DensityMatrix collapsed =
      apply_local(amplitude_damping(1.0, 1.0), rho, Subsystem::B);
  Cmat ground = Cmat::Zero(2, 2);
  ground(0, 0) = 1.0;
  const Cmat expected =
      tensor(partial_trace(rho, Subsystem::A).matrix(), ground);
  CHECK(max_abs_diff(collapsed.matrix(), expected) < 1e-13);

  CHECK(std::isnan(bit_flip(0.5).gamma()));
  CHECK(amplitude_damping(0.25, 0.75).gamma() == 0.75);
  CHECK_THROWS_AS(make_channel(ChannelKind::AmplitudeDamping, 0.5),
                  std::invalid_argument);
}

TEST_CASE("unitality") {
  CHECK(is_unital(bit_flip(0.3)));
  CHECK(is_unital(phase_flip(0.9)));
  CHECK(is_unital(bit_phase_flip(0.0)));
  CHECK(is_unital(depolarizing(0.6)));
  CHECK(is_unital(amplitude_damping(0.5, 0.7)));
  CHECK_FALSE(is_unital(amplitude_damping(0.3, 0.5)));
  CHECK_FALSE(is_unital(amplitude_damping(1.0, 1.0)));
}

TEST_CASE("both sides and trace preservation") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = testutil::random_density(rng, 2, 2);
    const KrausChannel ch = amplitude_damping(rng.next_double(),
                                              rng.next_double());
    for (const Subsystem side : {Subsystem::A, Subsystem::B}) {
      const DensityMatrix out = apply_local(ch, rho, side);
      CHECK(std::abs(out.matrix().trace().real() - 1.0) < 1e-13);
      CHECK_NOTHROW(DensityMatrix(2, 2, out.matrix()));
      // the untouched marginal is preserved
      const Subsystem kept =
          side == Subsystem::A ? Subsystem::B : Subsystem::A;
      CHECK(max_abs_diff(partial_trace(out, kept).matrix(),
                         partial_trace(rho, kept).matrix()) < 1e-13);
    }
  }
}

TEST_CASE("dimension mismatch is rejected") {
  Cmat one = Cmat::Zero(1, 1);
  one(0, 0) = 1.0;
  const DensityMatrix rho =
      product(DensityMatrix::single(0.5 * identity(2)), DensityMatrix(1, 1, one));
  CHECK_THROWS_AS(apply_local(bit_flip(0.5), rho, Subsystem::B),
                  std::invalid_argument);
}

}  // TEST_SUITE
