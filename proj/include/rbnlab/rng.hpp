#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace rbnlab {

/// Manifest identifier for the sampling scheme below. Bump on any change to
/// the generator, the substream derivation, or the variate recipes.
inline constexpr const char* kRngId = "splitmix64/substream-v1";

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// Finalizer of the splitmix64 generator.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

/// splitmix64: counter + finalizer. Cheap to seed, trivially splittable,
/// identical output on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform in {0, ..., n-1}.
  int next_int(int n) {
    return static_cast<int>((static_cast<unsigned __int128>(next_u64()) *
                             static_cast<unsigned __int128>(n)) >>
                            64);
  }

  /// Standard normal via Box-Muller.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = next_double();
    while (u <= 0.0) u = next_double();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double a = 2.0 * std::numbers::pi * next_double();
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Independent per-sample stream: the k-th substream of a seeded run.
/// Order-independent, so parallel sample generation stays reproducible.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(seed ^ mix64(index + kGolden)));
}

}  // namespace rbnlab
