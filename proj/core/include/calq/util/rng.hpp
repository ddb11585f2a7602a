#ifndef CALQ_UTIL_RNG_HPP
#define CALQ_UTIL_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace calq::util {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic generator with fixed-offset substream derivation.
/// Uniform and normal draws are produced from raw 64-bit output with
/// explicit arithmetic (no std::*_distribution), so a (seed, offset)
/// pair reproduces the exact same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(mix(seed)) {}

  /// Substream for a named pipeline stage; offsets are fixed per call site.
  Rng substream(std::uint64_t offset) const {
    std::uint64_t s = seed_material_ ^ (0xa0761d6478bd642fULL * (offset + 1));
    return Rng(s, 0);
  }

  double uniform() {  // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// log-uniform draw on [a, b], a, b > 0
  double log_uniform(double a, double b) {
    return std::exp(uniform(std::log(a), std::log(b)));
  }

  double normal() {
    // Box-Muller; one value per call, cached pair dropped for simplicity.
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  /// integer in [lo, hi] inclusive
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(eng_() % span);
  }

 private:
  Rng(std::uint64_t material, int) : eng_(mix(material)) {}

  std::uint64_t mix(std::uint64_t seed) {
    seed_material_ = seed;
    std::uint64_t s = seed;
    return splitmix64(s);
  }

  std::uint64_t seed_material_ = 0;
  std::mt19937_64 eng_;
};

}  // namespace calq::util

#endif
