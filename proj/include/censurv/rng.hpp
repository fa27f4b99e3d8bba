#ifndef CENSURV_RNG_HPP
#define CENSURV_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace censurv {

// splitmix64 finalizer; used to spread user seeds and derive replicate streams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic child seed for stream `index` of a parent seed. Replicate b
/// of a run depends only on (seed, b), so results are invariant to worker
/// count and scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) ^ mix64(index + 0x51ed2701ULL));
}

/// Seeded random stream with transforms implemented here rather than via
/// std::*_distribution, whose output is implementation-defined. Identical
/// seeds give bit-identical streams on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1]; safe as a log() argument.
  double uniform_pos() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (cosine branch only, stateless).
  double normal() {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  /// Integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection-free modulo is biased for huge n; n here is a dataset size.
    return engine_() % n;
  }

private:
  static constexpr double two_pi = 6.283185307179586476925286766559;
  std::mt19937_64 engine_;
};

}  // namespace censurv

#endif
