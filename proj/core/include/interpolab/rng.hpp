#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace interpolab {

// Deterministic 64-bit generator (splitmix64) with explicit floating-point
// conversions. Standard-library distributions are implementation-defined,
// which would break bit-for-bit reproducibility of seeded runs, so every
// random draw in the project goes through this class.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1) with 53-bit resolution
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // uniform integer in [lo, hi], inclusive
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  // standard normal via Box-Muller (fresh pair each call, cos branch)
  double normal() {
    const double u1 = 1.0 - next_double();  // (0,1]
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // real and imaginary parts independent standard normals
  std::complex<double> complex_normal() {
    const double u1 = 1.0 - next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed from a base seed and a task index.
// Used for the per-trial splitmix discipline: trial t of a run is seeded by
// derive_seed(cfg.seed, t), so trials are reproducible in isolation and
// independent of scheduling.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 g(base ^ (0x9e3779b97f4a7c15ULL * (index + 0x51ed2701a7b5c337ULL)));
  g.next_u64();
  return g.next_u64();
}

}  // namespace interpolab
