#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "aucint/mathutil.hpp"

namespace aucint {

// SplitMix64 finalizer; decorrelates (seed, stream) pairs before they
// reach the engine.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seedable stream RNG on top of std::mt19937_64. Stream s of a given seed is
// decorrelated from stream t != s, so replicate/bootstrap code can derive one
// stream per index and get the same draws serially or in any order.
//
// All sampling is built from raw 64-bit draws; none of the <random>
// distributions are used, so sequences are reproducible across standard
// libraries (the mt19937_64 engine itself is pinned by the standard).
class StreamRng {
 public:
  explicit StreamRng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(mix64(seed ^ mix64(stream))) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform on [0,1), 53-bit resolution
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // uniform on (0,1]; safe as a log() argument
  double uniform_pos() { return double((next_u64() >> 11) + 1) * 0x1.0p-53; }

  // uniform index in [0, n)
  std::size_t uniform_index(std::size_t n) {
    const auto k = std::size_t(uniform() * double(n));
    return k < n ? k : n - 1;
  }

  // standard normal via Box-Muller; the second variate of each pair is cached
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double a = 2.0 * kPi * uniform();
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // standard Cauchy by inverting the CDF
  double cauchy() { return std::tan(kPi * (uniform() - 0.5)); }

  // Student t with 2 degrees of freedom: N / sqrt(chi2_2 / 2), where
  // chi2_2 = -2 log U is an exponential of mean 2.
  double student_t2() {
    const double chi2 = -2.0 * std::log(uniform_pos());
    return normal() / std::sqrt(chi2 / 2.0);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace aucint
