#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "lmgdfm/common.hpp"

namespace lmgdfm {

/// splitmix64 output function. Bijective mix of a 64-bit word.
inline constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline constexpr std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
  return splitmix64(seed + kGolden + splitmix64(v + kGolden));
}

inline constexpr std::uint64_t hash64(std::uint64_t a, std::uint64_t b) {
  return hash_combine(a, b);
}
inline constexpr std::uint64_t hash64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return hash_combine(hash_combine(a, b), c);
}
inline constexpr std::uint64_t hash64(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                      std::uint64_t d) {
  return hash_combine(hash_combine(hash_combine(a, b), c), d);
}

/// Counter-based generator keyed by (seed, stream). The i-th output is a pure
/// function of (key, i), so independent streams never share state and any
/// draw can be reproduced from its indices alone.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(hash64(seed, stream)) {}
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return splitmix64(key_ + (counter_++) * kGolden); }

  /// Uniform draw in the open interval (0, 1).
  double uniform01() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; pairs are cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Stream ids used by the simulator; factor shock l uses kStreamFactorBase + l.
inline constexpr std::uint64_t kStreamFactorBase = 0x100;
inline constexpr std::uint64_t kStreamIdio = 0x200;

}  // namespace lmgdfm
