#pragma once

#include <cmath>
#include <cstdint>

namespace edgewalk {

// 64-bit mixing used everywhere a new stream or retry seed is derived:
// splitmix64 finalizer applied to seed + (salt+1) * golden gamma.
// Fixed and documented so that experiment seeds are portable across builds.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + (salt + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Stream labels. Instance generation, walk noise, rounding noise and the
// random-coloring baseline must be independently reseedable from one user seed.
inline constexpr std::uint64_t kStreamWalk = 0x01;
inline constexpr std::uint64_t kStreamInstance = 0x02;
inline constexpr std::uint64_t kStreamRounding = 0x03;
inline constexpr std::uint64_t kStreamBaseline = 0x04;

// xoshiro256** (Blackman/Vigna, public domain), seeded through splitmix64.
// One exclusively owned stream per walk / generator; never shared across
// threads, which keeps every run bit-reproducible under any schedule.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) {
      sm += 0x9E3779B97F4A7C15ULL;
      std::uint64_t z = sm;
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      w = z ^ (z >> 31);
    }
  }

  static Rng stream(std::uint64_t seed, std::uint64_t label) {
    return Rng(mix64(seed, label));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0,1), 53-bit resolution.
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % bound;
  }

  // Standard normal via the Marsaglia polar method. Hand-rolled instead of
  // std::normal_distribution, whose output sequence is implementation-defined.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace edgewalk
