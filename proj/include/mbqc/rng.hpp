#pragma once

#include <cmath>
#include <cstdint>

namespace mbqc {

// splitmix64; used to derive independent stream seeds from (seed, point, shot).
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Counter-based stream: every (seed, point, shot) triple owns an independent
// generator, so results do not depend on how shots are scheduled over workers.
class Rng {
 public:
  Rng() : Rng(0, 0, 0) {}
  Rng(uint64_t seed, uint64_t point, uint64_t shot) {
    uint64_t k = mix64(seed ^ mix64(point ^ mix64(shot)));
    state_ = k | 1u;
    inc_ = mix64(k) | 1u;
    next_u32();
    next_u32();
  }

  uint32_t next_u32() {
    // PCG-XSH-RR.
    uint64_t old = state_;
    state_ = old * 6364136223846793005ull + inc_;
    uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
    uint32_t rot = static_cast<uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  uint64_t next_u64() {
    return (static_cast<uint64_t>(next_u32()) << 32) | next_u32();
  }

  // Uniform in [0,1). 53-bit mantissa.
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0,1]; safe as a log() argument.
  double next_double_pos() { return ((next_u64() >> 11) + 1) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  // Uniform integer in [0, n).
  uint32_t next_below(uint32_t n) {
    return static_cast<uint32_t>((static_cast<uint64_t>(next_u32()) * n) >> 32);
  }

  // Number of failures before the next success of a Bernoulli(p) sequence.
  // Lets samplers skip directly to the next firing site.
  uint64_t geometric_skip(double p) {
    if (p >= 1.0) return 0;
    if (p <= 0.0) return UINT64_MAX;
    double u = next_double_pos();
    double g = std::floor(std::log(u) / std::log1p(-p));
    if (g > 9e18) return UINT64_MAX;
    return static_cast<uint64_t>(g);
  }

 private:
  uint64_t state_;
  uint64_t inc_;
};

}  // namespace mbqc
