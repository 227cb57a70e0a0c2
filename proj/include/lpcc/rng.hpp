// SPDX-License-Identifier: Apache-2.0
//
// Deterministic random number generation for instance builders.
//
// The generator is pinned forever: xoshiro256** seeded through splitmix64.
// Integer draws use rejection sampling (no modulo bias), reals divide the
// top 53 bits by 2^53.  Given a seed, the stream is identical on every
// platform, which is what makes generated instance files byte-reproducible.

#pragma once

#include <cstdint>

namespace lpcc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    // splitmix64 expansion of the user seed into the xoshiro state.
    std::uint64_t x = seed;
    for (int i = 0; i < 4; ++i) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      s_[i] = z ^ (z >> 31);
    }
  }

  std::uint64_t next() {
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

  // Uniform integer in [0, n), unbiased via rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform integer in [lo, hi], both ends inclusive.
  std::int64_t int_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform real in [0, 1) with 53 random mantissa bits.
  double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double real_range(double lo, double hi) {
    return lo + real01() * (hi - lo);
  }

  bool bernoulli(double p) { return real01() < p; }

  // Standard normal approximated by an Irwin-Hall sum of 12 uniforms.
  // Chosen over Box-Muller because it uses only additions, so the value is
  // bit-identical across libm implementations.
  double normal() {
    double s = 0.0;
    for (int i = 0; i < 12; ++i) s += real01();
    return s - 6.0;
  }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  std::uint64_t s_[4];
};

}  // namespace lpcc
