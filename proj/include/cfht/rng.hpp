#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace cfht {

// One SplitMix64 output for the given state (Steele/Lea/Flood constants).
constexpr std::uint64_t splitmix64_once(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Folds (seed, indices, domain tag) into a single stream seed:
// s_0 = 0, s_i = splitmix64_once(s_{i-1} XOR part_i).
constexpr std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t s = 0;
  for (std::uint64_t p : parts) s = splitmix64_once(s ^ p);
  return s;
}

// Four ASCII bytes packed little-endian; used for domain separation of
// keyed streams so draws for different purposes never collide.
constexpr std::uint64_t domain_tag(char a, char b, char c, char d) {
  return static_cast<std::uint64_t>(static_cast<unsigned char>(a)) |
         static_cast<std::uint64_t>(static_cast<unsigned char>(b)) << 8 |
         static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << 16 |
         static_cast<std::uint64_t>(static_cast<unsigned char>(d)) << 24;
}

inline constexpr std::uint64_t kTagSkey = domain_tag('s', 'k', 'e', 'y');
inline constexpr std::uint64_t kTagUserKey = domain_tag('u', 'k', 'e', 'y');
inline constexpr std::uint64_t kTagReissue = domain_tag('r', 'k', 'e', 'y');
inline constexpr std::uint64_t kTagLinkA = domain_tag('l', 'n', 'k', 'a');
inline constexpr std::uint64_t kTagLinkB = domain_tag('l', 'n', 'k', 'b');

// Deterministic PRNG with fixed-width arithmetic only, so every stream is
// bit-identical across platforms, runs, and thread counts.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw in [0, bound) via modulo rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0ULL - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller. std::normal_distribution is
  // implementation-defined, which would break cross-platform determinism.
  double next_gaussian() {
    const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace cfht
