#pragma once

#include <cstdint>
#include <random>

namespace svs {

// The output sequence of std::mt19937_64 for a given seed is pinned by the
// standard, so seeded runs replay identically on any conforming toolchain.
// Only the engine is reused from the standard library: the bounded draw
// below is implemented here because std::uniform_int_distribution is
// implementation-defined and would break cross-platform reproducibility.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer. Bijective on 64-bit words; used to hash indices
/// into statistically independent seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for the stream identified by (master, a, b, c). Streams for distinct
/// index tuples are independent for all practical purposes, which is what
/// makes worker partitioning irrelevant to the sampled values.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  return h;
}

inline Rng make_rng(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                    std::uint64_t c = 0) {
  return Rng(derive_seed(master, a, b, c));
}

/// Unbiased uniform draw from [0, n). Lemire's multiply-shift with rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  using u128 = unsigned __int128;
  u128 m = static_cast<u128>(rng()) * n;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < n) {
    const std::uint64_t t = (0 - n) % n;
    while (lo < t) {
      m = static_cast<u128>(rng()) * n;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace svs
