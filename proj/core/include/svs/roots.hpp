#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "svs/poly.hpp"

namespace svs {

/// The F_q-rational roots of a univariate polynomial. full_line means the
/// input was the zero polynomial: every t in F_q is a root and the list is
/// left empty.
struct RootSet {
  std::vector<Elem> roots;  // sorted by idx, no duplicates
  bool full_line = false;

  std::uint64_t count(const FieldCtx& ctx) const {
    return full_line ? ctx.q() : roots.size();
  }
  bool any() const { return full_line || !roots.empty(); }
};

enum class RootStrategy {
  kAuto,  // direct scan for q <= 4096, gcd + splitting above
  kScan,
  kGcd,
};

/// Monic gcd(f, T^q - T): splits into distinct linear factors whose roots
/// are exactly the F_q-roots of f; returns 0 iff f = 0.
UniPoly frobenius_gcd(const UniPoly& f, const FieldCtx& ctx);

/// Complete root set of f. The gcd strategy computes frobenius_gcd and then
/// splits by equal-degree splitting: random shifts (T+delta)^((q-1)/2) - 1
/// for odd q, random multiples of the trace map sum (cT)^(2^i) in
/// characteristic 2. Degenerate splits are retried with fresh randomness,
/// with a hard cap of 64 * deg rounds.
RootSet all_roots(const UniPoly& f, const FieldCtx& ctx, Rng& rng,
                  RootStrategy strategy = RootStrategy::kAuto);

/// Scan variant that needs no randomness; requires q within the scan budget.
RootSet all_roots_scan(const UniPoly& f, const FieldCtx& ctx);

/// A uniformly chosen root, or nullopt when f has none (f != 0). For f = 0
/// the draw is uniform over all of F_q. Exact equiprobability: the whole
/// root set is materialized before sampling.
std::optional<Elem> sample_root(const UniPoly& f, const FieldCtx& ctx,
                                Rng& rng,
                                RootStrategy strategy = RootStrategy::kAuto);

constexpr std::uint64_t kRootScanMax = 4096;

}  // namespace svs
