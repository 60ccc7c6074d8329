#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "svs/poly.hpp"
#include "svs/roots.hpp"

namespace svs {

/// Ordered, pairwise-distinct strips: a prefix of a choice of vertical
/// strips.
struct StripSequence {
  std::vector<Strip> strips;
};

struct TraceEntry {
  Strip strip;
  std::uint64_t roots_found = 0;  // 0 when the strip had no root
};

/// Outcome of one SVS run. When found, zero is a point of F_q^r with
/// F(zero) = 0 and searches counts the strips visited (the last one
/// succeeded). On failure the trace covers every strip searched.
struct SvsResult {
  bool found = false;
  std::vector<Elem> zero;
  std::uint64_t searches = 0;
  std::vector<TraceEntry> trace;
  std::optional<OpCounter> ops_used;
};

/// Emits strips uniformly at random without replacement from F_q^{r-1}:
/// the i-th emission is uniform over the strips not yet emitted. Throws
/// ExhaustedError after q^{r-1} emissions.
///
/// Strip spaces up to 2^20 are shuffled in place (incremental
/// Fisher-Yates); larger spaces fall back to rejection sampling against the
/// set of used strips, which stays O(1) per draw while the used fraction is
/// small.
class StripSampler {
 public:
  StripSampler(const FieldCtx& ctx, unsigned r, Rng& rng);

  Strip next();
  std::uint64_t next_index();
  /// q^{r-1}, saturated at 2^63 when it does not fit.
  std::uint64_t space_size() const { return space_size_; }
  std::uint64_t emitted() const { return emitted_; }

  static constexpr std::uint64_t kShuffleMax = 1ull << 20;

 private:
  FieldCtx ctx_;
  unsigned r_;
  Rng& rng_;
  std::uint64_t space_size_;
  bool saturated_;
  std::uint64_t emitted_ = 0;
  std::vector<std::uint64_t> perm_;  // shuffle mode
  std::unordered_set<std::uint64_t> used_;  // rejection mode
};

struct SvsOptions {
  std::optional<std::uint64_t> max_strips;
  bool record_trace = true;
  bool count_ops = false;
  RootStrategy root_strategy = RootStrategy::kAuto;
};

/// One run of the search-on-vertical-strips algorithm: visit random
/// distinct strips, specialize F onto each, and return the first rational
/// zero found. A specialization that vanishes identically counts as found
/// (the zero's last coordinate is then uniform over F_q); failure is only
/// reported after exhausting all q^{r-1} strips or the configured cap.
SvsResult svs_run(const MultiPoly& f, const FieldCtx& ctx, Rng& rng,
                  const SvsOptions& options = {});

/// Same algorithm with the strip order fixed by the caller; the returned
/// search count is then the random variable C_a(F). Throws
/// DuplicateStripsError.
SvsResult svs_run_with_strips(const MultiPoly& f, const StripSequence& seq,
                              const FieldCtx& ctx, Rng& rng,
                              const SvsOptions& options = {});

}  // namespace svs
