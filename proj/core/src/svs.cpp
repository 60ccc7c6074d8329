#include "svs/svs.hpp"

#include <numeric>

namespace svs {
namespace {

std::uint64_t pow_saturating(std::uint64_t base, unsigned e, bool& saturated) {
  constexpr std::uint64_t kCap = 1ull << 63;
  std::uint64_t out = 1;
  saturated = false;
  for (unsigned i = 0; i < e; ++i) {
    if (out > kCap / base) {
      saturated = true;
      return kCap;
    }
    out *= base;
  }
  return out;
}

struct StripSearch {
  bool found = false;
  std::uint64_t roots_found = 0;
  Elem root{0};
};

StripSearch search_strip(const MultiPoly& f, const Strip& a,
                         const FieldCtx& ctx, Rng& rng,
                         const SvsOptions& options) {
  StripSearch out;
  const UniPoly spec = specialize(f, a, ctx);
  if (spec.is_zero()) {
    // F(a, X_r) = 0: the whole strip consists of zeros
    out.found = true;
    out.roots_found = ctx.q();
    out.root = ctx.sample(rng);
    return out;
  }
  const RootSet rs = all_roots(spec, ctx, rng, options.root_strategy);
  if (rs.roots.empty()) return out;
  out.found = true;
  out.roots_found = rs.roots.size();
  out.root = rs.roots[uniform_below(rng, rs.roots.size())];
  return out;
}

template <typename NextStrip>
SvsResult run_impl(const MultiPoly& f, const FieldCtx& ctx, Rng& rng,
                   const SvsOptions& options, std::uint64_t strip_budget,
                   NextStrip&& next_strip) {
  SvsResult result;
  OpCounter counter;
  FieldCtx counted = ctx;
  if (options.count_ops) counted.attach_counter(&counter);

  for (std::uint64_t i = 0; i < strip_budget; ++i) {
    Strip a = next_strip(i);
    const StripSearch hit = search_strip(f, a, counted, rng, options);
    ++result.searches;
    if (options.record_trace)
      result.trace.push_back(TraceEntry{a, hit.roots_found});
    if (hit.found) {
      result.found = true;
      result.zero = std::move(a.coords);
      result.zero.push_back(hit.root);
      break;
    }
  }
  if (options.count_ops) result.ops_used = counter;
  return result;
}

}  // namespace

StripSampler::StripSampler(const FieldCtx& ctx, unsigned r, Rng& rng)
    : ctx_(ctx), r_(r), rng_(rng) {
  if (r < 2) throw InvalidArgument("strip sampler needs r >= 2");
  space_size_ = pow_saturating(ctx.q(), r - 1, saturated_);
  if (!saturated_ && space_size_ <= kShuffleMax) {
    perm_.resize(space_size_);
    std::iota(perm_.begin(), perm_.end(), 0ull);
  }
}

std::uint64_t StripSampler::next_index() {
  if (!saturated_ && emitted_ >= space_size_)
    throw ExhaustedError("all strips have been emitted");
  if (!perm_.empty()) {
    // incremental Fisher-Yates: position emitted_ swaps with a uniform
    // later position, so the prefix is a uniform partial permutation
    const std::uint64_t j =
        emitted_ + uniform_below(rng_, space_size_ - emitted_);
    std::swap(perm_[emitted_], perm_[j]);
    return perm_[emitted_++];
  }
  while (true) {
    std::uint64_t candidate = 0;
    for (unsigned i = 0; i + 1 < r_; ++i) {
      candidate = candidate * ctx_.q() + ctx_.sample(rng_).idx;
    }
    if (used_.insert(candidate).second) {
      ++emitted_;
      return candidate;
    }
  }
}

Strip StripSampler::next() {
  return strip_from_index(next_index(), ctx_.q(), r_);
}

SvsResult svs_run(const MultiPoly& f, const FieldCtx& ctx, Rng& rng,
                  const SvsOptions& options) {
  StripSampler sampler(ctx, f.r(), rng);
  std::uint64_t budget = sampler.space_size();
  if (options.max_strips) budget = std::min(budget, *options.max_strips);
  return run_impl(f, ctx, rng, options, budget,
                  [&](std::uint64_t) { return sampler.next(); });
}

SvsResult svs_run_with_strips(const MultiPoly& f, const StripSequence& seq,
                              const FieldCtx& ctx, Rng& rng,
                              const SvsOptions& options) {
  std::unordered_set<std::uint64_t> seen;
  for (const Strip& a : seq.strips) {
    if (a.coords.size() + 1 != f.r())
      throw DimensionMismatchError("strip dimension != r - 1");
    if (!seen.insert(strip_to_index(a, ctx.q())).second)
      throw DuplicateStripsError("strip sequence has a repeated strip");
  }
  std::uint64_t budget = seq.strips.size();
  if (options.max_strips) budget = std::min(budget, *options.max_strips);
  return run_impl(f, ctx, rng, options, budget,
                  [&](std::uint64_t i) { return seq.strips[i]; });
}

}  // namespace svs
