#include "svs/roots.hpp"

#include <algorithm>

namespace svs {
namespace {

// T as a polynomial
UniPoly poly_t(const FieldCtx& ctx) {
  return UniPoly({ctx.zero(), ctx.one()});
}

// trace polynomial sum_{i<k} (cT)^{2^i} mod g, for q = 2^k
UniPoly trace_poly_mod(Elem c, const UniPoly& g, const FieldCtx& ctx) {
  UniPoly term = uni_mod(UniPoly({ctx.zero(), c}), g, ctx);
  UniPoly acc = term;
  for (unsigned i = 1; i < ctx.k(); ++i) {
    term = uni_mulmod(term, term, g, ctx);
    acc = uni_add(acc, term, ctx);
  }
  return acc;
}

// g monic, squarefree, product of distinct linear factors; collects roots
void split_linear(const UniPoly& g, const FieldCtx& ctx, Rng& rng,
                  std::vector<Elem>& out, std::uint64_t& budget) {
  const int deg = g.degree();
  if (deg <= 0) return;
  if (deg == 1) {
    out.push_back(ctx.neg(g.coeff(0)));
    return;
  }
  while (true) {
    if (budget-- == 0)
      throw Error("equal-degree splitting failed to converge");
    UniPoly splitter;
    if (ctx.p() == 2) {
      const Elem c = ctx.sample(rng);
      if (c.idx == 0) continue;
      splitter = trace_poly_mod(c, g, ctx);
    } else {
      const Elem delta = ctx.sample(rng);
      UniPoly shifted({delta, ctx.one()});
      splitter = uni_sub(uni_powmod(shifted, (ctx.q() - 1) / 2, g, ctx),
                         UniPoly({ctx.one()}), ctx);
    }
    UniPoly w = uni_gcd(g, splitter, ctx);
    if (w.degree() <= 0 || w.degree() >= deg) continue;  // degenerate, retry
    const UniPoly rest = uni_divmod(g, w, ctx).first;
    split_linear(w, ctx, rng, out, budget);
    split_linear(rest, ctx, rng, out, budget);
    return;
  }
}

}  // namespace

UniPoly frobenius_gcd(const UniPoly& f, const FieldCtx& ctx) {
  if (f.is_zero()) return UniPoly();
  if (f.degree() == 0) return UniPoly({ctx.one()});
  if (f.degree() == 1) return uni_monic(f, ctx);
  // gcd(f, T^q - T) via T^q mod f
  const UniPoly tq = uni_powmod(poly_t(ctx), ctx.q(), f, ctx);
  return uni_gcd(f, uni_sub(tq, poly_t(ctx), ctx), ctx);
}

RootSet all_roots_scan(const UniPoly& f, const FieldCtx& ctx) {
  if (f.is_zero()) return RootSet{{}, true};
  RootSet rs;
  for (std::uint64_t t = 0; t < ctx.q(); ++t) {
    if (uni_eval(f, Elem{t}, ctx).idx == 0) rs.roots.push_back(Elem{t});
  }
  return rs;
}

RootSet all_roots(const UniPoly& f, const FieldCtx& ctx, Rng& rng,
                  RootStrategy strategy) {
  if (f.is_zero()) return RootSet{{}, true};
  if (strategy == RootStrategy::kScan ||
      (strategy == RootStrategy::kAuto && ctx.q() <= kRootScanMax)) {
    return all_roots_scan(f, ctx);
  }
  const UniPoly g = frobenius_gcd(f, ctx);
  RootSet rs;
  if (g.degree() <= 0) return rs;
  std::uint64_t budget = 64ull * static_cast<std::uint64_t>(g.degree());
  split_linear(g, ctx, rng, rs.roots, budget);
  std::sort(rs.roots.begin(), rs.roots.end());
  return rs;
}

std::optional<Elem> sample_root(const UniPoly& f, const FieldCtx& ctx,
                                Rng& rng, RootStrategy strategy) {
  const RootSet rs = all_roots(f, ctx, rng, strategy);
  if (rs.full_line) return ctx.sample(rng);
  if (rs.roots.empty()) return std::nullopt;
  return rs.roots[uniform_below(rng, rs.roots.size())];
}

}  // namespace svs
