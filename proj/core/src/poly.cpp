#include "svs/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace svs {
namespace {

// grade first, ties by exponent of the last variable, then the one before,
// and so on; this realizes lex tie-breaking with X_1 < X_2 < ... < X_r
bool graded_lex_less(const std::vector<unsigned>& a,
                     const std::vector<unsigned>& b) {
  const unsigned ga = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned gb = std::accumulate(b.begin(), b.end(), 0u);
  if (ga != gb) return ga < gb;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<std::vector<unsigned>> enumerate_monomials(unsigned r,
                                                       unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(r, 0);
  while (true) {
    out.push_back(e);
    // odometer over exponent vectors with total degree <= d
    std::size_t pos = 0;
    for (; pos < r; ++pos) {
      const unsigned total = std::accumulate(e.begin(), e.end(), 0u);
      if (total < d) {
        ++e[pos];
        break;
      }
      e[pos] = 0;
    }
    if (pos == r) break;
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

constexpr std::size_t kMaxBasisSize = std::size_t{1} << 24;

}  // namespace

BigInt dim_f_exact(unsigned r, unsigned d) {
  return binomial(static_cast<std::uint64_t>(d) + r, r);
}

std::uint64_t dim_f(unsigned r, unsigned d) {
  const BigInt exact = dim_f_exact(r, d);
  if (exact >= (BigInt(1) << 63)) {
    throw OverflowError("dim F_{r,d} = " + exact.str() +
                        " exceeds the platform integer width");
  }
  return exact.convert_to<std::uint64_t>();
}

MonomialBasis::MonomialBasis(unsigned r, unsigned d) : r_(r), d_(d) {
  if (r < 1) throw InvalidArgument("monomial basis needs r >= 1");
  const BigInt dim = dim_f_exact(r, d);
  if (dim > BigInt(kMaxBasisSize))
    throw OverflowError("monomial basis of size " + dim.str() +
                        " is too large to materialize");
  size_ = dim.convert_to<std::size_t>();

  auto full = enumerate_monomials(r, d);
  head_exps_ = r == 1 ? std::vector<std::vector<unsigned>>{{}}
                      : enumerate_monomials(r - 1, d);
  std::map<std::vector<unsigned>, std::uint32_t> head_rank;
  for (std::size_t h = 0; h < head_exps_.size(); ++h)
    head_rank[head_exps_[h]] = static_cast<std::uint32_t>(h);

  head_of_.resize(size_);
  tail_of_.resize(size_);
  for (std::size_t m = 0; m < size_; ++m) {
    std::vector<unsigned> head(full[m].begin(), full[m].end() - 1);
    head_of_[m] = head_rank.at(head);
    tail_of_[m] = full[m].back();
  }
  full_ = std::move(full);
  for (std::size_t m = 0; m < size_; ++m)
    rank_of_[full_[m]] = m;
}

std::size_t MonomialBasis::rank(std::span<const unsigned> exponents) const {
  if (exponents.size() != r_)
    throw DimensionMismatchError("exponent vector must have length r");
  std::vector<unsigned> key(exponents.begin(), exponents.end());
  auto it = rank_of_.find(key);
  if (it == rank_of_.end())
    throw OutOfRangeError("monomial of total degree > d");
  return it->second;
}

std::vector<unsigned> MonomialBasis::exponents(std::size_t rank) const {
  if (rank >= size_) throw OutOfRangeError("monomial rank out of range");
  return full_[rank];
}

std::uint64_t strip_to_index(const Strip& a, std::uint64_t q) {
  std::uint64_t index = 0;
  for (std::size_t i = a.coords.size(); i-- > 0;)
    index = index * q + a.coords[i].idx;
  return index;
}

Strip strip_from_index(std::uint64_t index, std::uint64_t q, unsigned r) {
  Strip a;
  a.coords.resize(r - 1);
  for (unsigned i = 0; i + 1 < r; ++i) {
    a.coords[i] = Elem{index % q};
    index /= q;
  }
  return a;
}

MultiPoly::MultiPoly(BasisPtr basis, std::vector<Elem> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_->size())
    throw DimensionMismatchError("coefficient vector length != dim F_{r,d}");
}

MultiPoly MultiPoly::zero(BasisPtr basis) {
  std::vector<Elem> coeffs(basis->size(), Elem{0});
  return MultiPoly(std::move(basis), std::move(coeffs));
}

bool MultiPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](Elem c) { return c.idx == 0; });
}

MultiPoly sample_poly(const FieldCtx& ctx, BasisPtr basis, Rng& rng) {
  std::vector<Elem> coeffs(basis->size());
  for (Elem& c : coeffs) c = ctx.sample(rng);
  return MultiPoly(std::move(basis), std::move(coeffs));
}

Elem eval(const MultiPoly& f, std::span<const Elem> x, const FieldCtx& ctx) {
  const MonomialBasis& basis = f.basis();
  const unsigned r = basis.r(), d = basis.d();
  if (x.size() != r)
    throw DimensionMismatchError("point dimension != number of variables");
  // power tables x_v^e for e <= d
  std::vector<Elem> pows(static_cast<std::size_t>(r) * (d + 1));
  for (unsigned v = 0; v < r; ++v) {
    pows[v * (d + 1)] = ctx.one();
    for (unsigned e = 1; e <= d; ++e)
      pows[v * (d + 1) + e] = ctx.mul(pows[v * (d + 1) + e - 1], x[v]);
  }
  Elem acc = ctx.zero();
  for (std::size_t m = 0; m < basis.size(); ++m) {
    Elem c = f.coeff(m);
    if (c.idx == 0) continue;
    const auto exps = basis.exponents(m);
    Elem term = c;
    for (unsigned v = 0; v < r; ++v) {
      if (exps[v] != 0) term = ctx.mul(term, pows[v * (d + 1) + exps[v]]);
    }
    acc = ctx.add(acc, term);
  }
  return acc;
}

void strip_head_values(const MonomialBasis& basis, std::span<const Elem> a,
                       const FieldCtx& ctx, std::span<Elem> out) {
  const unsigned r = basis.r(), d = basis.d();
  if (a.size() + 1 != r)
    throw DimensionMismatchError("strip dimension != r - 1");
  if (out.size() < basis.head_size())
    throw DimensionMismatchError("head value buffer too small");
  if (r == 1) {
    out[0] = ctx.one();
    return;
  }
  std::vector<Elem> pows(static_cast<std::size_t>(r - 1) * (d + 1));
  for (unsigned v = 0; v + 1 < r; ++v) {
    pows[v * (d + 1)] = ctx.one();
    for (unsigned e = 1; e <= d; ++e)
      pows[v * (d + 1) + e] = ctx.mul(pows[v * (d + 1) + e - 1], a[v]);
  }
  for (std::size_t h = 0; h < basis.head_size(); ++h) {
    const auto exps = basis.head_exponents(h);
    Elem value = ctx.one();
    for (unsigned v = 0; v + 1 < r; ++v) {
      if (exps[v] != 0) value = ctx.mul(value, pows[v * (d + 1) + exps[v]]);
    }
    out[h] = value;
  }
}

void specialize_into(const MultiPoly& f, std::span<const Elem> head_values,
                     const FieldCtx& ctx, std::span<Elem> out) {
  const MonomialBasis& basis = f.basis();
  const unsigned d = basis.d();
  if (out.size() < static_cast<std::size_t>(d) + 1)
    throw DimensionMismatchError("output buffer needs d + 1 slots");
  for (unsigned i = 0; i <= d; ++i) out[i] = ctx.zero();
  const auto coeffs = f.coeffs();
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const Elem c = coeffs[m];
    if (c.idx == 0) continue;
    Elem& slot = out[basis.tail_exp(m)];
    slot = ctx.add(slot, ctx.mul(c, head_values[basis.head_index(m)]));
  }
}

UniPoly specialize(const MultiPoly& f, const Strip& a, const FieldCtx& ctx) {
  const MonomialBasis& basis = f.basis();
  std::vector<Elem> head_values(basis.head_size());
  strip_head_values(basis, a.coords, ctx, head_values);
  std::vector<Elem> out(basis.d() + 1);
  specialize_into(f, head_values, ctx, out);
  return UniPoly(std::move(out));
}

Elem uni_eval(const UniPoly& f, Elem t, const FieldCtx& ctx) {
  Elem acc = ctx.zero();
  const auto coeffs = f.coeffs();
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = ctx.add(ctx.mul(acc, t), coeffs[i]);
  return acc;
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b, const FieldCtx& ctx) {
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = ctx.add(a.coeff(i), b.coeff(i));
  return UniPoly(std::move(out));
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b, const FieldCtx& ctx) {
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = ctx.sub(a.coeff(i), b.coeff(i));
  return UniPoly(std::move(out));
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b, const FieldCtx& ctx) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Elem> out(a.coeffs().size() + b.coeffs().size() - 1, Elem{0});
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].idx == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] = ctx.add(out[i + j], ctx.mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return UniPoly(std::move(out));
}

UniPoly uni_monic(const UniPoly& f, const FieldCtx& ctx) {
  if (f.is_zero() || f.leading() == ctx.one()) return f;
  const Elem s = ctx.inv(f.leading());
  std::vector<Elem> out(f.coeffs().begin(), f.coeffs().end());
  for (Elem& c : out) c = ctx.mul(c, s);
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& f, const UniPoly& g,
                                       const FieldCtx& ctx) {
  if (g.is_zero()) throw ZeroModulusError("division by the zero polynomial");
  if (f.degree() < g.degree()) return {UniPoly(), f};
  const Elem lead_inv = ctx.inv(g.leading());
  std::vector<Elem> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Elem> quot(f.degree() - g.degree() + 1, Elem{0});
  const auto dg = static_cast<std::size_t>(g.degree());
  for (std::size_t i = rem.size(); i-- > dg;) {
    const Elem c = ctx.mul(rem[i], lead_inv);
    if (c.idx == 0) continue;
    quot[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j)
      rem[i - dg + j] = ctx.sub(rem[i - dg + j], ctx.mul(c, g.coeffs()[j]));
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly uni_mod(const UniPoly& f, const UniPoly& g, const FieldCtx& ctx) {
  return uni_divmod(f, g, ctx).second;
}

UniPoly uni_mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m,
                   const FieldCtx& ctx) {
  if (m.is_zero()) throw ZeroModulusError("mulmod with zero modulus");
  return uni_mod(uni_mul(a, b, ctx), m, ctx);
}

UniPoly uni_powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m,
                   const FieldCtx& ctx) {
  if (m.is_zero()) throw ZeroModulusError("powmod with zero modulus");
  UniPoly result = uni_mod(UniPoly({ctx.one()}), m, ctx);
  UniPoly b = uni_mod(base, m, ctx);
  while (e != 0) {
    if (e & 1) result = uni_mulmod(result, b, m, ctx);
    b = uni_mulmod(b, b, m, ctx);
    e >>= 1;
  }
  return result;
}

UniPoly uni_gcd(UniPoly a, UniPoly b, const FieldCtx& ctx) {
  while (!b.is_zero()) {
    UniPoly r = uni_mod(a, b, ctx);
    a = std::move(b);
    b = std::move(r);
  }
  return uni_monic(a, ctx);
}

}  // namespace svs
