#include "svs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "svs/analytics.hpp"

namespace svs::oracle {
namespace {

using u64 = std::uint64_t;

// head monomial values for every strip of F_q^{r-1}, strip-index major
struct StripTable {
  u64 strip_count = 0;
  std::size_t head_size = 0;
  std::vector<Elem> values;

  std::span<const Elem> row(u64 strip_index) const {
    return {values.data() + strip_index * head_size, head_size};
  }
};

StripTable make_strip_table(const MonomialBasis& basis, const FieldCtx& ctx) {
  StripTable table;
  table.head_size = basis.head_size();
  u64 count = 1;
  for (unsigned i = 0; i + 1 < basis.r(); ++i) count *= ctx.q();
  table.strip_count = count;
  table.values.resize(count * table.head_size);
  for (u64 s = 0; s < count; ++s) {
    const Strip a = strip_from_index(s, ctx.q(), basis.r());
    strip_head_values(basis, a.coords, ctx,
                      {table.values.data() + s * table.head_size,
                       table.head_size});
  }
  return table;
}

// number of roots of the specialized polynomial held in spec (d+1 slots)
u64 count_roots(std::span<const Elem> spec, const FieldCtx& ctx) {
  bool zero_poly = true;
  for (const Elem c : spec) {
    if (c.idx != 0) {
      zero_poly = false;
      break;
    }
  }
  if (zero_poly) return ctx.q();
  u64 count = 0;
  for (u64 t = 0; t < ctx.q(); ++t) {
    Elem acc = ctx.zero();
    for (std::size_t i = spec.size(); i-- > 0;)
      acc = ctx.add(ctx.mul(acc, Elem{t}), spec[i]);
    if (acc.idx == 0) ++count;
  }
  return count;
}

bool has_root(std::span<const Elem> spec, const FieldCtx& ctx) {
  bool zero_poly = true;
  for (const Elem c : spec) {
    if (c.idx != 0) {
      zero_poly = false;
      break;
    }
  }
  if (zero_poly) return true;
  for (u64 t = 0; t < ctx.q(); ++t) {
    Elem acc = ctx.zero();
    for (std::size_t i = spec.size(); i-- > 0;)
      acc = ctx.add(ctx.mul(acc, Elem{t}), spec[i]);
    if (acc.idx == 0) return true;
  }
  return false;
}

BigInt poly_space_size(const FieldCtx& ctx, unsigned r, unsigned d) {
  return pow_bigint(BigInt(ctx.q()), dim_f(r, d));
}

// monomial values of the full basis(vars, deg) at a point
std::vector<Elem> monomial_values(const MonomialBasis& basis,
                                  std::span<const Elem> point,
                                  const FieldCtx& ctx) {
  std::vector<Elem> out(basis.size());
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const auto exps = basis.exponents(m);
    Elem value = ctx.one();
    for (std::size_t v = 0; v < exps.size(); ++v)
      value = ctx.mul(value, ctx.pow(point[v], exps[v]));
    out[m] = value;
  }
  return out;
}

}  // namespace

void EnumGuard::check(const BigInt& states, const char* what) const {
  if (states > BigInt(max_states)) {
    throw GuardExceeded(std::string(what) + " needs " + states.str() +
                        " states, over the guard of " +
                        std::to_string(max_states));
  }
}

std::vector<std::vector<Elem>> zero_set(const MultiPoly& f,
                                        const FieldCtx& ctx,
                                        const EnumGuard& guard) {
  const unsigned r = f.r();
  guard.check(pow_bigint(BigInt(ctx.q()), r), "zero_set");
  const StripTable table = make_strip_table(f.basis(), ctx);
  std::vector<Elem> spec(f.d() + 1);
  std::vector<std::vector<Elem>> zeros;
  for (u64 s = 0; s < table.strip_count; ++s) {
    specialize_into(f, table.row(s), ctx, spec);
    const Strip a = strip_from_index(s, ctx.q(), r);
    for (u64 t = 0; t < ctx.q(); ++t) {
      Elem acc = ctx.zero();
      for (std::size_t i = spec.size(); i-- > 0;)
        acc = ctx.add(ctx.mul(acc, Elem{t}), spec[i]);
      if (acc.idx == 0) {
        std::vector<Elem> point = a.coords;
        point.push_back(Elem{t});
        zeros.push_back(std::move(point));
      }
    }
  }
  return zeros;
}

std::uint64_t n_of(const MultiPoly& f, const FieldCtx& ctx,
                   const EnumGuard& guard) {
  return zero_set(f, ctx, guard).size();
}

std::vector<Strip> vs_of(const MultiPoly& f, const FieldCtx& ctx,
                         const EnumGuard& guard) {
  guard.check(pow_bigint(BigInt(ctx.q()), f.r()), "vs_of");
  const StripTable table = make_strip_table(f.basis(), ctx);
  std::vector<Elem> spec(f.d() + 1);
  std::vector<Strip> out;
  for (u64 s = 0; s < table.strip_count; ++s) {
    specialize_into(f, table.row(s), ctx, spec);
    if (has_root(spec, ctx)) out.push_back(strip_from_index(s, ctx.q(), f.r()));
  }
  return out;
}

std::uint64_t ns_of(const MultiPoly& f, const FieldCtx& ctx,
                    const EnumGuard& guard) {
  return vs_of(f, ctx, guard).size();
}

std::uint64_t n_strip(const MultiPoly& f, const Strip& a,
                      const FieldCtx& ctx) {
  const UniPoly spec = specialize(f, a, ctx);
  if (spec.is_zero()) return ctx.q();
  u64 count = 0;
  for (u64 t = 0; t < ctx.q(); ++t) {
    if (uni_eval(spec, Elem{t}, ctx).idx == 0) ++count;
  }
  return count;
}

std::uint64_t value_set_card(const UniPoly& f, const FieldCtx& ctx,
                             const EnumGuard& guard) {
  guard.check(BigInt(ctx.q()), "value_set_card");
  std::vector<bool> hit(ctx.q(), false);
  u64 count = 0;
  for (u64 t = 0; t < ctx.q(); ++t) {
    const Elem v = uni_eval(f, Elem{t}, ctx);
    if (!hit[v.idx]) {
      hit[v.idx] = true;
      ++count;
    }
  }
  return count;
}

namespace {

// f_b = prefix-high coefficients + free low part b; visits every b
template <typename Fn>
void for_each_family_member(const FieldCtx& ctx, unsigned d, unsigned j,
                            std::span<const Elem> prefix, Fn&& fn) {
  std::vector<Elem> coeffs(d + 1, Elem{0});
  for (unsigned i = 0; i < j; ++i) coeffs[d - i] = prefix[i];
  const unsigned free_len = d + 1 - j;
  while (true) {
    fn(coeffs);
    unsigned pos = 0;
    for (; pos < free_len; ++pos) {
      const u64 next = coeffs[pos].idx + 1;
      if (next < ctx.q()) {
        coeffs[pos] = Elem{next};
        break;
      }
      coeffs[pos] = Elem{0};
    }
    if (pos == free_len) break;
  }
}

u64 value_set_of_coeffs(std::span<const Elem> coeffs, const FieldCtx& ctx,
                        std::vector<bool>& hit) {
  std::fill(hit.begin(), hit.end(), false);
  u64 count = 0;
  for (u64 t = 0; t < ctx.q(); ++t) {
    Elem acc = ctx.zero();
    for (std::size_t i = coeffs.size(); i-- > 0;)
      acc = ctx.add(ctx.mul(acc, Elem{t}), coeffs[i]);
    if (!hit[acc.idx]) {
      hit[acc.idx] = true;
      ++count;
    }
  }
  return count;
}

void check_family_args(const FieldCtx& ctx, unsigned d, unsigned j,
                       std::span<const Elem> prefix) {
  if (j < 1 || j > d)
    throw InvalidArgument("family needs 1 <= j <= d");
  if (prefix.size() != j)
    throw DimensionMismatchError("prefix must fix exactly j coefficients");
  if (prefix[0].idx == 0)
    throw ZeroLeadingError("family leading coefficient a_d must be nonzero");
  for (const Elem c : prefix) {
    if (c.idx >= ctx.q()) throw OutOfRangeError("prefix coefficient");
  }
}

}  // namespace

Rational avg_value_set(const FieldCtx& ctx, unsigned d, unsigned j,
                       std::span<const Elem> prefix, const EnumGuard& guard) {
  check_family_args(ctx, d, j, prefix);
  guard.check(pow_bigint(BigInt(ctx.q()), d + 1 - j) * ctx.q(),
              "avg_value_set");
  BigInt total = 0;
  std::vector<bool> hit(ctx.q());
  for_each_family_member(ctx, d, j, prefix,
                         [&](std::span<const Elem> coeffs) {
                           total += value_set_of_coeffs(coeffs, ctx, hit);
                         });
  return Rational(total, pow_bigint(BigInt(ctx.q()), d + 1 - j));
}

SampledAverage avg_value_set_sampled(const FieldCtx& ctx, unsigned d,
                                     unsigned j, std::span<const Elem> prefix,
                                     std::uint64_t samples, Rng& rng) {
  check_family_args(ctx, d, j, prefix);
  if (samples < 2) throw InvalidArgument("need at least 2 samples");
  std::vector<Elem> coeffs(d + 1, Elem{0});
  for (unsigned i = 0; i < j; ++i) coeffs[d - i] = prefix[i];
  std::vector<bool> hit(ctx.q());
  double sum = 0, sum_sq = 0;
  for (u64 n = 0; n < samples; ++n) {
    for (unsigned i = 0; i + j <= d; ++i) coeffs[i] = ctx.sample(rng);
    const auto v = static_cast<double>(value_set_of_coeffs(coeffs, ctx, hit));
    sum += v;
    sum_sq += v * v;
  }
  SampledAverage out;
  out.samples = samples;
  out.mean = sum / static_cast<double>(samples);
  const double var =
      (sum_sq - sum * sum / static_cast<double>(samples)) /
      (static_cast<double>(samples) - 1.0);
  out.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
  return out;
}

Rational enumerate_prob_c1(const FieldCtx& ctx, unsigned r, unsigned d,
                           const EnumGuard& guard) {
  guard.check(poly_space_size(ctx, r, d), "enumerate_prob_c1");
  auto basis = make_basis(r, d);
  const StripTable table = make_strip_table(*basis, ctx);
  std::vector<Elem> spec(d + 1);
  BigInt total_ns = 0;
  for_each_poly(ctx, basis, [&](const MultiPoly& f) {
    u64 ns = 0;
    for (u64 s = 0; s < table.strip_count; ++s) {
      specialize_into(f, table.row(s), ctx, spec);
      if (has_root(spec, ctx)) ++ns;
    }
    total_ns += ns;
  });
  return Rational(total_ns,
                  BigInt(table.strip_count) * poly_space_size(ctx, r, d));
}

std::vector<Rational> enumerate_prob_cs(const FieldCtx& ctx, unsigned r,
                                        unsigned d,
                                        const std::vector<Strip>& strips,
                                        const EnumGuard& guard) {
  guard.check(poly_space_size(ctx, r, d), "enumerate_prob_cs");
  auto basis = make_basis(r, d);
  std::vector<std::vector<Elem>> head_values;
  for (const Strip& a : strips) {
    std::vector<Elem> row(basis->head_size());
    strip_head_values(*basis, a.coords, ctx, row);
    head_values.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < strips.size(); ++i) {
    for (std::size_t l = i + 1; l < strips.size(); ++l) {
      if (strips[i] == strips[l])
        throw InvalidArgument("enumerate_prob_cs needs distinct strips");
    }
  }
  std::vector<BigInt> counts(strips.size(), 0);
  std::vector<Elem> spec(d + 1);
  for_each_poly(ctx, basis, [&](const MultiPoly& f) {
    for (std::size_t i = 0; i < strips.size(); ++i) {
      specialize_into(f, head_values[i], ctx, spec);
      if (has_root(spec, ctx)) {
        counts[i] += 1;
        break;
      }
    }
  });
  const BigInt space = poly_space_size(ctx, r, d);
  std::vector<Rational> out;
  out.reserve(counts.size());
  for (const BigInt& c : counts) out.emplace_back(c, space);
  return out;
}

std::uint64_t matrix_rank(std::vector<std::vector<Elem>> rows,
                          const FieldCtx& ctx) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].idx == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Elem scale = ctx.inv(rows[rank][col]);
    for (std::size_t c = col; c < cols; ++c)
      rows[rank][c] = ctx.mul(rows[rank][c], scale);
    for (std::size_t row = 0; row < rows.size(); ++row) {
      if (row == rank || rows[row][col].idx == 0) continue;
      const Elem factor = rows[row][col];
      for (std::size_t c = col; c < cols; ++c)
        rows[row][c] =
            ctx.sub(rows[row][c], ctx.mul(factor, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

bool vandermonde_generic(const std::vector<Strip>& strips, unsigned r,
                         unsigned d, const FieldCtx& ctx) {
  const std::size_t s = strips.size();
  if (s == 0) throw InvalidArgument("need at least one strip");
  if (s > dim_f(r, d))
    throw InvalidArgument("genericity is defined for s <= D_d");
  const unsigned ks = analytics::kappa(s, r);
  for (unsigned j = 1; j <= ks; ++j) {
    MonomialBasis basis(r - 1, j);
    std::vector<std::vector<Elem>> rows;
    rows.reserve(s);
    for (const Strip& a : strips)
      rows.push_back(monomial_values(basis, a.coords, ctx));
    const u64 expected = std::min<u64>(basis.size(), s);
    if (matrix_rank(std::move(rows), ctx) != expected) return false;
  }
  return true;
}

std::uint64_t phi_matrix_rank(const std::vector<Strip>& strips, unsigned r,
                              unsigned d, const FieldCtx& ctx) {
  const std::size_t s = strips.size();
  if (s == 0) throw InvalidArgument("need at least one strip");
  MonomialBasis basis(r, d);
  const std::size_t dim = basis.size();
  std::vector<std::vector<Elem>> rows;
  rows.reserve(s * (d + 1));
  std::vector<Elem> head(basis.head_size());
  for (const Strip& a : strips) {
    strip_head_values(basis, a.coords, ctx, head);
    for (unsigned t = 0; t <= d; ++t) {
      std::vector<Elem> row(dim, Elem{0});
      for (std::size_t m = 0; m < dim; ++m) {
        if (basis.tail_exp(m) == t) row[m] = head[basis.head_index(m)];
      }
      rows.push_back(std::move(row));
    }
  }
  return matrix_rank(std::move(rows), ctx);
}

double exact_entropy(const MultiPoly& f, const FieldCtx& ctx,
                     const EnumGuard& guard) {
  guard.check(pow_bigint(BigInt(ctx.q()), f.r()), "exact_entropy");
  const StripTable table = make_strip_table(f.basis(), ctx);
  std::vector<Elem> spec(f.d() + 1);
  std::vector<u64> per_strip(table.strip_count, 0);
  u64 ns = 0;
  for (u64 s = 0; s < table.strip_count; ++s) {
    specialize_into(f, table.row(s), ctx, spec);
    per_strip[s] = count_roots(spec, ctx);
    if (per_strip[s] > 0) ++ns;
  }
  if (ns == 0) return 0.0;
  // each zero (a, x) contributes log(NS * N_a)/(NS * N_a); the N_a zeros of
  // a strip share the same probability
  double h = 0.0;
  for (u64 s = 0; s < table.strip_count; ++s) {
    if (per_strip[s] == 0) continue;
    h += std::log(static_cast<double>(ns) *
                  static_cast<double>(per_strip[s])) /
         static_cast<double>(ns);
  }
  return h;
}

double exact_avg_entropy(const FieldCtx& ctx, unsigned r, unsigned d,
                         const EnumGuard& guard) {
  guard.check(poly_space_size(ctx, r, d) * pow_bigint(BigInt(ctx.q()), r),
              "exact_avg_entropy");
  auto basis = make_basis(r, d);
  double total = 0.0;
  u64 count = 0;
  for_each_poly(ctx, basis, [&](const MultiPoly& f) {
    total += exact_entropy(f, ctx, guard);
    ++count;
  });
  return total / static_cast<double>(count);
}

namespace {

std::pair<Rational, Rational> ns_moments(const FieldCtx& ctx, unsigned r,
                                         unsigned d, const EnumGuard& guard) {
  guard.check(poly_space_size(ctx, r, d), "ns moments");
  auto basis = make_basis(r, d);
  const StripTable table = make_strip_table(*basis, ctx);
  std::vector<Elem> spec(d + 1);
  BigInt sum = 0, sum_sq = 0;
  for_each_poly(ctx, basis, [&](const MultiPoly& f) {
    u64 ns = 0;
    for (u64 s = 0; s < table.strip_count; ++s) {
      specialize_into(f, table.row(s), ctx, spec);
      if (has_root(spec, ctx)) ++ns;
    }
    sum += ns;
    sum_sq += BigInt(ns) * ns;
  });
  const BigInt space = poly_space_size(ctx, r, d);
  return {Rational(sum, space), Rational(sum_sq, space)};
}

}  // namespace

Rational mean_ns(const FieldCtx& ctx, unsigned r, unsigned d,
                 const EnumGuard& guard) {
  return ns_moments(ctx, r, d, guard).first;
}

Rational var_ns(const FieldCtx& ctx, unsigned r, unsigned d,
                const EnumGuard& guard) {
  const auto [mean, second] = ns_moments(ctx, r, d, guard);
  return second - mean * mean;
}

}  // namespace svs::oracle
