#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "svs/poly.hpp"
#include "svs/rational.hpp"
#include "svs/rng.hpp"

namespace svs::oracle {

/// Cap on enumeration size; every exhaustive operation checks its state
/// count (q^dim or q^r as appropriate) against the guard before starting.
struct EnumGuard {
  std::uint64_t max_states = 1ull << 30;
  void check(const BigInt& states, const char* what) const;
};

/// Exact zero set Z(F) by scanning F_q^r; points in strip-major order.
std::vector<std::vector<Elem>> zero_set(const MultiPoly& f,
                                        const FieldCtx& ctx,
                                        const EnumGuard& guard = {});
std::uint64_t n_of(const MultiPoly& f, const FieldCtx& ctx,
                   const EnumGuard& guard = {});

/// Strips on which F has at least one rational zero.
std::vector<Strip> vs_of(const MultiPoly& f, const FieldCtx& ctx,
                         const EnumGuard& guard = {});
std::uint64_t ns_of(const MultiPoly& f, const FieldCtx& ctx,
                    const EnumGuard& guard = {});
/// Number of zeros of F on the strip a.
std::uint64_t n_strip(const MultiPoly& f, const Strip& a,
                      const FieldCtx& ctx);

/// |{f(c) : c in F_q}|.
std::uint64_t value_set_card(const UniPoly& f, const FieldCtx& ctx,
                             const EnumGuard& guard = {});

/// Exact average of the value-set size over the family of degree-d
/// polynomials whose j highest coefficients are fixed to prefix
/// (a_d, ..., a_{d-j+1}), a_d != 0. Enumerates q^{d+1-j} members.
Rational avg_value_set(const FieldCtx& ctx, unsigned d, unsigned j,
                       std::span<const Elem> prefix,
                       const EnumGuard& guard = {});

struct SampledAverage {
  double mean = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
};
/// Monte Carlo fallback for families too large to enumerate.
SampledAverage avg_value_set_sampled(const FieldCtx& ctx, unsigned d,
                                     unsigned j, std::span<const Elem> prefix,
                                     std::uint64_t samples, Rng& rng);

/// Exact P[C_1 = 1] by enumerating every polynomial of F_{r,d} and every
/// strip: sum NS(F) / (q^{r-1} |F_{r,d}|).
Rational enumerate_prob_c1(const FieldCtx& ctx, unsigned r, unsigned d,
                           const EnumGuard& guard = {});

/// Exact distribution of C_a over uniform F for a fixed strip sequence;
/// entry s-1 is P[C_a = s]. Probabilities of s beyond the sequence length
/// are the complement of the sum.
std::vector<Rational> enumerate_prob_cs(const FieldCtx& ctx, unsigned r,
                                        unsigned d,
                                        const std::vector<Strip>& strips,
                                        const EnumGuard& guard = {});

/// True when every multivariate Vandermonde matrix M_j (j = 1..kappa_s)
/// of the strip tuple has maximal rank min{D_j, s}, i.e. the tuple is
/// generic (avoids the bad set).
bool vandermonde_generic(const std::vector<Strip>& strips, unsigned r,
                         unsigned d, const FieldCtx& ctx);

/// Rank over F_q of the s(d+1) x D matrix of the specialization map
/// F |-> (F(a_1,T), ..., F(a_s,T)).
std::uint64_t phi_matrix_rank(const std::vector<Strip>& strips, unsigned r,
                              unsigned d, const FieldCtx& ctx);

/// Rank of a dense matrix over F_q by Gaussian elimination.
std::uint64_t matrix_rank(std::vector<std::vector<Elem>> rows,
                          const FieldCtx& ctx);

/// Output-distribution entropy H_F = sum -P log P with the closed-form
/// P_{(a,x),F} = 1/(NS(F) N_a(F)); 0 when F has no zeros.
double exact_entropy(const MultiPoly& f, const FieldCtx& ctx,
                     const EnumGuard& guard = {});
/// Average of H_F over every F in F_{r,d}.
double exact_avg_entropy(const FieldCtx& ctx, unsigned r, unsigned d,
                         const EnumGuard& guard = {});

/// Exact mean and variance of NS over F_{r,d}.
Rational mean_ns(const FieldCtx& ctx, unsigned r, unsigned d,
                 const EnumGuard& guard = {});
Rational var_ns(const FieldCtx& ctx, unsigned r, unsigned d,
                const EnumGuard& guard = {});

/// Visits every polynomial of F_{r,d} in coefficient-odometer order.
template <typename Fn>
void for_each_poly(const FieldCtx& ctx, const BasisPtr& basis, Fn&& fn) {
  MultiPoly f = MultiPoly::zero(basis);
  const std::size_t dim = basis->size();
  while (true) {
    fn(static_cast<const MultiPoly&>(f));
    std::size_t pos = 0;
    for (; pos < dim; ++pos) {
      const std::uint64_t next = f.coeff(pos).idx + 1;
      if (next < ctx.q()) {
        f.set_coeff(pos, Elem{next});
        break;
      }
      f.set_coeff(pos, Elem{0});
    }
    if (pos == dim) break;
  }
}

}  // namespace svs::oracle
