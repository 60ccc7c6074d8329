#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "svs/ff.hpp"
#include "svs/rational.hpp"

namespace svs {

/// dim F_{r,d} = C(d+r, r) as a machine integer; throws OverflowError (with
/// the exact value in the message) when the dimension exceeds 2^63.
std::uint64_t dim_f(unsigned r, unsigned d);
BigInt dim_f_exact(unsigned r, unsigned d);

/// Dense graded-lex basis of the r-variate monomials of total degree <= d.
///
/// Rank order: ascending total degree, ties broken lexicographically with
/// X_1 < X_2 < ... < X_r. For r = 2, d = 2 the ranks enumerate
/// (0,0),(1,0),(0,1),(2,0),(1,1),(0,2).
///
/// The basis also carries the split of each monomial into its "head"
/// (exponents of X_1..X_{r-1}) and "tail" (exponent of X_r), which is what
/// strip specialization F |-> F(a, X_r) consumes.
class MonomialBasis {
 public:
  MonomialBasis(unsigned r, unsigned d);

  unsigned r() const { return r_; }
  unsigned d() const { return d_; }
  std::size_t size() const { return size_; }

  /// Rank of an exponent vector (length r, total degree <= d).
  std::size_t rank(std::span<const unsigned> exponents) const;
  /// Exponent vector of a rank; inverse of rank().
  std::vector<unsigned> exponents(std::size_t rank) const;

  /// Monomials of F_q[X_1..X_{r-1}] of degree <= d, in the induced order.
  /// For r = 1 there is a single empty head monomial.
  std::size_t head_size() const { return head_exps_.size(); }
  std::span<const unsigned> head_exponents(std::size_t h) const {
    return {head_exps_[h].data(), head_exps_[h].size()};
  }
  /// Index into the head list for a full-monomial rank.
  std::uint32_t head_index(std::size_t rank) const { return head_of_[rank]; }
  /// Exponent of X_r for a full-monomial rank.
  std::uint32_t tail_exp(std::size_t rank) const { return tail_of_[rank]; }

 private:
  unsigned r_;
  unsigned d_;
  std::size_t size_;
  std::vector<std::vector<unsigned>> full_;
  std::vector<std::vector<unsigned>> head_exps_;
  std::vector<std::uint32_t> head_of_;
  std::vector<std::uint32_t> tail_of_;
  std::map<std::vector<unsigned>, std::size_t> rank_of_;
};

using BasisPtr = std::shared_ptr<const MonomialBasis>;

inline BasisPtr make_basis(unsigned r, unsigned d) {
  return std::make_shared<const MonomialBasis>(r, d);
}

/// A vertical strip {a} x F_q: the point a in F_q^{r-1} that fixes the
/// first r-1 coordinates.
struct Strip {
  std::vector<Elem> coords;

  friend bool operator==(const Strip&, const Strip&) = default;
};

/// Strip <-> integer encoding: index = sum coords[i].idx * q^i.
std::uint64_t strip_to_index(const Strip& a, std::uint64_t q);
Strip strip_from_index(std::uint64_t index, std::uint64_t q, unsigned r);

/// Dense element of F_{r,d} in graded-lex coefficient order.
class MultiPoly {
 public:
  MultiPoly(BasisPtr basis, std::vector<Elem> coeffs);
  static MultiPoly zero(BasisPtr basis);

  unsigned r() const { return basis_->r(); }
  unsigned d() const { return basis_->d(); }
  const MonomialBasis& basis() const { return *basis_; }
  BasisPtr basis_ptr() const { return basis_; }

  std::span<const Elem> coeffs() const { return coeffs_; }
  Elem coeff(std::size_t rank) const { return coeffs_[rank]; }
  void set_coeff(std::size_t rank, Elem value) { coeffs_[rank] = value; }
  bool is_zero() const;

 private:
  BasisPtr basis_;
  std::vector<Elem> coeffs_;
};

/// Univariate polynomial over F_q, coefficients low-to-high with no
/// trailing zeros; the zero polynomial has an empty coefficient vector and
/// degree() == -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }
  static UniPoly constant(Elem c) {
    return c.idx == 0 ? UniPoly() : UniPoly({c});
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Elem> coeffs() const { return coeffs_; }
  Elem coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Elem{0};
  }
  Elem leading() const { return coeffs_.empty() ? Elem{0} : coeffs_.back(); }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().idx == 0) coeffs_.pop_back();
  }
  std::vector<Elem> coeffs_;
};

/// Uniform sample from F_{r,d}: every coefficient i.i.d. uniform.
MultiPoly sample_poly(const FieldCtx& ctx, BasisPtr basis, Rng& rng);

/// Value of F at a point x in F_q^r.
Elem eval(const MultiPoly& f, std::span<const Elem> x, const FieldCtx& ctx);

/// Specialization F(a, X_r) of F to the strip a (length r-1).
UniPoly specialize(const MultiPoly& f, const Strip& a, const FieldCtx& ctx);

/// Monomial values a^w for every head monomial of the basis, in head order.
/// Shared across many specializations onto the same strip.
void strip_head_values(const MonomialBasis& basis, std::span<const Elem> a,
                       const FieldCtx& ctx, std::span<Elem> out);

/// Raw specialization kernel: out must have d+1 slots and is overwritten
/// with the (unnormalized) coefficients of F(a, X_r).
void specialize_into(const MultiPoly& f, std::span<const Elem> head_values,
                     const FieldCtx& ctx, std::span<Elem> out);

// --- univariate suite ---

Elem uni_eval(const UniPoly& f, Elem t, const FieldCtx& ctx);
UniPoly uni_add(const UniPoly& a, const UniPoly& b, const FieldCtx& ctx);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b, const FieldCtx& ctx);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b, const FieldCtx& ctx);
/// Monic scaling; monic(0) = 0.
UniPoly uni_monic(const UniPoly& f, const FieldCtx& ctx);
/// Quotient and remainder; throws ZeroModulusError when g = 0.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& f, const UniPoly& g,
                                       const FieldCtx& ctx);
UniPoly uni_mod(const UniPoly& f, const UniPoly& g, const FieldCtx& ctx);
UniPoly uni_mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m,
                   const FieldCtx& ctx);
/// base^e mod m by square-and-multiply, O(log e) modular products.
UniPoly uni_powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m,
                   const FieldCtx& ctx);
/// Monic gcd with gcd(0, g) = monic(g) and gcd(0, 0) = 0.
UniPoly uni_gcd(UniPoly a, UniPoly b, const FieldCtx& ctx);

}  // namespace svs
