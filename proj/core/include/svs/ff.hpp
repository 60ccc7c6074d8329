#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "svs/errors.hpp"
#include "svs/rng.hpp"

namespace svs {

/// Element of a finite field F_q, encoded as an integer in [0, q).
/// For q = p^k the index packs the polynomial-basis coefficients as base-p
/// digits: idx = sum c_i * p^i. Elem 0 / Elem 1 are the additive and
/// multiplicative identities in every field.
struct Elem {
  std::uint64_t idx = 0;
  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

/// Monotone counters for the field operations that dominate the cost model.
struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t invs = 0;

  OpCounter& operator+=(const OpCounter& other) {
    adds += other.adds;
    muls += other.muls;
    invs += other.invs;
    return *this;
  }
  std::uint64_t total() const { return adds + muls + invs; }
};

/// Arithmetic context for F_q with q = p^k, p prime, k >= 1.
///
/// The underlying field data (modulus, lookup tables) is immutable and
/// shared between copies, so a FieldCtx is cheap to copy and safe to use
/// from many threads. An optional OpCounter pointer is per-copy: workers
/// that want exact operation counts take their own copy and attach their
/// own counter.
///
/// Fields with q <= 512 are backed by full multiplication/addition tables;
/// larger prime fields reduce modulo p directly and larger extension fields
/// run digit-vector arithmetic modulo the defining polynomial.
class FieldCtx {
 public:
  /// Builds F_{p^k}. When k > 1 and no modulus is given, the defining
  /// polynomial is the monic irreducible of degree k over F_p with the
  /// smallest coefficient encoding sum(m_i p^i), so encodings are
  /// reproducible across implementations. Throws NotPrimeError,
  /// ReducibleError or OverflowError.
  static FieldCtx make(std::uint64_t p, unsigned k = 1);
  static FieldCtx make(std::uint64_t p, unsigned k,
                       std::vector<std::uint64_t> modulus);
  /// Builds the field of order q, factoring q = p^k. Throws
  /// InvalidArgument when q is not a prime power.
  static FieldCtx of_order(std::uint64_t q);

  std::uint64_t p() const { return data_->p; }
  unsigned k() const { return data_->k; }
  std::uint64_t q() const { return data_->q; }
  /// Defining polynomial, low-to-high, size k+1, monic. Empty when k == 1.
  const std::vector<std::uint64_t>& modulus() const { return data_->modulus; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Checked constructor from an index in [0, q).
  Elem elem(std::uint64_t idx) const {
    if (idx >= data_->q) throw OutOfRangeError("element index out of range");
    return Elem{idx};
  }

  Elem add(Elem a, Elem b) const {
    if (counter_) ++counter_->adds;
    const Data& d = *data_;
    if (d.lut) return Elem{d.add_tab[a.idx * d.q + b.idx]};
    if (d.k == 1) {
      std::uint64_t s = a.idx + b.idx;
      if (s >= d.q) s -= d.q;
      return Elem{s};
    }
    return Elem{ext_add(a.idx, b.idx)};
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem neg(Elem a) const {
    const Data& d = *data_;
    if (d.lut) return Elem{d.neg_tab[a.idx]};
    if (d.k == 1) return Elem{a.idx == 0 ? 0 : d.q - a.idx};
    return Elem{ext_neg(a.idx)};
  }

  Elem mul(Elem a, Elem b) const {
    if (counter_) ++counter_->muls;
    const Data& d = *data_;
    if (d.lut) return Elem{d.mul_tab[a.idx * d.q + b.idx]};
    if (d.k == 1) return Elem{(a.idx * b.idx) % d.q};
    return Elem{ext_mul(a.idx, b.idx)};
  }

  /// Multiplicative inverse; throws DivisionByZeroError on 0.
  Elem inv(Elem a) const;

  /// a^e by square-and-multiply; pow(0, 0) = 1.
  Elem pow(Elem a, std::uint64_t e) const;

  bool is_zero(Elem a) const { return a.idx == 0; }

  /// Uniform element; consumes the stream deterministically.
  Elem sample(Rng& rng) const { return Elem{uniform_below(rng, data_->q)}; }

  /// Base-p digits (c_0, ..., c_{k-1}) of the element.
  std::vector<std::uint64_t> decode(Elem a) const;
  Elem encode(std::span<const std::uint64_t> digits) const;

  void attach_counter(OpCounter* counter) { counter_ = counter; }
  OpCounter* counter() const { return counter_; }

  /// True when a full q x q multiplication table backs this field.
  bool has_lut() const { return data_->lut; }
  const std::uint16_t* mul_lut() const { return data_->mul_tab.data(); }
  const std::uint16_t* add_lut() const { return data_->add_tab.data(); }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.data_->p == b.data_->p && a.data_->k == b.data_->k &&
           a.data_->modulus == b.data_->modulus;
  }

  static constexpr std::uint64_t kLutMax = 512;

 private:
  struct Data {
    std::uint64_t p = 0;
    unsigned k = 1;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> modulus;  // empty when k == 1
    bool lut = false;
    std::vector<std::uint16_t> mul_tab;
    std::vector<std::uint16_t> add_tab;
    std::vector<std::uint16_t> neg_tab;
    std::vector<std::uint16_t> inv_tab;
  };

  explicit FieldCtx(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::uint64_t ext_add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t ext_neg(std::uint64_t a) const;
  std::uint64_t ext_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t ext_inv(std::uint64_t a) const;

  std::shared_ptr<const Data> data_;
  OpCounter* counter_ = nullptr;
};

/// Deterministic Miller-Rabin, valid for every n < 2^64.
bool is_prime_u64(std::uint64_t n);

/// Monic irreducibility over F_p of a degree-k polynomial given low-to-high.
bool is_irreducible_mod_p(std::span<const std::uint64_t> poly, std::uint64_t p);

}  // namespace svs
