#include "svs/ff.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace svs {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 result = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) result = mulmod_u64(result, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return result;
}

// --- univariate polynomials over F_p, used only at construction time ---
// Coefficients low-to-high, no trailing zeros; empty vector is the zero
// polynomial.
using PolyP = std::vector<u64>;

void norm_p(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP sub_p(const PolyP& a, const PolyP& b, u64 p) {
  PolyP out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  norm_p(out);
  return out;
}

PolyP mul_p(const PolyP& a, const PolyP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  norm_p(out);
  return out;
}

u64 inv_mod_p(u64 a, u64 p) {
  // extended Euclid; a != 0 mod p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p),
               new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<u64>(t);
}

PolyP mod_p(PolyP a, const PolyP& m, u64 p) {
  norm_p(a);
  const std::size_t dm = m.size() - 1;
  const u64 lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const u64 c = mulmod_u64(a.back(), lead_inv, p);
    if (c != 0) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        u64& slot = a[shift + j];
        slot = (slot + p - mulmod_u64(c, m[j], p)) % p;
      }
    }
    a.pop_back();
    norm_p(a);
    if (a.size() <= dm) break;
  }
  norm_p(a);
  return a;
}

PolyP powmod_p(PolyP base, u64 e, const PolyP& m, u64 p) {
  PolyP result = {1};
  base = mod_p(std::move(base), m, p);
  while (e != 0) {
    if (e & 1) result = mod_p(mul_p(result, base, p), m, p);
    base = mod_p(mul_p(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

PolyP gcd_p(PolyP a, PolyP b, u64 p) {
  norm_p(a);
  norm_p(b);
  while (!b.empty()) {
    PolyP r = mod_p(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const u64 s = inv_mod_p(a.back(), p);
    for (u64& c : a) c = mulmod_u64(c, s, p);
  }
  return a;
}

constexpr u64 kMaxP = (1ull << 31);
constexpr u64 kMaxQ = (1ull << 63);

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::span<const std::uint64_t> poly,
                          std::uint64_t p) {
  PolyP f(poly.begin(), poly.end());
  norm_p(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  // f of degree k is irreducible iff it has no factor of degree <= k/2,
  // i.e. gcd(T^{p^i} - T, f) = 1 for 1 <= i <= k/2.
  const PolyP t = {0, 1};
  PolyP x = t;
  for (std::size_t i = 1; i <= k / 2; ++i) {
    x = powmod_p(std::move(x), p, f, p);
    PolyP g = gcd_p(sub_p(x, t, p), f, p);
    if (g.size() != 1) return false;  // nontrivial gcd or gcd = 0
  }
  return true;
}

FieldCtx FieldCtx::make(std::uint64_t p, unsigned k) {
  return make(p, k, {});
}

FieldCtx FieldCtx::make(std::uint64_t p, unsigned k,
                        std::vector<std::uint64_t> modulus) {
  if (p >= kMaxP) throw OverflowError("p must be < 2^31");
  if (!is_prime_u64(p))
    throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("extension degree k must be >= 1");

  u64 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > (kMaxQ - 1) / p) throw OverflowError("q = p^k must be < 2^63");
    q *= p;
  }

  auto data = std::make_shared<Data>();
  data->p = p;
  data->k = k;
  data->q = q;

  if (k == 1) {
    if (!modulus.empty())
      throw InvalidArgument("a modulus only applies to extension fields");
  } else if (!modulus.empty()) {
    if (modulus.size() != static_cast<std::size_t>(k) + 1 ||
        modulus.back() != 1) {
      throw InvalidArgument("modulus must be monic of degree exactly k");
    }
    for (u64 c : modulus) {
      if (c >= p) throw InvalidArgument("modulus coefficient out of range");
    }
    if (!is_irreducible_mod_p(modulus, p))
      throw ReducibleError("modulus is reducible over F_p");
    data->modulus = std::move(modulus);
  } else {
    // Smallest monic irreducible of degree k, ordered by the integer
    // encoding sum(c_i p^i) of the non-leading coefficients.
    std::vector<u64> cand(k + 1, 0);
    cand[k] = 1;
    for (u64 code = 0;; ++code) {
      u64 rest = code;
      for (unsigned i = 0; i < k; ++i) {
        cand[i] = rest % p;
        rest /= p;
      }
      if (rest != 0)
        throw ReducibleError("no irreducible polynomial found");  // unreachable
      if (is_irreducible_mod_p(cand, p)) {
        data->modulus = cand;
        break;
      }
    }
  }

  if (q <= kLutMax) {
    FieldCtx plain(std::make_shared<const Data>(*data));
    const auto n = static_cast<std::size_t>(q);
    data->mul_tab.resize(n * n);
    data->add_tab.resize(n * n);
    data->neg_tab.resize(n);
    data->inv_tab.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const Elem prod = plain.mul(Elem{a}, Elem{b});
        data->mul_tab[a * n + b] = static_cast<std::uint16_t>(prod.idx);
        data->add_tab[a * n + b] =
            static_cast<std::uint16_t>(plain.add(Elem{a}, Elem{b}).idx);
        if (prod.idx == 1) data->inv_tab[a] = static_cast<std::uint16_t>(b);
      }
      data->neg_tab[a] = static_cast<std::uint16_t>(plain.neg(Elem{a}).idx);
    }
    data->lut = true;
  }

  return FieldCtx(std::move(data));
}

FieldCtx FieldCtx::of_order(std::uint64_t q) {
  if (q < 2 || q >= kMaxQ) throw InvalidArgument("field order out of range");
  for (unsigned k = 63; k >= 2; --k) {
    auto root = static_cast<u64>(
        std::llround(std::pow(static_cast<double>(q), 1.0 / k)));
    for (u64 p = root > 1 ? root - 1 : 2; p <= root + 1; ++p) {
      if (p < 2) continue;
      u64 power = 1;
      bool overflow = false;
      for (unsigned i = 0; i < k; ++i) {
        if (power > kMaxQ / p) {
          overflow = true;
          break;
        }
        power *= p;
      }
      if (!overflow && power == q && is_prime_u64(p)) return make(p, k);
    }
  }
  if (is_prime_u64(q)) return make(q, 1);
  throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
}

Elem FieldCtx::inv(Elem a) const {
  if (a.idx == 0) throw DivisionByZeroError("inverse of zero");
  if (counter_) ++counter_->invs;
  const Data& d = *data_;
  if (d.lut) return Elem{d.inv_tab[a.idx]};
  if (d.k == 1) return Elem{inv_mod_p(a.idx, d.q)};
  return Elem{ext_inv(a.idx)};
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> FieldCtx::decode(Elem a) const {
  std::vector<u64> digits(data_->k, 0);
  u64 rest = a.idx;
  for (unsigned i = 0; i < data_->k; ++i) {
    digits[i] = rest % data_->p;
    rest /= data_->p;
  }
  return digits;
}

Elem FieldCtx::encode(std::span<const std::uint64_t> digits) const {
  if (digits.size() != data_->k)
    throw DimensionMismatchError("digit vector must have length k");
  u64 idx = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= data_->p)
      throw OutOfRangeError("digit out of range");
    idx = idx * data_->p + digits[i];
  }
  return Elem{idx};
}

std::uint64_t FieldCtx::ext_add(std::uint64_t a, std::uint64_t b) const {
  const u64 p = data_->p;
  u64 out = 0, scale = 1;
  for (unsigned i = 0; i < data_->k; ++i) {
    const u64 da = a % p, db = b % p;
    a /= p;
    b /= p;
    out += ((da + db) % p) * scale;
    scale *= p;
  }
  return out;
}

std::uint64_t FieldCtx::ext_neg(std::uint64_t a) const {
  const u64 p = data_->p;
  u64 out = 0, scale = 1;
  for (unsigned i = 0; i < data_->k; ++i) {
    const u64 da = a % p;
    a /= p;
    out += (da == 0 ? 0 : p - da) * scale;
    scale *= p;
  }
  return out;
}

std::uint64_t FieldCtx::ext_mul(std::uint64_t a, std::uint64_t b) const {
  const u64 p = data_->p;
  const unsigned k = data_->k;
  u64 da[64], db[64], prod[127];
  for (unsigned i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (unsigned i = 0; i < 2 * k - 1; ++i) prod[i] = 0;
  for (unsigned i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
  }
  const auto& m = data_->modulus;
  for (unsigned i = 2 * k - 2; i >= k && i < 2 * k; --i) {
    const u64 c = prod[i];
    if (c != 0) {
      prod[i] = 0;
      for (unsigned j = 0; j < k; ++j) {
        u64& slot = prod[i - k + j];
        slot = (slot + (p - mulmod_u64(c, m[j], p))) % p;
      }
    }
  }
  u64 out = 0;
  for (unsigned i = k; i-- > 0;) out = out * p + prod[i];
  return out;
}

std::uint64_t FieldCtx::ext_inv(std::uint64_t a) const {
  // a^(q-2); cold path, counters untouched by design (inv counts as one op)
  u64 result = 1, base = a, e = data_->q - 2;
  while (e != 0) {
    if (e & 1) result = ext_mul(result, base);
    base = ext_mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace svs
