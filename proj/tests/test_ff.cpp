#include "svs/ff.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "svs/rng.hpp"

using namespace svs;

namespace {

// brute-force irreducibility over F_p: no factorization into two smaller
// monic polynomials; independent of the library's gcd-based test
bool brute_irreducible(const std::vector<std::uint64_t>& f,
                       std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  auto eval = [&](std::uint64_t x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    return acc;
  };
  if (k <= 3) {
    // degree 2 and 3 are reducible exactly when they have a root
    if (k == 1) return true;
    for (std::uint64_t x = 0; x < p; ++x) {
      if (eval(x) == 0) return false;
    }
    return true;
  }
  return false;  // not needed in these tests
}

}  // namespace

TEST_CASE("field construction matches the worked examples") {
  const FieldCtx f67 = FieldCtx::make(67, 1);
  CHECK(f67.q() == 67);
  CHECK(f67.p() == 67);
  CHECK(f67.modulus().empty());

  const FieldCtx f8 = FieldCtx::make(2, 3);
  CHECK(f8.q() == 8);
  // T^3 + T + 1, found by enumerating the eight monic cubics over F_2
  CHECK(f8.modulus() == std::vector<std::uint64_t>{1, 1, 0, 1});

  CHECK_THROWS_AS(FieldCtx::make(4, 1), NotPrimeError);
  CHECK_THROWS_AS(FieldCtx::make(1, 1), NotPrimeError);
}

TEST_CASE("default modulus is the smallest irreducible by encoding") {
  for (const auto& [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {11, 2}}) {
    const FieldCtx ctx = FieldCtx::make(p, k);
    const auto& m = ctx.modulus();
    REQUIRE(m.size() == k + 1);
    CHECK(m.back() == 1);
    CHECK(brute_irreducible(m, p));
    // nothing with a smaller encoding is irreducible
    std::uint64_t code = 0;
    std::uint64_t scale = 1;
    for (unsigned i = 0; i < k; ++i) {
      code += m[i] * scale;
      scale *= p;
    }
    for (std::uint64_t c = 0; c < code; ++c) {
      std::vector<std::uint64_t> cand(k + 1, 0);
      cand[k] = 1;
      std::uint64_t rest = c;
      for (unsigned i = 0; i < k; ++i) {
        cand[i] = rest % p;
        rest /= p;
      }
      CHECK_FALSE(brute_irreducible(cand, p));
    }
  }
}

TEST_CASE("arithmetic identities from the examples") {
  const FieldCtx f7 = FieldCtx::make(7, 1);
  CHECK(f7.inv(Elem{3}) == Elem{5});

  const FieldCtx f8 = FieldCtx::make(2, 3);
  // T * T^2 = T^3 = T + 1 modulo T^3 + T + 1
  CHECK(f8.mul(Elem{2}, Elem{4}) == Elem{3});

  for (const FieldCtx& ctx :
       {FieldCtx::make(67, 1), FieldCtx::make(2, 3), FieldCtx::make(11, 2)}) {
    Rng rng(42);
    for (int i = 0; i < 20; ++i) {
      const Elem a = ctx.sample(rng);
      CHECK(ctx.pow(a, ctx.q()) == a);  // Frobenius fixes F_q
    }
  }
}

TEST_CASE("field axioms hold on random triples") {
  for (const FieldCtx& ctx :
       {FieldCtx::make(67, 1), FieldCtx::make(2, 3), FieldCtx::make(11, 1),
        FieldCtx::make(11, 2)}) {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
      const Elem a = ctx.sample(rng), b = ctx.sample(rng), c = ctx.sample(rng);
      CHECK(ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c)));
      CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
      CHECK(ctx.mul(a, ctx.add(b, c)) ==
            ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
      CHECK(ctx.add(a, b) == ctx.add(b, a));
      CHECK(ctx.mul(a, b) == ctx.mul(b, a));
      CHECK(ctx.add(a, ctx.neg(a)) == ctx.zero());
      CHECK(ctx.mul(a, ctx.one()) == a);
    }
    for (std::uint64_t idx = 1; idx < ctx.q(); ++idx) {
      const Elem a{idx};
      CHECK(ctx.mul(a, ctx.inv(a)) == ctx.one());
      CHECK(ctx.pow(a, ctx.q() - 1) == ctx.one());
    }
    CHECK_THROWS_AS(ctx.inv(ctx.zero()), DivisionByZeroError);
  }
}

TEST_CASE("extension arithmetic beyond the lookup-table range") {
  const FieldCtx ctx = FieldCtx::make(3, 7);  // q = 2187
  CHECK_FALSE(ctx.has_lut());
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Elem a = ctx.sample(rng), b = ctx.sample(rng), c = ctx.sample(rng);
    CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
    CHECK(ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
    if (a.idx != 0) CHECK(ctx.mul(a, ctx.inv(a)) == ctx.one());
  }
}

TEST_CASE("encoding round-trips for q up to 2^12") {
  for (const FieldCtx& ctx :
       {FieldCtx::make(2, 12), FieldCtx::make(3, 5), FieldCtx::make(11, 2),
        FieldCtx::make(4093, 1)}) {
    REQUIRE(ctx.q() <= 4096);
    for (std::uint64_t idx = 0; idx < ctx.q(); ++idx) {
      const auto digits = ctx.decode(Elem{idx});
      REQUIRE(digits.size() == ctx.k());
      for (const std::uint64_t c : digits) CHECK(c < ctx.p());
      CHECK(ctx.encode(digits) == Elem{idx});
    }
  }
}

TEST_CASE("op counter is exact and per-copy") {
  FieldCtx ctx = FieldCtx::make(67, 1);
  OpCounter counter;
  ctx.attach_counter(&counter);
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    (void)ctx.mul(ctx.sample(rng), ctx.sample(rng));
  }
  CHECK(counter.muls == 100);
  const std::uint64_t muls_before = counter.muls;
  (void)ctx.inv(Elem{5});
  CHECK(counter.invs == 1);
  CHECK(counter.muls == muls_before);  // inversion does not count as muls

  // copies detached from the counter leave it untouched
  FieldCtx other = ctx;
  other.attach_counter(nullptr);
  (void)other.mul(Elem{2}, Elem{3});
  CHECK(counter.muls == muls_before);
}

TEST_CASE("uniform sampling frequencies and determinism") {
  const FieldCtx f3 = FieldCtx::make(3, 1);
  Rng rng(99);
  const int n = 30000;
  std::vector<int> counts(3, 0);
  for (int i = 0; i < n; ++i) ++counts[f3.sample(rng).idx];
  const double sigma = 3.0 * std::sqrt((1.0 / 3) * (2.0 / 3) / n);
  for (const int c : counts) {
    CHECK(std::abs(static_cast<double>(c) / n - 1.0 / 3) < sigma);
  }

  Rng a(1234), b(1234);
  const FieldCtx f2 = FieldCtx::make(2, 1);
  std::vector<std::uint64_t> da, db;
  for (int i = 0; i < 10; ++i) da.push_back(f2.sample(a).idx);
  for (int i = 0; i < 10; ++i) db.push_back(f2.sample(b).idx);
  CHECK(da == db);
}

TEST_CASE("construction failures") {
  CHECK_THROWS_AS(FieldCtx::make(2, 3, {1, 0, 0, 1}), ReducibleError);
  CHECK_THROWS_AS(FieldCtx::make((1ull << 31) + 11, 1), OverflowError);
  CHECK_THROWS_AS(FieldCtx::make(3, 40, {}), OverflowError);  // 3^40 >= 2^63
  CHECK_THROWS_AS(FieldCtx::make(5, 2, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(FieldCtx::make(5, 1, {1, 1}), InvalidArgument);

  CHECK(FieldCtx::of_order(8).p() == 2);
  CHECK(FieldCtx::of_order(8).k() == 3);
  CHECK(FieldCtx::of_order(121).p() == 11);
  CHECK(FieldCtx::of_order(121).k() == 2);
  CHECK(FieldCtx::of_order(67).k() == 1);
  CHECK_THROWS_AS(FieldCtx::of_order(12), InvalidArgument);
}
