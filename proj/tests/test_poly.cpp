#include "svs/poly.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "svs/io.hpp"

using namespace svs;

namespace {

// generate-and-sort oracle for the monomial order: ascending total degree,
// ties by comparing the exponent of the largest variable first
std::vector<std::vector<unsigned>> sorted_monomials(unsigned r, unsigned d) {
  std::vector<std::vector<unsigned>> all;
  std::vector<unsigned> e(r, 0);
  // plain odometer with per-digit cap d, filtered by total degree
  while (true) {
    if (std::accumulate(e.begin(), e.end(), 0u) <= d) all.push_back(e);
    std::size_t pos = 0;
    for (; pos < r; ++pos) {
      if (e[pos] < d) {
        ++e[pos];
        break;
      }
      e[pos] = 0;
    }
    if (pos == r) break;
  }
  std::sort(all.begin(), all.end(),
            [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
              const unsigned ga = std::accumulate(a.begin(), a.end(), 0u);
              const unsigned gb = std::accumulate(b.begin(), b.end(), 0u);
              if (ga != gb) return ga < gb;
              for (std::size_t i = a.size(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] < b[i];
              }
              return false;
            });
  return all;
}

// term-by-term evaluation, no power tables
Elem naive_eval(const MultiPoly& f, std::span<const Elem> x,
                const FieldCtx& ctx) {
  Elem acc = ctx.zero();
  for (std::size_t m = 0; m < f.basis().size(); ++m) {
    Elem term = f.coeff(m);
    const auto exps = f.basis().exponents(m);
    for (std::size_t v = 0; v < exps.size(); ++v) {
      for (unsigned i = 0; i < exps[v]; ++i) term = ctx.mul(term, x[v]);
    }
    acc = ctx.add(acc, term);
  }
  return acc;
}

MultiPoly x1x2_minus_1(const FieldCtx& ctx) {
  auto basis = make_basis(2, 2);
  MultiPoly f = MultiPoly::zero(basis);
  f.set_coeff(basis->rank(std::vector<unsigned>{1, 1}), ctx.one());
  f.set_coeff(basis->rank(std::vector<unsigned>{0, 0}), ctx.neg(ctx.one()));
  return f;
}

}  // namespace

TEST_CASE("dimension of F_{r,d}") {
  CHECK(dim_f(2, 2) == 6);
  CHECK(dim_f(3, 5) == 56);
  CHECK(dim_f(2, 30) == 496);
  CHECK(dim_f_exact(40, 1000).str().size() > 19);
  CHECK_THROWS_AS(dim_f(40, 1000), OverflowError);
}

TEST_CASE("monomial ranks follow graded-lex order") {
  const MonomialBasis basis(2, 2);
  CHECK(basis.rank(std::vector<unsigned>{0, 0}) == 0);
  const std::vector<std::vector<unsigned>> expected = {
      {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(basis.exponents(i) == expected[i]);
    CHECK(basis.rank(expected[i]) == i);
  }

  for (unsigned r = 1; r <= 4; ++r) {
    for (unsigned d = 0; d <= 6; ++d) {
      const MonomialBasis b(r, d);
      const auto oracle = sorted_monomials(r, d);
      REQUIRE(b.size() == oracle.size());
      for (std::size_t i = 0; i < oracle.size(); ++i) {
        CHECK(b.exponents(i) == oracle[i]);     // strictly increasing order
        CHECK(b.rank(oracle[i]) == i);          // bijection
      }
    }
  }

  CHECK_THROWS_AS(basis.rank(std::vector<unsigned>{2, 1}), OutOfRangeError);
  CHECK_THROWS_AS(basis.rank(std::vector<unsigned>{1}),
                  DimensionMismatchError);
  CHECK_THROWS_AS(basis.exponents(6), OutOfRangeError);
}

TEST_CASE("polynomial sampling is uniform over F_{r,d}") {
  const FieldCtx f3 = FieldCtx::make(3, 1);
  auto basis = make_basis(2, 1);
  REQUIRE(basis->size() == 3);
  Rng rng(2024);
  const int n = 27000;
  std::vector<int> counts(27, 0);
  for (int i = 0; i < n; ++i) {
    const MultiPoly f = sample_poly(f3, basis, rng);
    CHECK(f.coeffs().size() == dim_f(2, 1));
    const auto code = f.coeff(0).idx + 3 * f.coeff(1).idx + 9 * f.coeff(2).idx;
    ++counts[code];
  }
  const double sigma3 = 3.0 * std::sqrt((1.0 / 27) * (26.0 / 27) / n);
  for (const int c : counts)
    CHECK(std::abs(static_cast<double>(c) / n - 1.0 / 27) < sigma3);

  Rng a(5), b(5);
  CHECK(sample_poly(f3, basis, a).coeffs().size() == 3);
  Rng a2(5);
  const MultiPoly fa = sample_poly(f3, basis, a2);
  const MultiPoly fb = sample_poly(f3, basis, b);
  for (std::size_t i = 0; i < 3; ++i) CHECK(fa.coeff(i) == fb.coeff(i));
}

TEST_CASE("evaluation agrees with the naive oracle") {
  const FieldCtx f3 = FieldCtx::make(3, 1);
  const MultiPoly f = x1x2_minus_1(f3);
  CHECK(eval(f, std::vector<Elem>{Elem{1}, Elem{1}}, f3) == f3.zero());

  const MultiPoly zero = MultiPoly::zero(make_basis(2, 2));
  CHECK(eval(zero, std::vector<Elem>{Elem{2}, Elem{0}}, f3) == f3.zero());

  const FieldCtx f5 = FieldCtx::make(5, 1);
  auto basis = make_basis(2, 3);
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiPoly g = sample_poly(f5, basis, rng);
    for (int i = 0; i < 5; ++i) {
      const std::vector<Elem> x = {f5.sample(rng), f5.sample(rng)};
      CHECK(eval(g, x, f5) == naive_eval(g, x, f5));
    }
  }
  CHECK_THROWS_AS(eval(f, std::vector<Elem>{Elem{1}}, f3),
                  DimensionMismatchError);
}

TEST_CASE("specialization onto strips") {
  const FieldCtx f3 = FieldCtx::make(3, 1);
  const MultiPoly f = x1x2_minus_1(f3);
  const UniPoly at0 = specialize(f, Strip{{Elem{0}}}, f3);
  CHECK(at0.degree() == 0);
  CHECK(at0.coeff(0) == Elem{2});  // the constant -1

  // F = X_2^d specializes to T^d on every strip
  const unsigned d = 4;
  auto basis = make_basis(2, d);
  MultiPoly xr = MultiPoly::zero(basis);
  xr.set_coeff(basis->rank(std::vector<unsigned>{0, d}), f3.one());
  for (std::uint64_t a = 0; a < 3; ++a) {
    const UniPoly spec = specialize(xr, Strip{{Elem{a}}}, f3);
    CHECK(spec.degree() == static_cast<int>(d));
    CHECK(spec.leading() == f3.one());
  }

  const FieldCtx f7 = FieldCtx::make(7, 1);
  auto basis34 = make_basis(3, 4);
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiPoly g = sample_poly(f7, basis34, rng);
    const Strip a{{f7.sample(rng), f7.sample(rng)}};
    const UniPoly spec = specialize(g, a, f7);
    for (std::uint64_t t = 0; t < 7; ++t) {
      std::vector<Elem> x = a.coords;
      x.push_back(Elem{t});
      CHECK(uni_eval(spec, Elem{t}, f7) == eval(g, x, f7));
    }
  }
}

TEST_CASE("univariate gcd and modular arithmetic") {
  const FieldCtx f5 = FieldCtx::make(5, 1);
  // gcd(T^2 - 1, T - 1) = T - 1, monic
  const UniPoly a({Elem{4}, Elem{0}, Elem{1}});
  const UniPoly b({Elem{4}, Elem{1}});
  CHECK(uni_gcd(a, b, f5) == b);
  // gcd(0, 3T + 3) = T + 1 after monic normalization
  CHECK(uni_gcd(UniPoly(), UniPoly({Elem{3}, Elem{3}}), f5) ==
        UniPoly({Elem{1}, Elem{1}}));
  CHECK(uni_gcd(UniPoly(), UniPoly(), f5).is_zero());

  // T^3 mod T^2 + 1 = -T = 2T over F_3: long division gives
  // T^3 = (T^2 + 1) T - T
  const FieldCtx f3 = FieldCtx::make(3, 1);
  const UniPoly m({Elem{1}, Elem{0}, Elem{1}});
  const UniPoly t({Elem{0}, Elem{1}});
  CHECK(uni_powmod(t, 3, m, f3) == UniPoly({Elem{0}, Elem{2}}));

  CHECK_THROWS_AS(uni_divmod(a, UniPoly(), f5), ZeroModulusError);
  CHECK_THROWS_AS(uni_powmod(t, 2, UniPoly(), f3), ZeroModulusError);
}

TEST_CASE("gcd divides both arguments and any common divisor divides it") {
  const FieldCtx f11 = FieldCtx::make(11, 1);
  Rng rng(31);
  auto random_poly = [&](int max_deg) {
    std::vector<Elem> c(1 + uniform_below(rng, max_deg + 1));
    for (Elem& e : c) e = f11.sample(rng);
    return UniPoly(std::move(c));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const UniPoly w = random_poly(3);
    const UniPoly f = uni_mul(random_poly(4), w, f11);
    const UniPoly g = uni_mul(random_poly(4), w, f11);
    const UniPoly gcd = uni_gcd(f, g, f11);
    if (!f.is_zero()) CHECK(uni_mod(f, gcd.is_zero() ? f : gcd, f11).is_zero());
    if (!g.is_zero()) CHECK(uni_mod(g, gcd.is_zero() ? g : gcd, f11).is_zero());
    if (!w.is_zero() && !gcd.is_zero())
      CHECK(uni_mod(gcd, w, f11).is_zero());  // w is a common divisor
  }
}

TEST_CASE("polynomial text format round-trips") {
  const FieldCtx f3 = FieldCtx::make(3, 1);
  const MultiPoly f = x1x2_minus_1(f3);
  const std::string text = io::format_poly(f, f3);
  CHECK(text.substr(0, 14) == "POLY 3 3 1 2 2");
  const io::PolyFile parsed = io::parse_poly_text(text);
  CHECK(parsed.field == f3);
  CHECK(std::equal(parsed.poly.coeffs().begin(), parsed.poly.coeffs().end(),
                   f.coeffs().begin()));

  // reader accepts any term order
  const io::PolyFile shuffled =
      io::parse_poly_text("POLY 3 3 1 2 2\n2 0 0\n1 1 1\n");
  CHECK(std::equal(shuffled.poly.coeffs().begin(),
                   shuffled.poly.coeffs().end(), f.coeffs().begin()));

  CHECK_THROWS_AS(io::parse_poly_text("POLY 3 3 1 2 2\n1 1 1\n2 1 1\n"),
                  ParseError);
  CHECK_THROWS_AS(io::parse_poly_text("POLY 3 3 1 2 2\n1 2 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_poly_text("POLY 3 3 1 2 2\n5 1 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_poly_text("NOPE"), ParseError);

  const MultiPoly inline_poly = io::parse_poly_inline("1:1,1 2:0,0", f3);
  CHECK(std::equal(inline_poly.coeffs().begin(), inline_poly.coeffs().end(),
                   f.coeffs().begin()));
}

TEST_CASE("field spec line round-trips") {
  const FieldCtx f8 = FieldCtx::make(2, 3);
  CHECK(io::format_field_spec(f8) == "8 2 3 1 1 0 1");
  CHECK(io::parse_field_spec("8 2 3 1 1 0 1") == f8);
  CHECK(io::parse_field_spec("8") == f8);
  const FieldCtx f67 = FieldCtx::make(67, 1);
  CHECK(io::format_field_spec(f67) == "67 67 1");
  CHECK(io::parse_field_spec("67") == f67);
  CHECK_THROWS_AS(io::parse_field_spec("9 2 3"), ParseError);
}

TEST_CASE("strip index encoding") {
  for (std::uint64_t i = 0; i < 49; ++i) {
    const Strip a = strip_from_index(i, 7, 3);
    CHECK(a.coords.size() == 2);
    CHECK(strip_to_index(a, 7) == i);
  }
}
