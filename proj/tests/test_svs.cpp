#include "svs/svs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "svs/io.hpp"
#include "svs/oracle.hpp"

using namespace svs;

namespace {

MultiPoly parse(const std::string& inline_terms, const FieldCtx& ctx) {
  return io::parse_poly_inline(inline_terms, ctx);
}

}  // namespace

TEST_CASE("strip sampler draws without replacement, uniformly") {
  const FieldCtx f3 = FieldCtx::make(3, 1);
  std::map<std::vector<std::uint64_t>, int> perm_counts;
  const int n = 6000;
  Rng rng(6021);
  for (int i = 0; i < n; ++i) {
    StripSampler sampler(f3, 2, rng);
    std::vector<std::uint64_t> perm;
    for (int j = 0; j < 3; ++j) perm.push_back(sampler.next_index());
    ++perm_counts[perm];
  }
  CHECK(perm_counts.size() == 6);
  const double sigma3 = 3.0 * std::sqrt((1.0 / 6) * (5.0 / 6) / n);
  for (const auto& [perm, count] : perm_counts) {
    std::set<std::uint64_t> distinct(perm.begin(), perm.end());
    CHECK(distinct.size() == 3);
    CHECK(std::abs(count / static_cast<double>(n) - 1.0 / 6) < sigma3);
  }

  const FieldCtx f67 = FieldCtx::make(67, 1);
  StripSampler sampler(f67, 3, rng);
  CHECK(sampler.space_size() == 67 * 67);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 100; ++i) {
    const Strip a = sampler.next();
    CHECK(a.coords.size() == 2);
    CHECK(seen.insert(strip_to_index(a, 67)).second);
  }

  Rng r1(55), r2(55);
  StripSampler s1(f67, 2, r1), s2(f67, 2, r2);
  for (int i = 0; i < 67; ++i) CHECK(s1.next_index() == s2.next_index());
  CHECK_THROWS_AS(s1.next_index(), ExhaustedError);
}

TEST_CASE("svs_run finds zeros and reports failure only after exhaustion") {
  const FieldCtx f3 = FieldCtx::make(3, 1);
  const MultiPoly f = parse("1:1,1 2:0,0", f3);  // X1 X2 - 1

  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const SvsResult result = svs_run(f, f3, rng);
    REQUIRE(result.found);
    CHECK(eval(f, result.zero, f3) == f3.zero());
    CHECK(result.searches >= 1);
    CHECK(result.trace.size() == result.searches);
    // strips before the hit had no roots
    for (std::size_t i = 0; i + 1 < result.trace.size(); ++i)
      CHECK(result.trace[i].roots_found == 0);
  }

  // F = 1 never has zeros: failure with a full trace
  const MultiPoly one = parse("1:0,0", f3);
  const SvsResult fail = svs_run(one, f3, rng);
  CHECK_FALSE(fail.found);
  CHECK(fail.searches == 3);
  CHECK(fail.trace.size() == 3);

  // F = 0 succeeds on the first strip
  const MultiPoly zero = MultiPoly::zero(make_basis(2, 2));
  const SvsResult instant = svs_run(zero, f3, rng);
  CHECK(instant.found);
  CHECK(instant.searches == 1);
  CHECK(instant.trace.at(0).roots_found == 3);
}

TEST_CASE("svs_run_with_strips follows the caller's order") {
  const FieldCtx f3 = FieldCtx::make(3, 1);
  const MultiPoly f = parse("1:1,1 2:0,0", f3);
  Rng rng(3);

  // F(0, T) = -1 has no roots, so strips (0),(1) succeed at the second
  const StripSequence strips01{{Strip{{Elem{0}}}, Strip{{Elem{1}}}}};
  const SvsResult second = svs_run_with_strips(f, strips01, f3, rng);
  REQUIRE(second.found);
  CHECK(second.searches == 2);
  CHECK(second.zero == std::vector<Elem>{Elem{1}, Elem{1}});

  const StripSequence strips1{{Strip{{Elem{1}}}}};
  const SvsResult first = svs_run_with_strips(f, strips1, f3, rng);
  REQUIRE(first.found);
  CHECK(first.searches == 1);

  // X_1 - 1 specializes to the zero polynomial on strip (1)
  const MultiPoly line = parse("1:1,0 2:0,0", f3);
  const StripSequence strips10{{Strip{{Elem{1}}}, Strip{{Elem{0}}}}};
  std::set<std::uint64_t> last_coords;
  for (int i = 0; i < 100; ++i) {
    const SvsResult hit = svs_run_with_strips(line, strips10, f3, rng);
    REQUIRE(hit.found);
    CHECK(hit.searches == 1);
    CHECK(hit.zero[0] == Elem{1});
    last_coords.insert(hit.zero[1].idx);
  }
  CHECK(last_coords.size() == 3);  // the full-strip draw covers F_3

  const StripSequence dup{{Strip{{Elem{0}}}, Strip{{Elem{0}}}}};
  CHECK_THROWS_AS(svs_run_with_strips(f, dup, f3, rng), DuplicateStripsError);
}

TEST_CASE("found/failed outcomes agree with the oracle") {
  const FieldCtx f3 = FieldCtx::make(3, 1);
  auto basis = make_basis(2, 2);
  Rng rng(29);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly f = sample_poly(f3, basis, rng);
    const SvsResult result = svs_run(f, f3, rng);
    const std::uint64_t ns = oracle::ns_of(f, f3);
    if (result.found) {
      CHECK(ns > 0);
      CHECK(eval(f, result.zero, f3) == f3.zero());
      // minimality: earlier strips carry no zeros
      for (std::size_t i = 0; i + 1 < result.trace.size(); ++i)
        CHECK(oracle::n_strip(f, result.trace[i].strip, f3) == 0);
      const Strip last = result.trace.back().strip;
      CHECK(oracle::n_strip(f, last, f3) == result.trace.back().roots_found);
    } else {
      ++failures;
      CHECK(ns == 0);
      CHECK(result.searches == 3);
    }
  }
  CHECK(failures > 0);  // F_3, d <= 2 has rootless polynomials
}

TEST_CASE("op counting and the max_strips cap") {
  const FieldCtx f3 = FieldCtx::make(3, 1);
  const MultiPoly one = parse("1:0,0", f3);
  Rng rng(8);
  SvsOptions options;
  options.count_ops = true;
  options.max_strips = 2;
  const SvsResult result = svs_run(one, f3, rng, options);
  CHECK_FALSE(result.found);
  CHECK(result.searches == 2);
  REQUIRE(result.ops_used.has_value());
  CHECK(result.ops_used->muls > 0);
}

TEST_CASE("deterministic given the seed") {
  const FieldCtx f67 = FieldCtx::make(67, 1);
  auto basis = make_basis(2, 5);
  Rng sample_rng(77);
  const MultiPoly f = sample_poly(f67, basis, sample_rng);
  Rng a(123), b(123);
  const SvsResult ra = svs_run(f, f67, a);
  const SvsResult rb = svs_run(f, f67, b);
  CHECK(ra.found == rb.found);
  CHECK(ra.searches == rb.searches);
  CHECK(ra.zero == rb.zero);
}
