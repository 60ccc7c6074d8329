#include "svs/analytics.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "svs/errors.hpp"
#include "svs/poly.hpp"

namespace svs::analytics {
namespace {

void require_q_gt_d(std::uint64_t q, unsigned d) {
  if (q <= d)
    throw HypothesisViolation("theorem requires q > d (q = " +
                              std::to_string(q) +
                              ", d = " + std::to_string(d) + ")");
}

// exp(x) through cpp_bin_float when x would overflow a double
double safe_exp(double x) {
  if (x < 700.0) return std::exp(x);
  const BigFloat value = exp(BigFloat(x));
  return value.convert_to<double>();
}

bool odd_characteristic(std::uint64_t q) {
  // q = p^k has characteristic 2 exactly when q is even
  return (q & 1) != 0;
}

}  // namespace

std::string variant_name(Variant v) {
  return v == Variant::kCmpp ? "cmpp" : "mpp";
}

Variant parse_variant(const std::string& name) {
  if (name == "cmpp") return Variant::kCmpp;
  if (name == "mpp") return Variant::kMpp;
  throw InvalidArgument("unknown variant '" + name + "'");
}

Rational mu(unsigned d) {
  if (d < 1) throw InvalidArgument("mu needs d >= 1");
  Rational acc = 0;
  BigInt fact = 1;
  for (unsigned j = 1; j <= d; ++j) {
    fact *= j;
    if (j % 2 == 1) {
      acc += Rational(1, fact);
    } else {
      acc -= Rational(1, fact);
    }
  }
  return acc;
}

Rational p_hat(std::uint64_t s, unsigned d) {
  if (s < 1) throw InvalidArgument("p_hat needs s >= 1");
  const Rational m = mu(d);
  return pow_rational(1 - m, static_cast<std::int64_t>(s - 1)) * m;
}

Rational prob_c1_exact(std::uint64_t q, unsigned d) {
  require_q_gt_d(q, d);
  Rational acc = 0;
  const BigInt bq = q;
  for (unsigned j = 1; j <= d; ++j) {
    const Rational term(binomial(q, j), pow_bigint(bq, j));
    acc += (j % 2 == 1) ? term : -term;
  }
  const Rational last(binomial(q - 1, d), pow_bigint(bq, d + 1));
  acc += (d % 2 == 0) ? last : -last;
  return acc;
}

Rational two_strip_joint(std::uint64_t q, unsigned d) {
  require_q_gt_d(q, d);
  const Rational p1 = prob_c1_exact(q, d);
  const BigInt b = binomial(q - 1, d);
  const Rational correction(BigInt(q - 1) * b * b,
                            pow_bigint(BigInt(q), 2 * d + 2));
  return p1 * p1 + correction;
}

Rational p_exact_c2(std::uint64_t q, unsigned d) {
  return prob_c1_exact(q, d) - two_strip_joint(q, d);
}

std::uint64_t dj(int j, unsigned r) {
  if (j < 0) return 0;
  const BigInt value = binomial(static_cast<std::uint64_t>(j) + r - 1, r - 1);
  if (value >= (BigInt(1) << 63)) throw OverflowError("D_j overflows");
  return value.convert_to<std::uint64_t>();
}

unsigned kappa(std::uint64_t i, unsigned r) {
  if (i < 1) throw InvalidArgument("kappa needs i >= 1");
  unsigned j = 0;
  while (dj(static_cast<int>(j), r) < i) ++j;
  return j;
}

std::uint64_t s_star(unsigned r, unsigned d, Variant variant) {
  // d/2 is read as floor(d/2) for odd d (the conservative range)
  const std::uint64_t top =
      variant == Variant::kCmpp ? (d / 2 + r - 1) : (d + r - 3);
  const BigInt value = binomial(top, r - 1);
  if (value >= (BigInt(1) << 63)) throw OverflowError("s_star overflows");
  return value.convert_to<std::uint64_t>();
}

std::uint64_t dim_im_phi(std::uint64_t s, unsigned r, unsigned d) {
  if (s < 1 || s > dj(static_cast<int>(d), r))
    throw InvalidArgument("dim Im(Phi) needs 1 <= s <= D_d");
  const unsigned ks = kappa(s, r);
  // C(kappa_s - 1 + r, r); kappa_s may be 0, so add r before subtracting
  const BigInt closed = binomial(static_cast<std::uint64_t>(r) + ks - 1, r) +
                        BigInt(s) * (d - ks + 1);
  BigInt summed = 0;
  for (std::uint64_t i = 1; i <= s; ++i) summed += d + 1 - kappa(i, r);
  if (closed != summed)
    throw Error("dim Im(Phi): the two closed forms disagree");
  return closed.convert_to<std::uint64_t>();
}

BoundReport prob_cs_bound(std::uint64_t q, unsigned d, std::uint64_t s,
                          Variant variant, unsigned r) {
  require_q_gt_d(q, d);
  if (s < 1 || s > s_star(r, d, variant))
    throw HypothesisViolation("s = " + std::to_string(s) +
                              " outside the " + variant_name(variant) +
                              " range s <= s_star");
  if (variant == Variant::kMpp && !odd_characteristic(q))
    throw HypothesisViolation("the mpp bound needs odd characteristic");

  const auto qf = static_cast<double>(q);
  BoundReport report;
  report.center = to_double(p_hat(s, d));
  report.variant = variant_name(variant);
  if (variant == Variant::kCmpp) {
    const double middle =
        d <= 2 ? 0.0
               : safe_exp(5.0 * std::log(static_cast<double>(d) - 2) +
                          2.0 * std::sqrt(static_cast<double>(d)) -
                          (d - 1) * std::log(2.0));
    report.radius =
        (std::exp(-1.0) + middle + 1.0) / qf + 14.0 / (qf * qf);
  } else {
    const double df = d;
    const double first =
        safe_exp(2.0 * std::log(df) + df * std::log(2.0)) / std::sqrt(qf);
    const double second =
        266.0 * safe_exp((df + 5.0) * std::log(df) + 2.0 * std::sqrt(df) - df);
    report.radius = first + (second + 1.0) / qf;
  }
  return report;
}

double tail_prob(std::uint64_t s_star_value, unsigned d) {
  return std::pow(1.0 - to_double(mu(d)),
                  static_cast<double>(s_star_value));
}

Rational ns_mean(std::uint64_t q, unsigned r, unsigned d) {
  require_q_gt_d(q, d);
  const BigInt bq = q;
  Rational acc = 0;
  for (unsigned k = 1; k <= d; ++k) {
    // q^{r-1-k} as a rational to cover both signs of the exponent
    const Rational power =
        (r >= k + 1) ? Rational(pow_bigint(bq, r - 1 - k))
                     : Rational(1, pow_bigint(bq, k + 1 - r));
    const Rational term = Rational(binomial(q, k)) * power;
    acc += (k % 2 == 1) ? term : -term;
  }
  const Rational tail_power =
      (r >= d + 2) ? Rational(pow_bigint(bq, r - d - 2))
                   : Rational(1, pow_bigint(bq, d + 2 - r));
  const Rational last = Rational(binomial(q - 1, d)) * tail_power;
  acc += (d % 2 == 0) ? last : -last;

  // identity with the exact one-strip probability
  const Rational check =
      Rational(pow_bigint(bq, r - 1)) * prob_c1_exact(q, d);
  if (acc != check) throw Error("NS mean identity failed");
  return acc;
}

double ns_variance_leading(std::uint64_t q, unsigned r, unsigned d) {
  require_q_gt_d(q, d);
  const double md = to_double(mu(d));
  const double fact = factorial(d).convert_to<double>();
  return std::pow(static_cast<double>(q), 2.0 * r - 3.0) / (fact * fact) +
         md * (1.0 - md) * std::pow(static_cast<double>(q), r - 1.0);
}

double chebyshev_a_bound(double alpha, std::uint64_t q, unsigned r,
                         unsigned d) {
  if (!(alpha > 0.0
        && alpha < 1.0))
    throw InvalidArgument("alpha must lie in (0, 1)");
  const double md = to_double(mu(d));
  const double fact = factorial(d).convert_to<double>();
  const double qf = q;
  return 1.0 / (alpha * md * fact * alpha * md * fact * qf) +
         (1.0 - md) / (alpha * alpha * md) * std::pow(qf, 1.0 - r);
}

double expected_searches_bound(unsigned r, unsigned d) {
  if (r < 2 || d < 2)
    throw InvalidArgument("expected searches bound needs r >= 2, d >= 2");
  const double md = to_double(mu(d));
  if (r > 2) {
    const auto ss = static_cast<double>(s_star(r, d, Variant::kCmpp));
    return 1.0 / md + d * std::pow(1.0 - 1.0 / d, ss);
  }
  const double ss = static_cast<double>(d / 2 + 1);
  const double alpha_star = 1.0 - 1.0 / std::sqrt(ss);
  const double fact = factorial(d).convert_to<double>();
  return (1.0 / (alpha_star * alpha_star)) *
             ((1.0 - md) / md + 1.0 / (fact * fact * md * md)) +
         1.0 / md + std::pow(1.0 - md / std::sqrt(ss), ss + 1.0);
}

double cost_model_tau(unsigned d, unsigned r, std::uint64_t q, double c) {
  const double dim = svs::dim_f_exact(r, d).convert_to<double>();
  return dim + c * d * std::log2(static_cast<double>(q));
}

EntropyBounds entropy_bounds(std::uint64_t q, unsigned r, unsigned d) {
  EntropyBounds out;
  out.ideal_upper = (r - 1.0) * std::log(static_cast<double>(q));
  out.svs_lower_coeff = 1.0 / (2.0 * to_double(mu(d)));
  return out;
}

BoundReport valueset_bounds(std::uint64_t q, unsigned d, unsigned j,
                            Variant variant) {
  require_q_gt_d(q, d);
  const bool in_range = variant == Variant::kCmpp
                            ? (j >= 1 && d / 2 >= 1 && j <= d / 2 - 1)
                            : (j >= 1 && d >= 3 && j <= d - 3);
  if (!in_range)
    throw HypothesisViolation("j = " + std::to_string(j) + " outside the " +
                              variant_name(variant) + " range");
  if (variant == Variant::kMpp && !odd_characteristic(q))
    throw HypothesisViolation("the mpp bound needs odd characteristic");

  const auto qf = static_cast<double>(q);
  BoundReport report;
  report.center = to_double(mu(d)) * qf;
  report.variant = variant_name(variant);
  if (variant == Variant::kCmpp) {
    const double middle =
        d <= 2 ? 0.0
               : safe_exp(5.0 * std::log(static_cast<double>(d) - 2) +
                          2.0 * std::sqrt(static_cast<double>(d)) -
                          (d - 2) * std::log(2.0));
    report.radius = std::exp(-1.0) / 2.0 + middle + 7.0 / qf;
  } else {
    const double df = d;
    report.radius =
        safe_exp(2.0 * std::log(df) + (df - 1.0) * std::log(2.0)) *
            std::sqrt(qf) +
        133.0 * safe_exp((df + 5.0) * std::log(df) + 2.0 * std::sqrt(df) - df);
  }
  return report;
}

double bad_set_bound(std::uint64_t s, unsigned r, unsigned d,
                     std::uint64_t q) {
  if (s < 1) throw InvalidArgument("bad_set_bound needs s >= 1");
  (void)d;
  const unsigned ks = kappa(s, r);
  const auto qf = static_cast<double>(q);
  double acc = 0.0;
  for (unsigned j = 1; j <= ks; ++j) {
    const auto delta = static_cast<double>(j) * static_cast<double>(dj(j, r));
    acc += (delta - 1.0) * (delta - 2.0) * std::pow(qf, -1.5) +
           5.0 * std::pow(delta, 13.0 / 3.0) * std::pow(qf, -2.0);
  }
  return acc;
}

}  // namespace svs::analytics
