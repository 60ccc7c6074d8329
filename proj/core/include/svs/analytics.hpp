#pragma once

#include <cstdint>
#include <string>

#include "svs/rational.hpp"

namespace svs::analytics {

/// Main term plus error-bound magnitude of an asymptotic statement.
struct BoundReport {
  double center = 0;
  double radius = 0;
  std::string variant;
};

/// Which value-set estimate backs a bound: cmpp covers every characteristic
/// with s (or j) confined near d/2, mpp reaches further but needs odd
/// characteristic.
enum class Variant { kCmpp, kMpp };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& name);

/// mu_d = sum_{j=1..d} (-1)^{j-1}/j!, the limit probability that a random
/// univariate polynomial of degree <= d has a rational root.
Rational mu(unsigned d);

/// Geometric prediction p_hat(s) = (1 - mu_d)^{s-1} mu_d.
Rational p_hat(std::uint64_t s, unsigned d);

/// Exact P[C_1 = 1] = sum_{j=1..d} (-1)^{j-1} C(q,j) q^{-j}
///                    + (-1)^d C(q-1,d) q^{-d-1}, for q > d.
/// Depends only on (q, d), not on r.
Rational prob_c1_exact(std::uint64_t q, unsigned d);

/// Exact fraction of polynomials with rational zeros on both of two fixed
/// distinct strips: (P[C_1=1])^2 + (q-1) q^{-2d-2} C(q-1,d)^2.
Rational two_strip_joint(std::uint64_t q, unsigned d);

/// Exact probability of success exactly at the second of two fixed distinct
/// strips: prob_c1_exact - two_strip_joint.
Rational p_exact_c2(std::uint64_t q, unsigned d);

/// D_j = C(j+r-1, r-1), the number of monomials of degree <= j in r-1
/// variables; D_{-1} = 0.
std::uint64_t dj(int j, unsigned r);

/// kappa_i: the unique j >= 0 with D_{j-1} < i <= D_j (i >= 1).
unsigned kappa(std::uint64_t i, unsigned r);

/// Largest s covered by a variant: C(floor(d/2)+r-1, r-1) for cmpp,
/// C(d+r-3, r-1) for mpp.
std::uint64_t s_star(unsigned r, unsigned d, Variant variant);

/// dim Im(Phi) = C(kappa_s-1+r, r) + s(d-kappa_s+1); the equal form
/// sum_{i=1..s} (d+1-kappa_i) is evaluated too and both are checked against
/// each other. Requires s <= D_d.
std::uint64_t dim_im_phi(std::uint64_t s, unsigned r, unsigned d);

/// |p[C_a=s] - p_hat(s)| bound for generic strips. cmpp radius:
/// (e^{-1} + (d-2)^5 e^{2 sqrt d} / 2^{d-1} + 1)/q + 14/q^2;
/// mpp radius: d^2 2^d q^{-1/2} + (266 d^{d+5} e^{2 sqrt d - d} + 1)/q.
/// Hypotheses: q > d, s <= s_star(r, d, variant), and odd characteristic
/// for mpp.
BoundReport prob_cs_bound(std::uint64_t q, unsigned d, std::uint64_t s,
                          Variant variant, unsigned r = 2);

/// Main term (1 - mu_d)^{s_star} of the tail probability P[C_a > s_star].
double tail_prob(std::uint64_t s_star_value, unsigned d);

/// Exact mean number of strips carrying a zero:
/// NS(r,d) = sum_{k=1..d} (-1)^{k-1} C(q,k) q^{r-1-k}
///           + (-1)^d C(q-1,d) q^{r-d-2}; equals q^{r-1} prob_c1_exact.
Rational ns_mean(std::uint64_t q, unsigned r, unsigned d);

/// Leading terms of the NS variance: q^{2r-3}/(d!)^2 + mu_d(1-mu_d) q^{r-1}.
double ns_variance_leading(std::uint64_t q, unsigned r, unsigned d);

/// Chebyshev bound on the probability that NS(F) <= (1-alpha) NS(r,d):
/// (alpha mu_d d!)^{-2} / q + (1-mu_d)/(alpha^2 mu_d) q^{1-r}.
double chebyshev_a_bound(double alpha, std::uint64_t q, unsigned r,
                         unsigned d);

/// Strip-count factor of the average-case bound (the cost model tau is kept
/// separate). r > 2: 1/mu_d + d (1 - 1/d)^{s*} with s* = s_star(r,d,cmpp);
/// r = 2: (1/alpha*^2)((1-mu_d)/mu_d + 1/((d!)^2 mu_d^2)) + 1/mu_d
///        + (1 - mu_d/sqrt(s*))^{s*+1}, s* = floor(d/2)+1,
///        alpha* = 1 - 1/sqrt(s*).
double expected_searches_bound(unsigned r, unsigned d);

/// Adopted concrete cost model for one strip search, in field
/// multiplications: tau = D + c d log2(q).
double cost_model_tau(unsigned d, unsigned r, std::uint64_t q, double c = 1.0);

struct EntropyBounds {
  double ideal_upper;     // log(q^{r-1})
  double svs_lower_coeff; // 1/(2 mu_d)
};
EntropyBounds entropy_bounds(std::uint64_t q, unsigned r, unsigned d);

/// |V_d(j, a) - mu_d q| bound. cmpp (1 <= j <= floor(d/2)-1):
/// e^{-1}/2 + (d-2)^5 e^{2 sqrt d}/2^{d-2} + 7/q; mpp (p > 2,
/// 1 <= j <= d-3): d^2 2^{d-1} sqrt(q) + 133 d^{d+5} e^{2 sqrt d - d}.
BoundReport valueset_bounds(std::uint64_t q, unsigned d, unsigned j,
                            Variant variant);

/// Deviation-term bound on the non-generic fraction of strip tuples,
/// summed over j = 1..kappa_s with delta_j = j D_j:
/// sum_j (delta_j-1)(delta_j-2) q^{-3/2} + 5 delta_j^{13/3} q^{-2}.
/// kappa_1 = 0, so one strip has no genericity condition and the bound is 0.
double bad_set_bound(std::uint64_t s, unsigned r, unsigned d,
                     std::uint64_t q);

}  // namespace svs::analytics
