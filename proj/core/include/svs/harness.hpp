#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svs/oracle.hpp"
#include "svs/poly.hpp"
#include "svs/svs.hpp"

namespace svs::harness {

/// Configuration of one Monte Carlo reproduction run.
struct SimConfig {
  std::uint64_t p = 0;      ///< field characteristic
  unsigned k = 1;           ///< extension degree; q = p^k
  unsigned r = 2;
  unsigned d = 2;
  std::uint64_t samples = 100000;  ///< polynomials per strip sequence (M)
  unsigned strip_reps = 30;        ///< strip-sequence repetitions (N)
  unsigned s_max = 15;             ///< table depth
  std::uint64_t master_seed = 0;
  unsigned workers = 0;            ///< 0 = hardware concurrency
  /// Fresh polynomial sample per sequence by default; true shares one
  /// sample of M polynomials across all N sequences.
  bool shared_sample = false;
  /// Truncates every strip sequence to this many strips (default: the full
  /// q^{r-1} without-replacement sequence).
  std::optional<std::uint64_t> strip_cap;

  FieldCtx field() const;
  void validate() const;  ///< throws ConfigInvalidError
};

struct ReportRow {
  unsigned s = 0;
  double p_bar = 0;
  double p_hat = 0;
  double eps = 0;
};

/// Aggregated outcome. Raw integer counters are kept so that invariants
/// (mass balance, determinism across worker counts) can be checked exactly.
struct SimulationReport {
  SimConfig config;
  std::vector<ReportRow> rows;          // s = 1..s_max
  double n_bar = 0;                     // mean searches over successes
  double fail_rate = 0;                 // no zero within the sequence
  double tail_mass = 0;                 // success with s > s_max
  double inv_mu = 0;                    // 1/mu_d reference bound
  double elapsed_seconds = 0;

  std::vector<std::uint64_t> counts;    // counts[s-1], s = 1..s_max
  std::uint64_t tail_count = 0;
  std::uint64_t fail_count = 0;
  std::uint64_t success_count = 0;
  std::uint64_t total_runs = 0;
  std::uint64_t search_sum = 0;
};

/// Runs the protocol: N independently drawn without-replacement strip
/// sequences; for each, C_a is measured on M uniformly sampled polynomials
/// (fresh per sequence unless shared_sample). p_bar(s) averages the
/// per-sequence frequencies of C_a = s. Deterministic for a fixed
/// master_seed and any worker count: every (sequence, polynomial) pair owns
/// an RNG stream derived by hashing its indices, and aggregation uses exact
/// integer counters.
SimulationReport simulate(const SimConfig& config);

enum class Format { kCsv, kMarkdown };

/// CSV: header `s,p_bar,p_hat,eps`, one row per s at 6 decimal places,
/// then summary lines `n_bar,...`, `fail_rate,...`, `inv_mu,...`.
/// Markdown mirrors the same table shape.
std::string render_report(const SimulationReport& report, Format format);

struct ParsedReport {
  std::vector<ReportRow> rows;
  double n_bar = 0;
  double fail_rate = 0;
  double inv_mu = 0;
};
ParsedReport parse_report_csv(const std::string& text);

/// Runs svs_run `trials` times on F; returns output points with their
/// frequencies (normalized by the number of trials), sorted by point.
std::vector<std::pair<std::vector<Elem>, double>> empirical_output_dist(
    const MultiPoly& f, const FieldCtx& ctx, std::uint64_t trials, Rng& rng);

struct EntropyReport {
  double h_mean = 0;        ///< mean of exact H_F over the sample
  double h_ideal_mean = 0;  ///< mean of log N(F) (0 when N(F) = 0)
  bool per_poly_bound_ok = true;  ///< H_F <= log N(F) held for every sample
  std::uint64_t samples = 0;
};

/// Mean exact entropy over `samples` polynomials drawn from the config's
/// seed; the comparison side scans F_q^r, so q^r must fit the guard.
EntropyReport empirical_entropy(const SimConfig& config,
                                const oracle::EnumGuard& guard = {});

/// Same statistic over an explicit list of polynomials.
EntropyReport mean_exact_entropy(std::span<const MultiPoly> polys,
                                 const FieldCtx& ctx,
                                 const oracle::EnumGuard& guard = {});

}  // namespace svs::harness
