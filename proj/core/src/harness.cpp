#include "svs/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "svs/analytics.hpp"

namespace svs::harness {
namespace {

using u64 = std::uint64_t;

// stream tags; distinct per purpose so streams never collide
constexpr u64 kTagStrips = 0x5354524950ull;   // strip sequences
constexpr u64 kTagPoly = 0x504f4c59ull;       // per-(sequence, poly)
constexpr u64 kTagShared = 0x5348415245ull;   // shared-sample polynomials
constexpr u64 kTagEntropy = 0x454e54ull;      // entropy sampling

struct Counters {
  std::vector<u64> by_s;  // by_s[s-1] for s <= s_max
  u64 tail = 0;
  u64 fail = 0;
  u64 search_sum = 0;
  u64 success = 0;

  explicit Counters(unsigned s_max) : by_s(s_max, 0) {}
  void merge(const Counters& other) {
    for (std::size_t i = 0; i < by_s.size(); ++i) by_s[i] += other.by_s[i];
    tail += other.tail;
    fail += other.fail;
    search_sum += other.search_sum;
    success += other.success;
  }
  void record(bool found, u64 searches, unsigned s_max) {
    if (!found) {
      ++fail;
      return;
    }
    ++success;
    search_sum += searches;
    if (searches <= s_max) {
      ++by_s[searches - 1];
    } else {
      ++tail;
    }
  }
};

// Field-op functors let the per-run kernel compile once against raw lookup
// tables and once against the generic context.
struct LutOps {
  const std::uint16_t* mul;
  const std::uint16_t* add;
  u64 q;
  u64 mul_op(u64 a, u64 b) const { return mul[a * q + b]; }
  u64 add_op(u64 a, u64 b) const { return add[a * q + b]; }
};

struct GenericOps {
  const FieldCtx* ctx;
  u64 q;
  u64 mul_op(u64 a, u64 b) const { return ctx->mul(Elem{a}, Elem{b}).idx; }
  u64 add_op(u64 a, u64 b) const { return ctx->add(Elem{a}, Elem{b}).idx; }
};

// flat basis layout for the specialization kernel
struct KernelBasis {
  std::vector<std::uint32_t> head;  // head index per monomial rank
  std::vector<std::uint32_t> tail;  // X_r exponent per monomial rank
  std::size_t dim = 0;
  std::size_t head_size = 0;
  unsigned d = 0;

  explicit KernelBasis(const MonomialBasis& basis)
      : dim(basis.size()), head_size(basis.head_size()), d(basis.d()) {
    head.resize(dim);
    tail.resize(dim);
    for (std::size_t m = 0; m < dim; ++m) {
      head[m] = basis.head_index(m);
      tail[m] = basis.tail_exp(m);
    }
  }
};

// head monomial values for every strip index, flattened
std::vector<u64> build_head_table(const MonomialBasis& basis,
                                  const FieldCtx& ctx, u64 strip_count) {
  std::vector<u64> table(strip_count * basis.head_size());
  std::vector<Elem> row(basis.head_size());
  for (u64 s = 0; s < strip_count; ++s) {
    const Strip a = strip_from_index(s, ctx.q(), basis.r());
    strip_head_values(basis, a.coords, ctx, row);
    for (std::size_t h = 0; h < row.size(); ++h)
      table[s * basis.head_size() + h] = row[h].idx;
  }
  return table;
}

/// C_a(F) for one sampled polynomial on a fixed sequence: 0 means no strip
/// in the sequence had a root. Only existence is needed, so the root scan
/// exits at the first zero found.
template <typename Ops>
u64 first_success(const Ops& ops, const KernelBasis& kb,
                  std::span<const u64> coeffs, std::span<const u64> head_table,
                  std::span<const std::uint32_t> sequence,
                  std::span<u64> spec) {
  const unsigned d = kb.d;
  for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
    const u64* hv = head_table.data() +
                    static_cast<std::size_t>(sequence[pos]) * kb.head_size;
    for (unsigned t = 0; t <= d; ++t) spec[t] = 0;
    for (std::size_t m = 0; m < kb.dim; ++m) {
      const u64 c = coeffs[m];
      if (c == 0) continue;
      u64& slot = spec[kb.tail[m]];
      slot = ops.add_op(slot, ops.mul_op(c, hv[kb.head[m]]));
    }
    bool zero_poly = true;
    for (unsigned t = 0; t <= d; ++t) {
      if (spec[t] != 0) {
        zero_poly = false;
        break;
      }
    }
    if (zero_poly) return pos + 1;
    for (u64 t = 0; t < ops.q; ++t) {
      u64 acc = 0;
      for (unsigned i = d + 1; i-- > 0;) acc = ops.add_op(ops.mul_op(acc, t), spec[i]);
      if (acc == 0) return pos + 1;
    }
  }
  return 0;
}

template <typename Ops>
void run_chunk(const Ops& ops, const KernelBasis& kb, const SimConfig& cfg,
               std::span<const u64> head_table,
               std::span<const std::uint32_t> sequence, unsigned seq_index,
               u64 m_begin, u64 m_end, Counters& counters) {
  std::vector<u64> coeffs(kb.dim);
  std::vector<u64> spec(kb.d + 1);
  for (u64 m = m_begin; m < m_end; ++m) {
    Rng rng = cfg.shared_sample
                  ? make_rng(cfg.master_seed, kTagShared, m)
                  : make_rng(cfg.master_seed, kTagPoly, seq_index, m);
    for (u64& c : coeffs) c = uniform_below(rng, ops.q);
    const u64 s = first_success(ops, kb, coeffs, head_table, sequence, spec);
    counters.record(s != 0, s, cfg.s_max);
  }
}

}  // namespace

FieldCtx SimConfig::field() const { return FieldCtx::make(p, k); }

void SimConfig::validate() const {
  try {
    (void)field();
  } catch (const Error& e) {
    throw ConfigInvalidError(std::string("bad field: ") + e.what());
  }
  if (r < 2) throw ConfigInvalidError("simulation needs r >= 2");
  if (d < 1) throw ConfigInvalidError("simulation needs d >= 1");
  if (samples < 1) throw ConfigInvalidError("samples must be >= 1");
  if (strip_reps < 1) throw ConfigInvalidError("strip_reps must be >= 1");
  if (s_max < 1) throw ConfigInvalidError("s_max must be >= 1");
  const FieldCtx ctx = field();
  u64 space = 1;
  for (unsigned i = 0; i + 1 < r; ++i) {
    if (space > StripSampler::kShuffleMax / ctx.q())
      throw ConfigInvalidError(
          "strip space q^{r-1} too large to materialize sequences (max 2^20)");
    space *= ctx.q();
  }
  if (strip_cap && *strip_cap < 1)
    throw ConfigInvalidError("strip_cap must be >= 1 when set");
}

SimulationReport simulate(const SimConfig& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const FieldCtx ctx = cfg.field();
  const auto basis = make_basis(cfg.r, cfg.d);
  const KernelBasis kb(*basis);

  u64 strip_count = 1;
  for (unsigned i = 0; i + 1 < cfg.r; ++i) strip_count *= ctx.q();
  const u64 seq_len =
      cfg.strip_cap ? std::min(*cfg.strip_cap, strip_count) : strip_count;

  // one shared table of head monomial values, indexed by raw strip index
  const std::vector<u64> head_table =
      build_head_table(*basis, ctx, strip_count);

  // the N strip sequences, drawn up front so every worker sees the same
  // order regardless of scheduling
  std::vector<std::vector<std::uint32_t>> sequences(cfg.strip_reps);
  for (unsigned i = 0; i < cfg.strip_reps; ++i) {
    Rng rng = make_rng(cfg.master_seed, kTagStrips, i);
    StripSampler sampler(ctx, cfg.r, rng);
    sequences[i].reserve(seq_len);
    for (u64 j = 0; j < seq_len; ++j)
      sequences[i].push_back(static_cast<std::uint32_t>(sampler.next_index()));
  }

  // task list: (sequence, polynomial range)
  struct Task {
    unsigned seq;
    u64 m_begin, m_end;
  };
  constexpr u64 kChunk = 2048;
  std::vector<Task> tasks;
  for (unsigned i = 0; i < cfg.strip_reps; ++i) {
    for (u64 m = 0; m < cfg.samples; m += kChunk)
      tasks.push_back(Task{i, m, std::min(m + kChunk, cfg.samples)});
  }

  unsigned workers = cfg.workers != 0
                         ? cfg.workers
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, tasks.size()));

  std::vector<Counters> partials(workers, Counters(cfg.s_max));
  std::atomic<std::size_t> next_task{0};
  auto work = [&](unsigned w) {
    Counters& local = partials[w];
    while (true) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= tasks.size()) break;
      const Task& task = tasks[t];
      if (ctx.has_lut()) {
        const LutOps ops{ctx.mul_lut(), ctx.add_lut(), ctx.q()};
        run_chunk(ops, kb, cfg, head_table, sequences[task.seq], task.seq,
                  task.m_begin, task.m_end, local);
      } else {
        const GenericOps ops{&ctx, ctx.q()};
        run_chunk(ops, kb, cfg, head_table, sequences[task.seq], task.seq,
                  task.m_begin, task.m_end, local);
      }
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  Counters total(cfg.s_max);
  for (const Counters& c : partials) total.merge(c);

  SimulationReport report;
  report.config = cfg;
  report.counts = total.by_s;
  report.tail_count = total.tail;
  report.fail_count = total.fail;
  report.success_count = total.success;
  report.search_sum = total.search_sum;
  report.total_runs =
      static_cast<u64>(cfg.strip_reps) * cfg.samples;

  const double runs = static_cast<double>(report.total_runs);
  const Rational mu = analytics::mu(cfg.d);
  report.inv_mu = to_double(1 / mu);
  report.rows.reserve(cfg.s_max);
  for (unsigned s = 1; s <= cfg.s_max; ++s) {
    ReportRow row;
    row.s = s;
    row.p_bar = static_cast<double>(total.by_s[s - 1]) / runs;
    row.p_hat = to_double(analytics::p_hat(s, cfg.d));
    row.eps = std::abs(row.p_bar - row.p_hat) / row.p_hat;
    report.rows.push_back(row);
  }
  report.tail_mass = static_cast<double>(total.tail) / runs;
  report.fail_rate = static_cast<double>(total.fail) / runs;
  report.n_bar = total.success == 0
                     ? 0.0
                     : static_cast<double>(total.search_sum) /
                           static_cast<double>(total.success);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::string render_report(const SimulationReport& report, Format format) {
  char buf[160];
  std::string out;
  if (format == Format::kCsv) {
    out += "s,p_bar,p_hat,eps\n";
    for (const ReportRow& row : report.rows) {
      std::snprintf(buf, sizeof buf, "%u,%.6f,%.6f,%.6f\n", row.s, row.p_bar,
                    row.p_hat, row.eps);
      out += buf;
    }
    std::snprintf(buf, sizeof buf, "n_bar,%.6f\nfail_rate,%.6f\ninv_mu,%.6f\n",
                  report.n_bar, report.fail_rate, report.inv_mu);
    out += buf;
    return out;
  }
  out += "| s | p_bar | p_hat | eps |\n";
  out += "|--:|------:|------:|----:|\n";
  for (const ReportRow& row : report.rows) {
    std::snprintf(buf, sizeof buf, "| %u | %.6f | %.6f | %.6f |\n", row.s,
                  row.p_bar, row.p_hat, row.eps);
    out += buf;
  }
  std::snprintf(buf, sizeof buf,
                "\nn_bar = %.6f\nfail_rate = %.6f\ninv_mu = %.6f\n",
                report.n_bar, report.fail_rate, report.inv_mu);
  out += buf;
  return out;
}

ParsedReport parse_report_csv(const std::string& text) {
  ParsedReport out;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "s,p_bar,p_hat,eps")
    throw ParseError("missing report header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("bad report line");
    const std::string key = line.substr(0, comma);
    const std::string rest = line.substr(comma + 1);
    if (key == "n_bar") {
      out.n_bar = std::stod(rest);
    } else if (key == "fail_rate") {
      out.fail_rate = std::stod(rest);
    } else if (key == "inv_mu") {
      out.inv_mu = std::stod(rest);
    } else {
      ReportRow row;
      row.s = static_cast<unsigned>(std::stoul(key));
      char* end = nullptr;
      row.p_bar = std::strtod(rest.c_str(), &end);
      row.p_hat = std::strtod(end + 1, &end);
      row.eps = std::strtod(end + 1, &end);
      out.rows.push_back(row);
    }
  }
  return out;
}

std::vector<std::pair<std::vector<Elem>, double>> empirical_output_dist(
    const MultiPoly& f, const FieldCtx& ctx, std::uint64_t trials, Rng& rng) {
  if (trials < 1) throw InvalidArgument("need at least one trial");
  SvsOptions options;
  options.record_trace = false;
  std::map<std::vector<Elem>, u64> counts;
  for (u64 t = 0; t < trials; ++t) {
    const SvsResult result = svs_run(f, ctx, rng, options);
    if (result.found) ++counts[result.zero];
  }
  std::vector<std::pair<std::vector<Elem>, double>> out;
  out.reserve(counts.size());
  for (const auto& [point, count] : counts)
    out.emplace_back(point,
                     static_cast<double>(count) / static_cast<double>(trials));
  return out;
}

EntropyReport mean_exact_entropy(std::span<const MultiPoly> polys,
                                 const FieldCtx& ctx,
                                 const oracle::EnumGuard& guard) {
  EntropyReport report;
  report.samples = polys.size();
  if (polys.empty()) return report;
  double h_sum = 0, ideal_sum = 0;
  for (const MultiPoly& f : polys) {
    const double h = oracle::exact_entropy(f, ctx, guard);
    const u64 n = oracle::n_of(f, ctx, guard);
    const double ideal = n == 0 ? 0.0 : std::log(static_cast<double>(n));
    if (h > ideal + 1e-9) report.per_poly_bound_ok = false;
    h_sum += h;
    ideal_sum += ideal;
  }
  report.h_mean = h_sum / static_cast<double>(polys.size());
  report.h_ideal_mean = ideal_sum / static_cast<double>(polys.size());
  return report;
}

EntropyReport empirical_entropy(const SimConfig& cfg,
                                const oracle::EnumGuard& guard) {
  cfg.validate();
  const FieldCtx ctx = cfg.field();
  guard.check(pow_bigint(BigInt(ctx.q()), cfg.r), "empirical_entropy");
  const auto basis = make_basis(cfg.r, cfg.d);
  std::vector<MultiPoly> polys;
  polys.reserve(cfg.samples);
  for (u64 m = 0; m < cfg.samples; ++m) {
    Rng rng = make_rng(cfg.master_seed, kTagEntropy, m);
    polys.push_back(sample_poly(ctx, basis, rng));
  }
  return mean_exact_entropy(polys, ctx, guard);
}

}  // namespace svs::harness
