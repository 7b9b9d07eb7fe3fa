#pragma once

// Seeded Monte Carlo experiments: the Bernstein-model root table, separation
// probabilities, straightened-root uniformity, expected counts and solver
// instrumentation. Every trial owns a derived seed, so results do not depend
// on how trials are scheduled across worker threads.

#include "bernstein.hpp"
#include "isolator.hpp"
#include "randgen.hpp"
#include "stats.hpp"
#include "sturm.hpp"
#include "theory.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace rootstat {

// -- Tables -----------------------------------------------------------------

/// Header plus rows of preformatted cells; the single output format for
/// CSV and JSON emission.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const {
    std::ostringstream os;
    auto line = [&os](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
  }
};

inline std::string fmt(double x, int digits = 6) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

inline std::string fmt_g(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// -- Work pool --------------------------------------------------------------

/// results[i] = f(i) for i < n on `jobs` threads; order is by index.
template <class F>
auto parallel_map(std::size_t n, int jobs, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<int>(jobs, static_cast<int>(n)); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

struct ExperimentConfig {
  RandomModel model = RandomModel::BernsteinStd;
  std::vector<int> degrees{100, 150, 200, 300};
  int trials = 100;
  std::uint64_t seed = 42;
  int jobs = 1;
  double c = 1.0;  // exponent in l = 1 / (d^c tau)
  CounterMethod counter = CounterMethod::Sturm;
  bool timings = false;  // wall-clock columns break byte-reproducibility

  void validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (degrees.empty()) throw std::invalid_argument("at least one degree is required");
    for (int d : degrees)
      if (d < 1) throw std::invalid_argument("degrees must be >= 1");
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  }
};

/// Trial stream index for resample attempt a of trial t.
inline std::uint64_t attempt_index(std::uint64_t trial, int attempt) {
  return trial + (static_cast<std::uint64_t>(attempt) << 32);
}

/// Exact count of distinct real roots in the open interval (lo, hi), whose
/// endpoints must not be roots; A squarefree.
inline int count_open(const IntPolynomial& a, const Dyadic& lo, const Dyadic& hi, CounterMethod method,
                      const SturmSequence* sturm = nullptr) {
  if (!(lo < hi)) return 0;
  if (method == CounterMethod::Sturm) {
    if (sturm) return sturm->variations_at(lo) - sturm->variations_at(hi);
    SturmSequence s(a);
    return s.variations_at(lo) - s.variations_at(hi);
  }
  IsolateOptions o;
  o.check_squarefree = false;
  return static_cast<int>(isolate(a, DyadicInterval(lo, hi), method, o).roots.size());
}

// -- Table 1 ----------------------------------------------------------------

/// Per-trial integers. Columns follow the z-side intervals of the Bernstein
/// polynomial: (-inf,-1), (-1,0), (0,1), (1,inf).
struct Table1Trial {
  int d = 0;
  std::uint64_t trial = 0;
  int resamples = 0;
  int total = 0;
  std::array<int, 4> counts{};
};

/// One Bernstein-model trial. Roots z of the Bernstein form correspond to
/// roots y = z/(1-z) of the power form: z in (-inf,-1) <-> y in (-1,-1/2),
/// (-1,0) <-> (-1/2,0), (0,1) <-> (0,inf), (1,inf) <-> (-inf,-1).
inline Table1Trial table1_trial(RandomModel model, int d, std::uint64_t seed, std::uint64_t trial,
                                CounterMethod counter) {
  Table1Trial out;
  out.d = d;
  out.trial = trial;
  const Dyadic m1(-1), mhalf(Integer(-1), -1), zero(0);
  for (int attempt = 0;; ++attempt) {
    if (attempt > 100) throw std::runtime_error("table1: too many degenerate samples");
    auto sample = sample_polynomial(model, d, seed, attempt_index(trial, attempt));
    BernsteinPolynomial b = exact_bernstein(sample);
    if (b.coeffs.front() == 0 || b.coeffs.back() == 0) {
      ++out.resamples;
      continue;
    }
    IntPolynomial p = bernstein_to_power(b);
    if (p.degree() < 1 || sign_at(p, m1) == 0 || sign_at(p, mhalf) == 0 || sign_at(p, zero) == 0) {
      ++out.resamples;
      continue;
    }
    if (!is_squarefree(p)) p = squarefree_part(p);
    DyadicInterval all = root_bound_interval(p);
    const Dyadic lo = std::min(all.lo, Dyadic(-2));
    const Dyadic hi = std::max(all.hi, Dyadic(1));
    if (counter == CounterMethod::Sturm) {
      SturmSequence s(p);
      int v_minf = s.variations_at_infinity(-1), v_pinf = s.variations_at_infinity(+1);
      int v_m1 = s.variations_at(m1), v_mh = s.variations_at(mhalf), v_0 = s.variations_at(zero);
      out.counts = {v_m1 - v_mh, v_mh - v_0, v_0 - v_pinf, v_minf - v_m1};
      out.total = v_minf - v_pinf;
    } else {
      out.counts = {count_open(p, m1, mhalf, counter), count_open(p, mhalf, zero, counter),
                    count_open(p, zero, hi, counter), count_open(p, lo, m1, counter)};
      out.total = static_cast<int>(isolate_real_roots(p, counter, {.check_squarefree = false}).roots.size());
    }
    int sum = out.counts[0] + out.counts[1] + out.counts[2] + out.counts[3];
    if (sum != out.total) throw std::logic_error("table1: interval counts do not sum to the total");
    return out;
  }
}

struct Table1Row {
  int d = 0;
  double pred_sqrt2d = 0;
  double mean_total = 0;
  double sd_total = 0;
  std::array<double, 4> mean{};
  std::array<double, 4> sd{};
  int trials = 0;
  int resamples = 0;
  std::uint64_t seed = 0;
};

struct Table1Result {
  std::vector<Table1Trial> raw;
  std::vector<Table1Row> rows;
};

/// Aggregates per-trial records, one row per degree in order of first appearance.
inline std::vector<Table1Row> aggregate_table1(const std::vector<Table1Trial>& raw, std::uint64_t seed) {
  std::vector<int> order;
  std::map<int, std::vector<const Table1Trial*>> by_d;
  for (const auto& t : raw) {
    if (!by_d.count(t.d)) order.push_back(t.d);
    by_d[t.d].push_back(&t);
  }
  std::vector<Table1Row> rows;
  for (int d : order) {
    const auto& ts = by_d[d];
    Table1Row r;
    r.d = d;
    r.pred_sqrt2d = std::sqrt(2.0 * d);
    r.trials = static_cast<int>(ts.size());
    r.seed = seed;
    std::vector<double> tot;
    std::array<std::vector<double>, 4> cols;
    for (const auto* t : ts) {
      tot.push_back(t->total);
      for (int k = 0; k < 4; ++k) cols[static_cast<std::size_t>(k)].push_back(t->counts[static_cast<std::size_t>(k)]);
      r.resamples += t->resamples;
    }
    r.mean_total = mean(tot);
    r.sd_total = sample_sd(tot);
    for (std::size_t k = 0; k < 4; ++k) {
      r.mean[k] = mean(cols[k]);
      r.sd[k] = sample_sd(cols[k]);
    }
    rows.push_back(r);
  }
  return rows;
}

inline Table1Result run_table1(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Job {
    int d;
    std::uint64_t trial;
  };
  std::vector<Job> jobs;
  for (int d : cfg.degrees)
    for (int t = 0; t < cfg.trials; ++t) jobs.push_back({d, static_cast<std::uint64_t>(t)});
  Table1Result res;
  res.raw = parallel_map(jobs.size(), cfg.jobs, [&](std::size_t i) {
    return table1_trial(cfg.model, jobs[i].d, cfg.seed, jobs[i].trial, cfg.counter);
  });
  res.rows = aggregate_table1(res.raw, cfg.seed);
  return res;
}

inline Table table1_table(const std::vector<Table1Row>& rows) {
  Table t;
  t.header = {"d", "pred_sqrt2d", "mean_total", "sd_total", "mean_m_inf_m1", "mean_m1_0", "mean_0_1", "mean_1_inf", "trials", "seed"};
  for (const auto& r : rows) {
    t.rows.push_back({std::to_string(r.d), fmt(r.pred_sqrt2d, 3), fmt(r.mean_total, 3), fmt(r.sd_total, 3), fmt(r.mean[0], 3),
                      fmt(r.mean[1], 3), fmt(r.mean[2], 3), fmt(r.mean[3], 3), std::to_string(r.trials), std::to_string(r.seed)});
  }
  return t;
}

inline Table table1_raw_table(const std::vector<Table1Trial>& raw) {
  Table t;
  t.header = {"d", "trial", "resamples", "total", "m_inf_m1", "m1_0", "0_1", "1_inf"};
  for (const auto& r : raw) {
    t.rows.push_back({std::to_string(r.d), std::to_string(r.trial), std::to_string(r.resamples), std::to_string(r.total),
                      std::to_string(r.counts[0]), std::to_string(r.counts[1]), std::to_string(r.counts[2]),
                      std::to_string(r.counts[3])});
  }
  return t;
}

// -- Real roots of sampled power-basis polynomials -------------------------

/// Binary exponent s with 2^s near the root scale of the model, used to keep
/// exactified Weyl coefficients balanced (x = 2^s y).
inline long root_scale_shift(RandomModel model, int d) {
  if (model != RandomModel::Weyl) return 0;
  return static_cast<long>(std::lround(0.5 * std::log2(static_cast<double>(d))));
}

/// Real roots (as doubles, ascending) of a power-basis sample, isolated
/// exactly and refined to width 2^-refine_bits in the scaled variable.
inline std::vector<double> sample_real_roots(const RealPolynomial& sample, long shift, CounterMethod method, int refine_bits = 40) {
  IntPolynomial p = exactify(sample, shift);
  if (!is_squarefree(p)) p = squarefree_part(p);
  auto iso = isolate_real_roots(p, method, {.check_squarefree = false});
  Rational eps(1);
  eps /= Rational(pow(Integer(2), static_cast<unsigned long>(refine_bits)));
  std::vector<double> roots;
  for (const auto& r : iso.roots) {
    RootInterval f = refine(p, r, eps);
    roots.push_back(std::ldexp(f.interval.mid().to_double(), static_cast<int>(shift)));
  }
  return roots;
}

// -- Separation probability -------------------------------------------------

struct SepTrial {
  std::uint64_t trial = 0;
  int roots = 0;
  double min_gap = NAN;  // straightened; NaN when fewer than 2 roots
  double mean_gap = NAN;
};

inline SepTrial sep_trial(RandomModel model, int d, std::uint64_t seed, std::uint64_t trial, CounterMethod method) {
  SepTrial out;
  out.trial = trial;
  auto sample = sample_polynomial(model, d, seed, trial);
  auto roots = sample_real_roots(sample, root_scale_shift(model, d), method);
  out.roots = static_cast<int>(roots.size());
  if (roots.size() < 2) return out;
  std::vector<double> z;
  for (double a : roots) z.push_back(straighten(model, d, a));
  double m = INFINITY;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) m = std::min(m, z[i + 1] - z[i]);
  out.min_gap = m;
  out.mean_gap = (z.back() - z.front()) / static_cast<double>(z.size() - 1);
  return out;
}

struct SepRow {
  double l = 0;
  double empirical = 0;
  double predicted = 0;
  double se = 0;  // binomial standard error at the predicted probability
  int used = 0;
  int skipped = 0;
};

struct SepResult {
  int d = 0;
  RandomModel model = RandomModel::SO2;
  std::vector<SepTrial> raw;
  std::vector<SepRow> rows;
  double mean_min_gap = NAN;
  double mean_gap = NAN;
  double mean_roots = NAN;
};

inline SepResult run_sep(const ExperimentConfig& cfg, int d, const std::vector<double>& l_grid) {
  cfg.validate();
  if (cfg.model != RandomModel::SO2 && cfg.model != RandomModel::Weyl) throw std::invalid_argument("sep: model must be so2 or weyl");
  SepResult res;
  res.d = d;
  res.model = cfg.model;
  CounterMethod method = cfg.counter == CounterMethod::Sturm ? CounterMethod::Descartes : cfg.counter;
  res.raw = parallel_map(static_cast<std::size_t>(cfg.trials), cfg.jobs, [&](std::size_t i) {
    return sep_trial(cfg.model, d, cfg.seed, static_cast<std::uint64_t>(i), method);
  });
  std::vector<double> gaps, means, counts;
  int skipped = 0;
  for (const auto& t : res.raw) {
    counts.push_back(t.roots);
    if (std::isnan(t.min_gap)) {
      ++skipped;
      continue;
    }
    gaps.push_back(t.min_gap);
    means.push_back(t.mean_gap);
  }
  res.mean_roots = mean(counts);
  if (!gaps.empty()) {
    res.mean_min_gap = mean(gaps);
    res.mean_gap = mean(means);
  }
  for (double l : l_grid) {
    SepRow r;
    r.l = l;
    r.used = static_cast<int>(gaps.size());
    r.skipped = skipped;
    r.predicted = sep_prob(cfg.model, d, l);
    int hits = 0;
    for (double g : gaps) hits += g <= l ? 1 : 0;
    r.empirical = gaps.empty() ? NAN : static_cast<double>(hits) / static_cast<double>(gaps.size());
    r.se = gaps.empty() ? NAN : std::sqrt(r.predicted * (1 - r.predicted) / static_cast<double>(gaps.size()));
    res.rows.push_back(r);
  }
  return res;
}

inline Table sep_table(const SepResult& s, std::uint64_t seed) {
  Table t;
  t.header = {"model", "d", "l", "empirical", "predicted", "se", "used", "skipped", "seed"};
  for (const auto& r : s.rows) {
    t.rows.push_back({to_string(s.model), std::to_string(s.d), fmt_g(r.l), fmt(r.empirical, 6), fmt(r.predicted, 6), fmt(r.se, 6),
                      std::to_string(r.used), std::to_string(r.skipped), std::to_string(seed)});
  }
  return t;
}

// -- Uniformity of Bernstein-model roots -----------------------------------

struct UniformityResult {
  KsResult ks;
  std::vector<double> angles;  // arccos(2z - 1) for every pooled root z in (0, 1)
};

/// Roots in (0, 1) of a Bernstein sample, isolated directly on its Bernstein
/// form over [0, 1].
inline std::vector<double> bernstein_unit_roots(const RealPolynomial& sample, CounterMethod method) {
  BernsteinPolynomial b = exact_bernstein(sample);
  IntPolynomial z = bernstein_to_monomial(b);
  if (!is_squarefree(z)) z = squarefree_part(z);
  auto iso = isolate(z, DyadicInterval(Dyadic(0), Dyadic(1)), method, {.check_squarefree = false});
  Rational eps(1);
  eps /= Rational(pow(Integer(2), 40UL));
  std::vector<double> out;
  for (const auto& r : iso.roots) out.push_back(refine(z, r, eps).interval.mid().to_double());
  return out;
}

inline UniformityResult uniformity_from_roots(const std::vector<double>& z) {
  UniformityResult res;
  for (double x : z) res.angles.push_back(std::acos(std::clamp(2 * x - 1, -1.0, 1.0)));
  if (res.angles.empty()) throw std::domain_error("uniformity: empty root sample");
  res.ks = ks_test(res.angles, [](double a) { return std::clamp(a / std::numbers::pi, 0.0, 1.0); });
  return res;
}

inline UniformityResult run_uniformity(const ExperimentConfig& cfg, int d) {
  cfg.validate();
  if (!is_bernstein(cfg.model)) throw std::invalid_argument("uniformity: model must be a Bernstein model");
  CounterMethod method = cfg.counter == CounterMethod::Sturm ? CounterMethod::Bernstein : cfg.counter;
  auto per = parallel_map(static_cast<std::size_t>(cfg.trials), cfg.jobs, [&](std::size_t i) {
    return bernstein_unit_roots(sample_polynomial(cfg.model, d, cfg.seed, i), method);
  });
  std::vector<double> z;
  for (const auto& v : per) z.insert(z.end(), v.begin(), v.end());
  return uniformity_from_roots(z);
}

// -- Expected counts --------------------------------------------------------

struct EkMcRow {
  RandomModel model;
  int d = 0;
  double prediction = 0;
  double mc_mean = 0;
  double mc_sd = 0;
  double se = 0;
  double z = 0;
  int trials = 0;
};

/// Number of distinct real roots of a sample (Bernstein samples: of the
/// Bernstein form over all of R).
inline int sample_real_count(const RealPolynomial& sample, long shift, CounterMethod method) {
  IntPolynomial p = sample.basis == Basis::Bernstein ? bernstein_to_power(exact_bernstein(sample)) : exactify(sample, shift);
  if (!is_squarefree(p)) p = squarefree_part(p);
  if (p.degree() < 1) return 0;
  if (method == CounterMethod::Sturm) return SturmSequence(p).count_all_real();
  return static_cast<int>(isolate_real_roots(p, method, {.check_squarefree = false}).roots.size());
}

inline double ek_prediction(RandomModel model, int d) {
  return is_bernstein(model) ? 2 * bernstein_I(d) : ek_expected_count(model, d);
}

inline EkMcRow run_ek_mc_one(const ExperimentConfig& cfg, RandomModel model, int d) {
  CounterMethod method = cfg.counter == CounterMethod::Sturm ? CounterMethod::Descartes : cfg.counter;
  auto counts = parallel_map(static_cast<std::size_t>(cfg.trials), cfg.jobs, [&](std::size_t i) {
    return static_cast<double>(sample_real_count(sample_polynomial(model, d, cfg.seed, i), root_scale_shift(model, d), method));
  });
  EkMcRow r;
  r.model = model;
  r.d = d;
  r.trials = cfg.trials;
  r.prediction = ek_prediction(model, d);
  r.mc_mean = mean(counts);
  r.mc_sd = sample_sd(counts);
  r.se = r.mc_sd / std::sqrt(static_cast<double>(counts.size()));
  r.z = r.se > 0 ? (r.mc_mean - r.prediction) / r.se : 0.0;
  return r;
}

inline std::vector<EkMcRow> run_ek_mc(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<EkMcRow> rows;
  for (int d : cfg.degrees) rows.push_back(run_ek_mc_one(cfg, cfg.model, d));
  return rows;
}

inline Table ek_mc_table(const std::vector<EkMcRow>& rows) {
  Table t;
  t.header = {"model", "d", "prediction", "mc_mean", "mc_sd", "se", "z", "trials"};
  for (const auto& r : rows) {
    t.rows.push_back({to_string(r.model), std::to_string(r.d), fmt(r.prediction, 6), fmt(r.mc_mean, 4), fmt(r.mc_sd, 4), fmt(r.se, 4),
                      fmt(r.z, 3), std::to_string(r.trials)});
  }
  return t;
}

// -- Solver instrumentation -------------------------------------------------

struct SolverTrial {
  int d = 0;
  std::uint64_t trial = 0;
  CounterMethod method = CounterMethod::Descartes;
  int roots = 0;
  long tree_nodes = 0;
  int max_depth = 0;
  long counter_calls = 0;
  long sep_bitsize = 0;
  double rhs = 0;  // per-root binary-search count from refined gaps and the initial width
  double seconds = 0;
};

/// Isolation statistics for one polynomial against the per-root binary
/// search count 2r + r lg W - sum lg Delta_j (W the initial width; a lone
/// root gets Delta = W).
inline SolverTrial instrument_isolation(const IntPolynomial& p, CounterMethod method, int refine_bits = 30) {
  SolverTrial out;
  out.method = method;
  IsolateOptions o;
  o.gap_eps = Rational(1) / Rational(pow(Integer(2), static_cast<unsigned long>(refine_bits)));
  auto t0 = std::chrono::steady_clock::now();
  auto res = isolate_real_roots(p, method, o);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.roots = static_cast<int>(res.roots.size());
  out.tree_nodes = res.stats.tree_nodes;
  out.max_depth = res.stats.max_depth;
  out.counter_calls = res.stats.counter_calls;
  out.sep_bitsize = res.stats.sep_bitsize;
  out.rhs = binary_search_tree_bound(res.stats.bound_B.to_rational(), res.stats.gaps);
  return out;
}

struct SolverRow {
  int d = 0;
  CounterMethod method = CounterMethod::Descartes;
  double mean_roots = 0;
  double mean_nodes = 0;
  double mean_depth = 0;
  double mean_rhs = 0;
  double max_ratio = 0;  // max over trials of nodes / rhs (trials with r >= 1)
  double mean_seconds = 0;
  int trials = 0;
};

struct SolverResult {
  std::vector<SolverTrial> raw;
  std::vector<SolverRow> rows;
};

inline SolverResult run_solver(const ExperimentConfig& cfg, const std::vector<CounterMethod>& methods) {
  cfg.validate();
  struct Job {
    int d;
    std::uint64_t trial;
    CounterMethod m;
  };
  std::vector<Job> jobs;
  for (int d : cfg.degrees)
    for (auto m : methods)
      for (int t = 0; t < cfg.trials; ++t) jobs.push_back({d, static_cast<std::uint64_t>(t), m});
  SolverResult res;
  res.raw = parallel_map(jobs.size(), cfg.jobs, [&](std::size_t i) {
    const auto& j = jobs[i];
    auto sample = sample_polynomial(cfg.model, j.d, cfg.seed, j.trial);
    IntPolynomial p = exactify(sample, root_scale_shift(cfg.model, j.d));
    if (!is_squarefree(p)) p = squarefree_part(p);
    SolverTrial t = instrument_isolation(p, j.m);
    t.d = j.d;
    t.trial = j.trial;
    return t;
  });
  for (int d : cfg.degrees) {
    for (auto m : methods) {
      SolverRow r;
      r.d = d;
      r.method = m;
      std::vector<double> roots, nodes, depth, rhs, secs;
      for (const auto& t : res.raw) {
        if (t.d != d || t.method != m) continue;
        roots.push_back(t.roots);
        nodes.push_back(static_cast<double>(t.tree_nodes));
        depth.push_back(t.max_depth);
        rhs.push_back(t.rhs);
        secs.push_back(t.seconds);
        if (t.roots > 0) r.max_ratio = std::max(r.max_ratio, static_cast<double>(t.tree_nodes) / t.rhs);
      }
      r.trials = static_cast<int>(roots.size());
      r.mean_roots = mean(roots);
      r.mean_nodes = mean(nodes);
      r.mean_depth = mean(depth);
      r.mean_rhs = mean(rhs);
      r.mean_seconds = mean(secs);
      res.rows.push_back(r);
    }
  }
  return res;
}

inline Table solver_table(const std::vector<SolverRow>& rows, bool timings) {
  Table t;
  t.header = {"d", "method", "mean_r", "mean_tree_nodes", "mean_max_depth", "mean_rhs", "max_nodes_over_rhs", "trials"};
  if (timings) t.header.push_back("mean_seconds");
  for (const auto& r : rows) {
    std::vector<std::string> cells{std::to_string(r.d), to_string(r.method), fmt(r.mean_roots, 3), fmt(r.mean_nodes, 3),
                                   fmt(r.mean_depth, 3), fmt(r.mean_rhs, 3), fmt(r.max_ratio, 4), std::to_string(r.trials)};
    if (timings) cells.push_back(fmt(r.mean_seconds, 6));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

}  // namespace rootstat
