#pragma once

// Command-line front end. Every subcommand parses flags, calls the library
// and formats the result; no numerics live here.

#include "rootstat/bench.hpp"
#include "rootstat/checks.hpp"
#include "rootstat/isolator.hpp"
#include "rootstat/poly_io.hpp"
#include "rootstat/randgen.hpp"
#include "rootstat/sturm.hpp"
#include "rootstat/theory.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef ROOTSTAT_VERSION
#define ROOTSTAT_VERSION "0.0.0"
#endif

namespace rootstat::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kCheckFailed = 2,
  kUsage = 64,        // EX_USAGE
  kBadInput = 65,     // EX_DATAERR
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// -- Parsing helpers --------------------------------------------------------

/// Rational or +-infinity: "inf", "-inf", "3", "-5/2", "0.125", "3*2^-4".
inline ExtendedRational parse_point(const std::string& s) {
  if (s == "inf" || s == "+inf") return ExtendedRational::plus_infinity();
  if (s == "-inf") return ExtendedRational::minus_infinity();
  try {
    if (s.find('*') != std::string::npos) return ExtendedRational(parse_dyadic(s).to_rational());
    return ExtendedRational(parse_rational(s));
  } catch (const std::exception&) {
    throw UsageError("bad interval endpoint '" + s + "'");
  }
}

inline std::pair<ExtendedRational, ExtendedRational> parse_interval(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("interval must look like lo:hi, got '" + s + "'");
  return {parse_point(s.substr(0, colon)), parse_point(s.substr(colon + 1))};
}

inline Dyadic to_dyadic_endpoint(const ExtendedRational& x) {
  if (!x.is_finite()) throw UsageError("isolation interval must be finite");
  const Integer den(x.value.get_den());
  if ((den & (den - 1)) != 0) throw UsageError("isolation endpoints must be dyadic (denominator a power of two)");
  return Dyadic(Integer(x.value.get_num()), -static_cast<long>(bitsize(den) - 1));
}

/// Integer polynomial behind a file: power-basis text as is; Bernstein text
/// as its monomial form in z, whose roots are those of the Bernstein form.
inline IntPolynomial load_polynomial(const std::string& path, bool* was_bernstein = nullptr) {
  auto text = read_polynomial_file(path);
  if (std::holds_alternative<BernsteinPolynomial>(text)) {
    if (was_bernstein) *was_bernstein = true;
    return bernstein_to_monomial(std::get<BernsteinPolynomial>(text));
  }
  if (was_bernstein) *was_bernstein = false;
  IntPolynomial p = std::get<IntPolynomial>(text);
  if (p.is_zero()) throw ParseError("zero polynomial");
  return p;
}

inline std::vector<CounterMethod> parse_methods(const std::string& s) {
  std::vector<CounterMethod> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_counter_method(tok));
  if (out.empty()) throw UsageError("no counter method given");
  return out;
}

// -- Output -----------------------------------------------------------------

inline nlohmann::json cell_json(const std::string& c) {
  if (c == "nan") return nullptr;
  char* end = nullptr;
  double v = std::strtod(c.c_str(), &end);
  if (!c.empty() && end == c.c_str() + c.size()) {
    if (c.find_first_of(".eE") == std::string::npos && std::fabs(v) < 9e15) return static_cast<long long>(v);
    return v;
  }
  return c;
}

inline nlohmann::json table_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json o;
    for (std::size_t i = 0; i < t.header.size(); ++i) o[t.header[i]] = cell_json(r[i]);
    rows.push_back(o);
  }
  return rows;
}

inline nlohmann::json checks_json(const std::vector<Check>& cs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : cs) a.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return a;
}

struct Globals {
  std::uint64_t seed = 42;
  bool json = false;
  std::string out;
  bool check = false;
  int jobs = 1;
};

class Emitter {
 public:
  Emitter(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  void text(const std::string& s) {
    if (g_.out.empty()) {
      out_ << s;
    } else {
      std::ofstream f(g_.out, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write '" + g_.out + "'");
      f << s;
    }
  }
  void json(const nlohmann::json& j) { text(j.dump(2) + "\n"); }
  void table(const Table& t, nlohmann::json extra = nullptr) {
    if (g_.json) {
      nlohmann::json j{{"rows", table_json(t)}};
      if (!extra.is_null()) j.update(extra);
      json(j);
    } else {
      text(t.to_csv());
    }
  }

 private:
  const Globals& g_;
  std::ostream& out_;
};

/// Prints check lines to err; returns the exit code for --check.
inline int report_checks(const std::vector<Check>& cs, std::ostream& err) {
  if (cs.empty()) {
    err << "check: no applicable reference values\n";
    return kOk;
  }
  for (const auto& c : cs) err << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  return all_pass(cs) ? kOk : kCheckFailed;
}

inline void write_raw(const std::string& path, const Table& t) {
  if (path.empty() || path == "-") return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << t.to_csv();
}

// -- Dispatcher -------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real-root statistics of random polynomials and exact subdivision solvers"};
  app.set_version_flag("--version", std::string("rootstat ") + ROOTSTAT_VERSION + " (rng " + kRngAlgorithm + ")");
  app.set_config("--config", "", "TOML/INI file with default flag values (flags on the command line win)");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Master seed");
  app.add_flag("--json", g.json, "Emit JSON instead of CSV/text");
  app.add_option("--out", g.out, "Write the main output to this file");
  app.add_flag("--check", g.check, "Exit 2 when a tolerance check fails");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::function<int()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Sample a random polynomial and write it exactly");
  std::string gen_model = "kac";
  int gen_degree = 10;
  std::uint64_t gen_trial = 0;
  gen->add_option("--model", gen_model, "kac|so2|weyl|bern-std|bern-sk");
  gen->add_option("--degree", gen_degree, "Degree")->check(CLI::PositiveNumber);
  gen->add_option("--trial", gen_trial, "Trial index within the seed");
  gen->callback([&] {
    action = [&] {
      RandomModel m = parse_random_model(gen_model);
      auto s = sample_polynomial(m, gen_degree, g.seed, gen_trial);
      std::string text = is_bernstein(m) ? format_polynomial(exact_bernstein(s)) : format_polynomial(exactify(s));
      Emitter(g, out).text(text + "\n");
      return int{kOk};
    };
  });

  // isolate
  auto* iso = app.add_subcommand("isolate", "Isolate the real roots of a polynomial file");
  std::string iso_in, iso_method = "descartes", iso_interval;
  std::string iso_eps;
  iso->add_option("--in", iso_in, "Polynomial file")->required();
  iso->add_option("--method", iso_method, "sturm|descartes|bernstein");
  iso->add_option("--interval", iso_interval, "lo:hi with dyadic endpoints (default: root bound)");
  iso->add_option("--eps", iso_eps, "Refine every interval to this width (rational)");
  iso->callback([&] {
    action = [&] {
      IntPolynomial p = load_polynomial(iso_in);
      if (!is_squarefree(p)) p = squarefree_part(p);
      CounterMethod m = parse_counter_method(iso_method);
      DyadicInterval I0 = root_bound_interval(p);
      if (!iso_interval.empty()) {
        auto [lo, hi] = parse_interval(iso_interval);
        I0 = DyadicInterval(to_dyadic_endpoint(lo), to_dyadic_endpoint(hi));
      }
      auto res = isolate(p, I0, m);
      if (!iso_eps.empty()) {
        Rational eps = parse_rational(iso_eps);
        for (auto& r : res.roots) r = refine(p, r, eps);
      }
      if (g.json) {
        nlohmann::json roots = nlohmann::json::array();
        for (const auto& r : res.roots) {
          nlohmann::json o{{"lo", r.interval.lo.str()}, {"hi", r.interval.hi.str()}, {"exact", r.is_exact()}};
          roots.push_back(o);
        }
        Emitter(g, out).json({{"method", to_string(m)},
                              {"initial", {{"lo", I0.lo.str()}, {"hi", I0.hi.str()}}},
                              {"intervals", roots},
                              {"stats",
                               {{"tree_nodes", res.stats.tree_nodes},
                                {"max_depth", res.stats.max_depth},
                                {"counter_calls", res.stats.counter_calls},
                                {"bound_width", res.stats.bound_B.str()}}}});
      } else {
        std::ostringstream os;
        os << "lo,hi,exact\n";
        for (const auto& r : res.roots) os << r.interval.lo.str() << "," << r.interval.hi.str() << "," << (r.is_exact() ? 1 : 0) << "\n";
        Emitter(g, out).text(os.str());
      }
      return int{kOk};
    };
  });

  // count
  auto* cnt = app.add_subcommand("count", "Exact number of distinct real roots in (a, b]");
  std::string cnt_in, cnt_interval = "-inf:inf";
  cnt->add_option("--in", cnt_in, "Polynomial file")->required();
  cnt->add_option("--interval", cnt_interval, "a:b, ends may be inf");
  cnt->callback([&] {
    action = [&] {
      IntPolynomial p = load_polynomial(cnt_in);
      auto [a, b] = parse_interval(cnt_interval);
      if (!(a < b)) throw UsageError("count interval needs a < b");
      int n = 0;
      if (p.degree() >= 1) {
        // V(a) - V(b) counts (a, b]: V at a root equals V just to its right.
        auto s = squarefree_sturm_sequence(p);
        n = s.variations_at(a) - s.variations_at(b);
      }
      if (g.json) Emitter(g, out).json({{"count", n}});
      else Emitter(g, out).text(std::to_string(n) + "\n");
      return int{kOk};
    };
  });

  // bound
  auto* bnd = app.add_subcommand("bound", "Root bounds of a polynomial file");
  std::string bnd_in;
  bool bnd_printed = false;
  bnd->add_option("--in", bnd_in, "Polynomial file")->required();
  bnd->add_flag("--printed", bnd_printed, "Use the a_d-denominator variant (comparison only)");
  bnd->callback([&] {
    action = [&] {
      IntPolynomial p = load_polynomial(bnd_in);
      HongVariant v = bnd_printed ? HongVariant::Printed : HongVariant::Standard;
      Dyadic pos = hong_bound(p, v), neg = hong_bound(negate_variable(p), v);
      Rational cauchy = cauchy_bound(p);
      if (g.json) {
        Emitter(g, out).json({{"hong_positive", pos.str()}, {"hong_negative", neg.str()}, {"cauchy", cauchy.get_str()}});
      } else {
        Emitter(g, out).text("hong_positive," + pos.to_rational().get_str() + "\nhong_negative," + neg.to_rational().get_str() +
                             "\ncauchy," + cauchy.get_str() + "\n");
      }
      return int{kOk};
    };
  });

  // density
  auto* den = app.add_subcommand("density", "Tabulate expected real-zero densities");
  std::string den_model = "so2";
  int den_degree = 100, den_points = 41;
  double den_from = -5, den_to = 5;
  bool den_count = false;
  den->add_option("--model", den_model, "kac|so2|weyl|bern-even");
  den->add_option("--degree", den_degree)->check(CLI::PositiveNumber);
  den->add_option("--from", den_from);
  den->add_option("--to", den_to);
  den->add_option("--points", den_points)->check(CLI::Range(2, 1000000));
  den->add_flag("--count", den_count, "Also print expected counts over (-inf, inf) and [from, to]");
  den->callback([&] {
    action = [&] {
      bool weyl = den_model == "weyl";
      DensityModel m = den_model == "bern-even" ? DensityModel::bernstein_even(den_degree)
                                                : DensityModel::of(parse_random_model(den_model), den_degree);
      double scale = weyl ? std::sqrt(static_cast<double>(den_degree)) : 1.0;
      Table t;
      t.header = {"t", "ek_density"};
      if (weyl) t.header.push_back("weyl_density");
      for (int i = 0; i < den_points; ++i) {
        double x = den_from + (den_to - den_from) * i / (den_points - 1);
        std::vector<std::string> row{fmt(x, 6), fmt_g(ek_density(m, x))};
        if (weyl) row.push_back(fmt_g(weyl_density(x, den_degree)));
        t.rows.push_back(row);
      }
      nlohmann::json extra;
      if (den_count) {
        double all = ek_expected_count(m, -INFINITY, INFINITY, 1e-6, scale);
        double part = ek_expected_count(m, den_from, den_to, 1e-6, scale);
        extra = {{"expected_count_all", all}, {"expected_count_range", part}};
        if (den_model == "bern-even") extra["two_bernstein_I"] = 2 * bernstein_I(den_degree);
      }
      if (g.json) {
        Emitter(g, out).table(t, extra);
      } else {
        std::string s = t.to_csv();
        if (den_count) {
          s += "# expected_count_all=" + fmt(extra["expected_count_all"].get<double>(), 8) +
               " expected_count_range=" + fmt(extra["expected_count_range"].get<double>(), 8) + "\n";
        }
        Emitter(g, out).text(s);
      }
      return int{kOk};
    };
  });

  // identities
  auto* ids = app.add_subcommand("identities", "Verify the exact combinatorial identities and bounds");
  unsigned ids_max_n = 20, ids_max_d = 500, ids_max_w = 2000;
  ids->add_option("--max-n", ids_max_n, "Binomial-sum identity: n <= max-n");
  ids->add_option("--max-d", ids_max_d, "Binomial ratio bounds: d <= max-d");
  ids->add_option("--max-wallis", ids_max_w, "Wallis checks: n <= max-wallis");
  ids->callback([&] {
    action = [&] {
      auto rows = identity_audit(ids_max_n, ids_max_d, ids_max_w);
      Table t;
      t.header = {"identity", "checked", "violations", "undecided", "first_violation"};
      for (const auto& r : rows)
        t.rows.push_back({r.name, std::to_string(r.checked), std::to_string(r.violations), std::to_string(r.undecided),
                          r.first_violation.empty() ? "-" : r.first_violation});
      Emitter(g, out).table(t);
      return g.check ? report_checks(check_identities(rows), err) : int{kOk};
    };
  });

  // Shared experiment flags.
  auto experiment = [&](CLI::App* sub, ExperimentConfig& cfg, std::string& model, std::string& degrees, std::string& counter) {
    sub->add_option("--model", model, "Random model");
    sub->add_option("--degrees", degrees, "Comma-separated degrees");
    sub->add_option("--trials", cfg.trials, "Trials per degree")->check(CLI::PositiveNumber);
    sub->add_option("--counter", counter, "sturm|descartes|bernstein");
    sub->add_flag("--timings", cfg.timings, "Include wall-clock columns (not reproducible)");
  };
  auto finish_config = [&](ExperimentConfig& cfg, const std::string& model, const std::string& degrees, const std::string& counter) {
    cfg.model = parse_random_model(model);
    cfg.degrees.clear();
    std::stringstream ss(degrees);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        cfg.degrees.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw UsageError("bad degree '" + tok + "'");
      }
    }
    cfg.counter = parse_counter_method(counter);
    cfg.seed = g.seed;
    cfg.jobs = g.jobs;
    cfg.validate();
  };

  // table1
  auto* t1 = app.add_subcommand("table1", "Real-root counts of Bernstein-basis random polynomials");
  ExperimentConfig t1_cfg;
  std::string t1_model = "bern-std", t1_degrees = "100,150,200,300", t1_counter = "sturm", t1_raw = "table1_raw.csv";
  experiment(t1, t1_cfg, t1_model, t1_degrees, t1_counter);
  t1->add_option("--raw", t1_raw, "Per-trial log (CSV); '-' disables");
  t1->callback([&] {
    action = [&] {
      finish_config(t1_cfg, t1_model, t1_degrees, t1_counter);
      auto res = run_table1(t1_cfg);
      write_raw(t1_raw, table1_raw_table(res.raw));
      Emitter(g, out).table(table1_table(res.rows));
      return g.check ? report_checks(check_table1(res.rows), err) : int{kOk};
    };
  });

  // sep
  auto* sep = app.add_subcommand("sep", "Separation probability of straightened real roots");
  ExperimentConfig sep_cfg;
  sep_cfg.trials = 500;
  std::string sep_model = "so2", sep_degrees = "400", sep_counter = "descartes", sep_raw;
  std::vector<double> sep_probs{0.02, 0.05, 0.1}, sep_l;
  double sep_tau = 0;
  experiment(sep, sep_cfg, sep_model, sep_degrees, sep_counter);
  sep->add_option("--probs", sep_probs, "Choose l so the law predicts these probabilities")->delimiter(',');
  sep->add_option("--l", sep_l, "Explicit l values (override --probs)")->delimiter(',');
  sep->add_option("--tau", sep_tau, "Use l = 1/(d^c tau) instead");
  sep->add_option("--c", sep_cfg.c, "Exponent c in l = 1/(d^c tau)");
  sep->add_option("--raw", sep_raw, "Per-trial log (CSV)");
  sep->callback([&] {
    action = [&] {
      finish_config(sep_cfg, sep_model, sep_degrees, sep_counter);
      std::vector<Check> checks;
      std::string text;
      nlohmann::json all = nlohmann::json::array();
      Table raw;
      raw.header = {"d", "trial", "roots", "min_gap", "mean_gap"};
      for (int d : sep_cfg.degrees) {
        std::vector<double> ls = sep_l;
        if (ls.empty() && sep_tau > 0) ls.push_back(1.0 / (std::pow(d, sep_cfg.c) * sep_tau));
        if (ls.empty())
          for (double p : sep_probs) ls.push_back(sep_length_for(sep_cfg.model, d, p));
        auto res = run_sep(sep_cfg, d, ls);
        for (const auto& t : res.raw)
          raw.rows.push_back({std::to_string(d), std::to_string(t.trial), std::to_string(t.roots), fmt_g(t.min_gap), fmt_g(t.mean_gap)});
        Table t = sep_table(res, g.seed);
        if (g.json) {
          for (auto& row : table_json(t)) all.push_back(row);
        } else {
          std::string csv = t.to_csv();
          text += text.empty() ? csv : csv.substr(csv.find('\n') + 1);
        }
        auto cs = check_sep(res);
        checks.insert(checks.end(), cs.begin(), cs.end());
      }
      write_raw(sep_raw, raw);
      if (g.json) Emitter(g, out).json({{"rows", all}});
      else Emitter(g, out).text(text);
      return g.check ? report_checks(checks, err) : int{kOk};
    };
  });

  // solver-bench
  auto* sol = app.add_subcommand("solver-bench", "Subdivision-tree statistics of the three counters");
  ExperimentConfig sol_cfg;
  std::string sol_model = "so2", sol_degrees = "100", sol_counter = "descartes", sol_methods = "sturm,descartes,bernstein", sol_raw;
  experiment(sol, sol_cfg, sol_model, sol_degrees, sol_counter);
  sol->add_option("--methods", sol_methods, "Comma-separated counters");
  sol->add_option("--raw", sol_raw, "Per-trial log (CSV)");
  sol->callback([&] {
    action = [&] {
      finish_config(sol_cfg, sol_model, sol_degrees, sol_counter);
      auto res = run_solver(sol_cfg, parse_methods(sol_methods));
      Table raw;
      raw.header = {"d", "trial", "method", "roots", "tree_nodes", "max_depth", "counter_calls", "sep_bitsize", "rhs"};
      for (const auto& t : res.raw)
        raw.rows.push_back({std::to_string(t.d), std::to_string(t.trial), to_string(t.method), std::to_string(t.roots),
                            std::to_string(t.tree_nodes), std::to_string(t.max_depth), std::to_string(t.counter_calls),
                            std::to_string(t.sep_bitsize), fmt(t.rhs, 4)});
      write_raw(sol_raw, raw);
      Emitter(g, out).table(solver_table(res.rows, sol_cfg.timings));
      return g.check ? report_checks(check_solver(res.rows), err) : int{kOk};
    };
  });

  // uniformity
  auto* uni = app.add_subcommand("uniformity", "KS test of arccos(2t-1) for Bernstein-model roots in (0,1)");
  ExperimentConfig uni_cfg;
  uni_cfg.trials = 150;
  std::string uni_model = "bern-std", uni_degrees = "500", uni_counter = "descartes";
  std::size_t uni_min = 2000;
  experiment(uni, uni_cfg, uni_model, uni_degrees, uni_counter);
  uni->add_option("--min-roots", uni_min, "Minimum pooled sample for --check");
  uni->callback([&] {
    action = [&] {
      finish_config(uni_cfg, uni_model, uni_degrees, uni_counter);
      Table t;
      t.header = {"d", "roots", "ks_statistic", "p_value", "trials", "seed"};
      std::vector<Check> checks;
      for (int d : uni_cfg.degrees) {
        auto r = run_uniformity(uni_cfg, d);
        t.rows.push_back({std::to_string(d), std::to_string(r.ks.n), fmt(r.ks.statistic, 6), fmt_g(r.ks.p_value),
                          std::to_string(uni_cfg.trials), std::to_string(g.seed)});
        checks.push_back(check_uniformity(r, uni_min));
      }
      Emitter(g, out).table(t);
      return g.check ? report_checks(checks, err) : int{kOk};
    };
  });

  // ek-mc
  auto* ek = app.add_subcommand("ek-mc", "Monte Carlo real-root counts against expected-count formulas");
  ExperimentConfig ek_cfg;
  std::string ek_model = "so2", ek_degrees = "100", ek_counter = "descartes";
  experiment(ek, ek_cfg, ek_model, ek_degrees, ek_counter);
  ek->callback([&] {
    action = [&] {
      finish_config(ek_cfg, ek_model, ek_degrees, ek_counter);
      auto rows = run_ek_mc(ek_cfg);
      Emitter(g, out).table(ek_mc_table(rows));
      return g.check ? report_checks(check_ek_mc(rows), err) : int{kOk};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return action ? action() : int{kUsage};
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: malformed polynomial file: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace rootstat::cli
