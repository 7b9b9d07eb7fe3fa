#pragma once

// Tolerance checks for experiment outputs against reference values and
// analytic laws; shared by the command-line --check flag and the acceptance
// suite.

#include "bench.hpp"
#include "theory.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace rootstat {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

/// Reference Bernstein-model means: total, then (-inf,-1), (-1,0), (0,1), (1,inf).
inline std::optional<std::array<double, 5>> table1_reference(int d) {
  struct Ref {
    int d;
    std::array<double, 5> v;
  };
  static const Ref refs[] = {
      {100, {13.640, 0.760, 2.740, 6.530, 3.610}},  {150, {16.540, 0.890, 3.260, 8.090, 4.300}},
      {200, {19.740, 1.100, 3.780, 9.740, 5.120}},  {250, {21.400, 1.350, 3.970, 10.610, 5.470}},
      {300, {24.320, 1.270, 4.760, 12.300, 5.990}}, {350, {26.540, 1.620, 5.100, 13.400, 6.420}},
      {400, {27.980, 1.490, 5.430, 14.080, 6.980}}, {450, {29.460, 1.620, 5.890, 14.970, 6.980}},
      {500, {31.200, 1.830, 5.960, 15.620, 7.790}}, {550, {32.740, 1.770, 6.360, 16.290, 8.320}},
      {600, {34.300, 1.850, 6.570, 17.270, 8.610}}, {650, {35.480, 2.050, 6.840, 17.240, 9.350}},
      {700, {37.200, 2.160, 7.510, 18.650, 8.880}}, {750, {38.180, 2.190, 7.300, 19.360, 9.330}},
      {800, {39.160, 2.220, 7.830, 19.490, 9.620}}, {850, {40.420, 2.130, 8.010, 20.320, 9.960}},
      {900, {41.780, 2.390, 8.070, 20.530, 10.790}}, {950, {42.680, 2.200, 8.330, 21.570, 10.580}},
      {1000, {43.540, 2.400, 8.610, 21.770, 10.760}},
  };
  for (const auto& r : refs)
    if (r.d == d) return r.v;
  return std::nullopt;
}

/// Mean total within 1.0 and each interval mean within 0.8 of the reference row.
inline std::vector<Check> check_table1(const std::vector<Table1Row>& rows) {
  std::vector<Check> out;
  for (const auto& r : rows) {
    auto ref = table1_reference(r.d);
    if (!ref) continue;
    Check c;
    c.name = "table1 d=" + std::to_string(r.d);
    double worst_col = 0;
    for (std::size_t k = 0; k < 4; ++k) worst_col = std::max(worst_col, std::fabs(r.mean[k] - (*ref)[k + 1]));
    double dt = std::fabs(r.mean_total - (*ref)[0]);
    c.pass = dt <= 1.0 && worst_col <= 0.8;
    c.detail = "mean_total=" + fmt(r.mean_total, 3) + " (ref " + fmt((*ref)[0], 3) + ", |diff| " + fmt(dt, 3) +
               " <= 1.0); worst interval |diff| " + fmt(worst_col, 3) + " <= 0.8; means " + fmt(r.mean[0], 3) + "/" +
               fmt(r.mean[1], 3) + "/" + fmt(r.mean[2], 3) + "/" + fmt(r.mean[3], 3);
    out.push_back(c);
  }
  return out;
}

/// 2 I(d) inside [sqrt(2d) - 2 sqrt(8/pi^3) - 1/2, sqrt(2d) + 2/pi + 1/2].
inline Check check_bernstein_theorem(int d) {
  const double pi = std::numbers::pi;
  double v = 2 * bernstein_I(d);
  double lo = std::sqrt(2.0 * d) - 2 * std::sqrt(8 / (pi * pi * pi)) - 0.5;
  double hi = std::sqrt(2.0 * d) + 2 / pi + 0.5;
  return {"bernstein 2I d=" + std::to_string(d), v >= lo && v <= hi,
          "2I=" + fmt(v, 6) + " in [" + fmt(lo, 6) + ", " + fmt(hi, 6) + "]"};
}

/// Empirical frequency within a factor of two and three standard errors of the law.
inline std::vector<Check> check_sep(const SepResult& s) {
  std::vector<Check> out;
  for (const auto& r : s.rows) {
    Check c;
    c.name = std::string("sep ") + to_string(s.model) + " d=" + std::to_string(s.d) + " predicted=" + fmt(r.predicted, 3);
    bool factor = r.empirical >= r.predicted / 2 && r.empirical <= 2 * r.predicted;
    bool se = std::fabs(r.empirical - r.predicted) <= 3 * r.se;
    c.pass = factor && se;
    c.detail = "l=" + fmt_g(r.l) + " empirical=" + fmt(r.empirical, 4) + " (ratio " + fmt(r.empirical / r.predicted, 3) +
               ", |diff|/se " + fmt(std::fabs(r.empirical - r.predicted) / r.se, 2) + ") over " + std::to_string(r.used) +
               " trials";
    out.push_back(c);
  }
  return out;
}

inline Check check_uniformity(const UniformityResult& u, std::size_t min_roots = 2000, double alpha = 1e-3) {
  return {"uniformity", u.ks.n >= min_roots && u.ks.p_value > alpha,
          "pooled roots=" + std::to_string(u.ks.n) + " (>= " + std::to_string(min_roots) + "), KS D=" + fmt(u.ks.statistic, 5) +
              " p=" + fmt_g(u.ks.p_value) + " (> " + fmt_g(alpha) + ")"};
}

inline std::vector<Check> check_solver(const std::vector<SolverRow>& rows, double factor = 4.0) {
  std::vector<Check> out;
  for (const auto& r : rows) {
    out.push_back({std::string("tree size ") + to_string(r.method) + " d=" + std::to_string(r.d), r.max_ratio <= factor,
                   "max #(T)/rhs=" + fmt(r.max_ratio, 4) + " (<= " + fmt(factor, 1) + "), mean #(T)=" + fmt(r.mean_nodes, 2) +
                       " mean rhs=" + fmt(r.mean_rhs, 2)});
  }
  return out;
}

inline std::vector<Check> check_ek_mc(const std::vector<EkMcRow>& rows, double zmax = 3.0) {
  std::vector<Check> out;
  for (const auto& r : rows) {
    out.push_back({std::string("ek-mc ") + to_string(r.model) + " d=" + std::to_string(r.d), std::fabs(r.z) <= zmax,
                   "mc_mean=" + fmt(r.mc_mean, 3) + " prediction=" + fmt(r.prediction, 3) + " z=" + fmt(r.z, 2)});
  }
  return out;
}

struct IdentityAudit {
  std::string name;
  long checked = 0;
  long violations = 0;
  long undecided = 0;  // enclosure of pi too coarse to decide
  std::string first_violation;

  void record(bool ok, const std::string& where) {
    ++checked;
    if (ok) return;
    if (first_violation.empty()) first_violation = where;
    ++violations;
  }
};

/// Exhaustive exact audit of the binomial-sum identity (n <= max_n, k <= 2,
/// six x), the binomial-ratio sandwich (d <= max_d, 0 < k < d) and the Wallis
/// bound and product (n <= max_w).
inline std::vector<IdentityAudit> identity_audit(unsigned max_n = 20, unsigned max_d = 500, unsigned max_w = 2000) {
  IdentityAudit sum{"binomial_sum_identity"}, upper{"binomial_ratio_upper"}, lower{"binomial_ratio_lower"};
  IdentityAudit wbound{"wallis_bound"}, wprod{"wallis_product"};

  const std::vector<Rational> xs{Rational(-2), Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(3)};
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned k = 1; k <= 2 && k <= n; ++k)
      for (const auto& x : xs)
        sum.record(binomial_sum_identity(n, k, x).holds,
                   "n=" + std::to_string(n) + " k=" + std::to_string(k) + " x=" + x.get_str());

  for (unsigned d = 2; d <= max_d; ++d)
    for (unsigned k = 1; k < d; ++k) {
      std::string where = "d=" + std::to_string(d) + " k=" + std::to_string(k);
      upper.record(sk_upper_bound_holds(d, k), where);
      Verdict v = sk_lower_bound_holds(d, k);
      if (v == Verdict::Undecided) ++lower.undecided;
      lower.record(v != Verdict::False, where);
    }

  auto w = wallis_table(max_w);
  for (unsigned n = 0; n <= max_w; ++n) {
    Verdict v = wallis_bound_holds(w[n], n);
    if (v == Verdict::Undecided) ++wbound.undecided;
    wbound.record(v != Verdict::False, "n=" + std::to_string(n));
    if (n >= 1) {
      Rational expect(1, 2 * n);
      expect.canonicalize();
      wprod.record(w[n].pi_power + w[n - 1].pi_power == 1 && w[n].coeff * w[n - 1].coeff == expect, "n=" + std::to_string(n));
    }
  }
  return {sum, upper, lower, wbound, wprod};
}

inline std::vector<Check> check_identities(const std::vector<IdentityAudit>& rows) {
  std::vector<Check> out;
  for (const auto& r : rows) {
    std::string detail = std::to_string(r.violations) + " violations of " + std::to_string(r.checked);
    if (r.undecided) detail += ", " + std::to_string(r.undecided) + " undecided";
    if (!r.first_violation.empty()) detail += ", first at " + r.first_violation;
    out.push_back({r.name, r.violations == 0 && r.undecided == 0, detail});
  }
  return out;
}

}  // namespace rootstat
