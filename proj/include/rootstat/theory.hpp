#pragma once

// Expected-root densities for Gaussian random polynomials, the integrals and
// asymptotic laws built on them, and a few exact combinatorial identities.

#include "bigint.hpp"
#include "randgen.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rootstat {

// -- Densities --------------------------------------------------------------

/// Diagonal Gaussian model given by log-variances (-inf for a zero variance).
struct DensityModel {
  std::vector<double> log_v;

  static DensityModel from_variances(const std::vector<double>& v) {
    DensityModel m;
    for (double x : v) {
      if (x < 0) throw std::domain_error("DensityModel: negative variance");
      m.log_v.push_back(x > 0 ? std::log(x) : -std::numeric_limits<double>::infinity());
    }
    return m;
  }
  static DensityModel of(RandomModel model, int d) { return {log_variance_vector(model, d)}; }

  /// v_j = C(2d, j) on even j and 0 on odd j, so f(u) = ((1+u)^(2d) + (1-u)^(2d)) / 2.
  static DensityModel bernstein_even(int d) {
    DensityModel m;
    for (int j = 0; j <= 2 * d; ++j) {
      m.log_v.push_back(j % 2 == 0 ? std::lgamma(2.0 * d + 1) - std::lgamma(j + 1.0) - std::lgamma(2.0 * d - j + 1)
                                   : -std::numeric_limits<double>::infinity());
    }
    return m;
  }
};

/// Edelman-Kostlan density of real zeros for a diagonal covariance.
///
/// With weights p_k proportional to v_k t^(2k), the radicand
/// f'/f + u f''/f - u (f'/f)^2 (u = t^2) equals Var_p(k) / t^2, which is
/// evaluated with log-sum-exp weights and a two-pass variance.
inline double ek_density(const DensityModel& m, double t) {
  const auto& lv = m.log_v;
  const int n = static_cast<int>(lv.size());
  if (t == 0.0) {
    // Limit: v_{k0+1} / v_{k0} for the first nonzero variance k0.
    int k0 = 0;
    while (k0 < n && std::isinf(lv[static_cast<std::size_t>(k0)])) ++k0;
    if (k0 >= n) throw std::domain_error("ek_density: all variances zero");
    if (k0 + 1 >= n) return 0.0;
    return std::sqrt(std::exp(lv[static_cast<std::size_t>(k0) + 1] - lv[static_cast<std::size_t>(k0)])) / std::numbers::pi;
  }
  const double lu = 2.0 * std::log(std::fabs(t));
  std::vector<double> w(lv.size());
  double wmax = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    w[static_cast<std::size_t>(k)] = lv[static_cast<std::size_t>(k)] + k * lu;
    wmax = std::max(wmax, w[static_cast<std::size_t>(k)]);
  }
  if (std::isinf(wmax)) throw std::domain_error("ek_density: all variances zero");
  double z = 0.0, s1 = 0.0;
  for (int k = 0; k < n; ++k) {
    double p = std::exp(w[static_cast<std::size_t>(k)] - wmax);
    w[static_cast<std::size_t>(k)] = p;
    z += p;
    s1 += p * k;
  }
  const double mu = s1 / z;
  double var = 0.0;
  for (int k = 0; k < n; ++k) var += w[static_cast<std::size_t>(k)] * (k - mu) * (k - mu);
  var /= z;
  return std::sqrt(var) / (std::fabs(t) * std::numbers::pi);
}

/// Weyl density from the incomplete-gamma form, with
/// e^(t^2) Gamma(d+1, t^2) = d! sum_{k<=d} t^(2k)/k! summed in log scale.
inline double weyl_density(double t, int d) {
  if (d < 1) throw std::domain_error("weyl_density: degree must be >= 1");
  if (t == 0.0) return 1.0 / std::numbers::pi;
  using ld = long double;
  const ld lu = 2.0L * std::log(std::fabs(static_cast<ld>(t)));
  // log G = lgamma(d+1) + logsumexp_k (k lu - lgamma(k+1))
  ld mx = -std::numeric_limits<ld>::infinity();
  std::vector<ld> terms(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    terms[static_cast<std::size_t>(k)] = k * lu - std::lgamma(static_cast<ld>(k) + 1);
    mx = std::max(mx, terms[static_cast<std::size_t>(k)]);
  }
  ld s = 0;
  for (ld x : terms) s += std::exp(x - mx);
  const ld log_g = std::lgamma(static_cast<ld>(d) + 1) + mx + std::log(s);
  const ld a = std::exp(d * lu - log_g);  // t^(2d) / G
  const ld u = static_cast<ld>(t) * t;
  const ld r = 1 + a * (u - d - 1) - a * a * u;
  return static_cast<double>(std::sqrt(std::max<ld>(r, 0)) / std::numbers::pi_v<ld>);
}

// -- Quadrature -------------------------------------------------------------

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive 15-point Gauss-Kronrod on [a, b]; infinite ends are mapped with
/// t = tan(phi). The range is cut at +-scale * 2^j so that densities with a
/// bulk of width ~scale are resolved.
inline QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-6,
                                  double scale = 1.0) {
  using boost::math::quadrature::gauss_kronrod;
  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
  std::vector<double> cuts{0.0};
  for (int j = -4; j <= 4; ++j) {
    cuts.push_back(scale * std::ldexp(1.0, j));
    cuts.push_back(-scale * std::ldexp(1.0, j));
  }
  cuts.push_back(a);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<double> pts;
  for (double c : cuts) {
    if (c >= a && c <= b) pts.push_back(c);
  }
  QuadratureResult total;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double lo = pts[i], hi = pts[i + 1];
    double err = 0.0;
    double v;
    if (std::isinf(lo) || std::isinf(hi)) {
      auto g = [&](double phi) {
        double c = std::cos(phi);
        if (c == 0.0) return 0.0;
        return f(std::tan(phi)) / (c * c);
      };
      v = gauss_kronrod<double, 15>::integrate(g, std::atan(lo), std::atan(hi), 15, 1e-9, &err);
    } else {
      v = gauss_kronrod<double, 15>::integrate(f, lo, hi, 15, 1e-9, &err);
    }
    // Pieces run to a tight relative tolerance; the summed estimate is held
    // to the absolute target below.
    total.value += v;
    total.error += err;
  }
  if (!std::isfinite(total.value)) throw std::runtime_error("integrate: non-finite result");
  if (total.error > tol) {
    throw std::runtime_error("integrate: quadrature did not converge");
  }
  return total;
}

/// Expected number of real zeros in [a, b] (ends may be infinite).
inline double ek_expected_count(const DensityModel& m, double a = -INFINITY, double b = INFINITY, double tol = 1e-6,
                                double scale = 1.0) {
  return integrate([&](double t) { return ek_density(m, t); }, a, b, tol, scale).value;
}

inline double ek_expected_count(RandomModel model, int d, double a = -INFINITY, double b = INFINITY, double tol = 1e-6) {
  double scale = model == RandomModel::Weyl ? std::sqrt(static_cast<double>(d)) : 1.0;
  return ek_expected_count(DensityModel::of(model, d), a, b, tol, scale);
}

/// (sqrt(2d)/pi) int_0^(pi/2) sqrt(1 + (2d-1) s^2 c^(2d-2) - c^(4d-2)) / (1 + c^(2d)) dtheta,
/// the expected number of positive real roots in the standard Bernstein model.
inline double bernstein_I(int d, double tol = 1e-6) {
  if (d < 1) throw std::domain_error("bernstein_I: degree must be >= 1");
  const double dd = d;
  auto integrand = [dd](double theta) {
    double s = std::sin(theta);
    double s2 = s * s;
    if (s2 >= 1.0) return 0.0;
    double lc = 0.5 * std::log1p(-s2);  // log cos
    double one_minus = -std::expm1((4 * dd - 2) * lc);
    double mid = (2 * dd - 1) * s2 * std::exp((2 * dd - 2) * lc);
    return std::sqrt(std::max(0.0, one_minus + mid)) / (1.0 + std::exp(2 * dd * lc));
  };
  using boost::math::quadrature::gauss_kronrod;
  // The integrand lives on theta ~ 1/sqrt(d); cut there.
  double w = 1.0 / std::sqrt(dd);
  std::vector<double> pts{0.0};
  for (double c : {w / 8, w / 4, w / 2, w, 2 * w, 4 * w, 8 * w}) {
    if (c < std::numbers::pi / 2) pts.push_back(c);
  }
  pts.push_back(std::numbers::pi / 2);
  double v = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double err = 0.0;
    v += gauss_kronrod<double, 15>::integrate(integrand, pts[i], pts[i + 1], 20, tol * 1e-3, &err);
  }
  return std::sqrt(2 * dd) / std::numbers::pi * v;
}

// -- Straightening and separation laws -----------------------------------

/// Order-preserving map to zeros with uniform marginal density.
inline double straighten(RandomModel model, int d, double alpha) {
  switch (model) {
    case RandomModel::SO2: return std::sqrt(static_cast<double>(d)) * std::atan(alpha) / std::numbers::pi;
    case RandomModel::Weyl: return alpha / std::numbers::pi;
    default: throw std::invalid_argument("straighten: only so2 and weyl are supported");
  }
}

/// Limit slope of the two-point correlation of straightened zeros.
inline double correlation_slope(RandomModel model) {
  switch (model) {
    case RandomModel::SO2: return std::numbers::pi * std::numbers::pi / 4;
    case RandomModel::Weyl: return 1.0 / (4 * std::numbers::pi);
    default: throw std::invalid_argument("correlation_slope: only so2 and weyl are supported");
  }
}

/// Asymptotic Pr[min straightened gap <= l], clamped to [0, 1].
inline double sep_prob(RandomModel model, int d, double l) {
  const double sd = std::sqrt(static_cast<double>(d));
  const double pi2 = std::numbers::pi * std::numbers::pi;
  double p;
  switch (model) {
    case RandomModel::SO2: p = pi2 * sd * l * l / 2; break;
    case RandomModel::Weyl: p = l * l * sd / (4 * pi2); break;
    default: throw std::invalid_argument("sep_prob: only so2 and weyl are supported");
  }
  return std::clamp(p, 0.0, 1.0);
}

/// Inverse of sep_prob on its unclamped range.
inline double sep_length_for(RandomModel model, int d, double prob) {
  const double sd = std::sqrt(static_cast<double>(d));
  const double pi2 = std::numbers::pi * std::numbers::pi;
  switch (model) {
    case RandomModel::SO2: return std::sqrt(2 * prob / (pi2 * sd));
    case RandomModel::Weyl: return std::sqrt(4 * pi2 * prob / sd);
    default: throw std::invalid_argument("sep_length_for: only so2 and weyl are supported");
  }
}

/// Lower bound on E[separation] with l = 1/(d^c tau).
inline double expected_sep_lower(RandomModel model, int d, double tau, double c) {
  if (c < 1 || tau < 1) throw std::domain_error("expected_sep_lower: requires c >= 1 and tau >= 1");
  const double pi = std::numbers::pi;
  const double dd = d;
  switch (model) {
    case RandomModel::SO2: return pi / (std::pow(dd, c + 0.5) * tau) - pi * pi * pi / (2 * std::pow(dd, 3 * c) * tau * tau * tau);
    case RandomModel::Weyl: return pi / (std::pow(dd, c) * tau) - 1.0 / (4 * pi * std::pow(dd, 3 * c - 0.5) * tau * tau * tau);
    default: throw std::invalid_argument("expected_sep_lower: only so2 and weyl are supported");
  }
}

// -- Exact identities -------------------------------------------------------

struct BinomialSumResult {
  Rational lhs;
  std::optional<Rational> rhs_exact;  // k in {1, 2}
  std::complex<double> rhs_approx;
  bool holds = false;
};

/// sum_j C(kn, kj) x^(kj) against (1/k) sum_j (x + e^(2 pi i j/k))^(kn).
inline BinomialSumResult binomial_sum_identity(unsigned n, unsigned k, const Rational& x) {
  if (k < 1 || k > n) throw std::domain_error("binomial_sum_identity: requires 1 <= k <= n");
  BinomialSumResult r;
  r.lhs = 0;
  for (unsigned j = 0; j <= n; ++j) r.lhs += Rational(binomial(k * n, k * j)) * pow(x, k * j);
  if (k == 1) {
    r.rhs_exact = pow(x + 1, n);
  } else if (k == 2) {
    r.rhs_exact = (pow(x + 1, 2 * n) + pow(x - 1, 2 * n)) / 2;
  }
  std::complex<double> s = 0;
  const double xd = x.get_d();
  for (unsigned j = 0; j < k; ++j) s += std::pow(xd + std::polar(1.0, 2 * std::numbers::pi * j / k), static_cast<int>(k * n));
  r.rhs_approx = s / static_cast<double>(k);
  if (r.rhs_exact) {
    r.holds = *r.rhs_exact == r.lhs;
  } else {
    double l = r.lhs.get_d();
    r.holds = std::abs(r.rhs_approx - l) <= 1e-9 * std::max(1.0, std::fabs(l));
  }
  return r;
}

struct StirlingRatio {
  Rational exact;
  double approx = 0.0;
  double relative_error = 0.0;
};

/// C(n,k)^p / C(pn, pk) exactly, and its Stirling estimate.
inline StirlingRatio stirling_ratio(unsigned n, unsigned k, unsigned p) {
  if (!(0 < k && k < n) || p < 1) throw std::domain_error("stirling_ratio: requires 0 < k < n and p >= 1");
  StirlingRatio s;
  s.exact = Rational(pow(binomial(n, k), p)) / Rational(binomial(static_cast<unsigned long>(p) * n, static_cast<unsigned long>(p) * k));
  const double pm1 = p - 1.0;
  s.approx = std::sqrt(p * std::pow(n / (2 * std::numbers::pi), pm1)) * std::sqrt(std::pow(1.0 / (static_cast<double>(k) * (n - k)), pm1));
  double e = s.exact.get_d();
  s.relative_error = std::fabs(s.approx - e) / e;
  return s;
}

/// Rational enclosure of pi.
inline Rational pi_lower() { return Rational(Integer("3141592653589793"), Integer("1000000000000000")); }
inline Rational pi_upper() { return Rational(Integer("3141592653589794"), Integer("1000000000000000")); }

enum class Verdict { False, True, Undecided };

/// Decides C(d,k) / sqrt(C(2d,2k)) >= sqrt(2 / sqrt(pi d)), i.e.
/// C(d,k)^4 pi d >= 4 C(2d,2k)^2, with pi enclosed by rationals.
inline Verdict sk_lower_bound_holds(unsigned d, unsigned k) {
  Integer a = binomial(d, k);
  Integer b = binomial(2UL * d, 2UL * k);
  Rational lhs = Rational(pow(a, 4) * d);
  Rational rhs = Rational(4 * b * b);
  if (lhs * pi_lower() >= rhs) return Verdict::True;
  if (lhs * pi_upper() < rhs) return Verdict::False;
  return Verdict::Undecided;
}

/// C(d,k)^2 <= C(2d,2k).
inline bool sk_upper_bound_holds(unsigned d, unsigned k) {
  Integer a = binomial(d, k);
  return a * a <= binomial(2UL * d, 2UL * k);
}

/// W(n) = coeff * pi^pi_power exactly.
struct WallisValue {
  Rational coeff;
  int pi_power = 0;
  double to_double() const { return coeff.get_d() * (pi_power ? std::numbers::pi : 1.0); }
};

/// int_0^(pi/2) cos^n: W(0) = pi/2, W(1) = 1, W(n) = (n-1)/n W(n-2).
inline WallisValue wallis(unsigned n) {
  WallisValue w;
  w.pi_power = n % 2 == 0 ? 1 : 0;
  w.coeff = n % 2 == 0 ? Rational(1, 2) : Rational(1);
  for (unsigned m = (n % 2 == 0 ? 2 : 3); m <= n; m += 2) {
    Rational f(m - 1, m);
    f.canonicalize();
    w.coeff *= f;
  }
  return w;
}

/// Whole table W(0..n), sharing the recurrence.
inline std::vector<WallisValue> wallis_table(unsigned n) {
  std::vector<WallisValue> t;
  t.push_back({Rational(1, 2), 1});
  if (n >= 1) t.push_back({Rational(1), 0});
  for (unsigned m = 2; m <= n; ++m) {
    Rational f(m - 1, m);
    f.canonicalize();
    t.push_back({t[m - 2].coeff * f, t[m - 2].pi_power});
  }
  return t;
}

/// Decides W(n) <= sqrt(pi) / sqrt(2n + 1), i.e. W^2 (2n+1) <= pi.
inline Verdict wallis_bound_holds(const WallisValue& w, unsigned n) {
  Rational c2 = w.coeff * w.coeff * (2 * n + 1);
  if (w.pi_power == 0) {
    if (c2 <= pi_lower()) return Verdict::True;
    if (c2 > pi_upper()) return Verdict::False;
  } else {
    // c^2 pi^2 (2n+1) <= pi  <=>  c^2 (2n+1) pi <= 1
    if (c2 * pi_upper() <= 1) return Verdict::True;
    if (c2 * pi_lower() > 1) return Verdict::False;
  }
  return Verdict::Undecided;
}

}  // namespace rootstat
