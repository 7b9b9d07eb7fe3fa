#pragma once

// Seeded random-polynomial families and their exact embedding.
//
// Normal draws come from a counter-based SplitMix64 stream keyed by
// (master seed, model, degree, trial) followed by the Box-Muller transform,
// so any trial can be regenerated independently of every other.

#include "bernstein.hpp"
#include "bigint.hpp"
#include "dyadic.hpp"
#include "polynomial.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootstat {

inline constexpr const char* kRngAlgorithm = "splitmix64-ctr+box-muller/1";

enum class RandomModel { Kac, SO2, Weyl, BernsteinStd, BernsteinSk };

inline const char* to_string(RandomModel m) {
  switch (m) {
    case RandomModel::Kac: return "kac";
    case RandomModel::SO2: return "so2";
    case RandomModel::Weyl: return "weyl";
    case RandomModel::BernsteinStd: return "bern-std";
    case RandomModel::BernsteinSk: return "bern-sk";
  }
  return "?";
}

inline RandomModel parse_random_model(const std::string& s) {
  if (s == "kac") return RandomModel::Kac;
  if (s == "so2") return RandomModel::SO2;
  if (s == "weyl") return RandomModel::Weyl;
  if (s == "bern-std") return RandomModel::BernsteinStd;
  if (s == "bern-sk") return RandomModel::BernsteinSk;
  throw std::invalid_argument("unknown model '" + s + "'");
}

inline bool is_bernstein(RandomModel m) { return m == RandomModel::BernsteinStd || m == RandomModel::BernsteinSk; }

// -- Generator --------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stream of standard normals determined by a 64-bit key; draw i depends
/// only on (key, i).
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t key) : key_(key) {}

  static NormalStream for_trial(std::uint64_t seed, RandomModel model, int degree, std::uint64_t trial) {
    std::uint64_t k = splitmix64(seed);
    k = splitmix64(k ^ (static_cast<std::uint64_t>(model) + 1));
    k = splitmix64(k ^ static_cast<std::uint64_t>(degree));
    k = splitmix64(k ^ trial);
    return NormalStream(k);
  }

  std::uint64_t key() const { return key_; }

  /// Raw 64-bit word number i.
  std::uint64_t word(std::uint64_t i) const { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * (i + 1)); }

  /// Uniform in (0, 1], 53-bit resolution.
  double uniform(std::uint64_t i) const { return static_cast<double>((word(i) >> 11) + 1) * 0x1.0p-53; }

  /// Standard normal number i; draws 2j and 2j+1 share one Box-Muller pair.
  double normal(std::uint64_t i) const {
    std::uint64_t j = i / 2;
    double r = std::sqrt(-2.0 * std::log(uniform(2 * j)));
    double theta = 2.0 * std::numbers::pi * uniform(2 * j + 1);
    return i % 2 == 0 ? r * std::cos(theta) : r * std::sin(theta);
  }

  double next() { return normal(counter_++); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// -- Models -----------------------------------------------------------------

inline double s_k(int d, int k) {
  return std::sqrt(static_cast<double>(d) / std::numbers::pi) / std::sqrt(static_cast<double>(k) * (d - k));
}

/// Coefficient variances v_0..v_d of the model (Bernstein basis for the
/// Bernstein models). Weyl entries underflow for large d; use
/// log_variance_vector there.
inline std::vector<double> variance_vector(RandomModel model, int d) {
  if (d < 1) throw std::domain_error("variance_vector: degree must be >= 1");
  std::vector<double> v(static_cast<std::size_t>(d) + 1, 1.0);
  for (int i = 0; i <= d; ++i) {
    auto& x = v[static_cast<std::size_t>(i)];
    switch (model) {
      case RandomModel::Kac:
      case RandomModel::BernsteinStd: break;
      case RandomModel::SO2: x = std::exp(std::lgamma(d + 1.0) - std::lgamma(i + 1.0) - std::lgamma(d - i + 1.0)); break;
      case RandomModel::Weyl: x = std::exp(-std::lgamma(i + 1.0)); break;
      case RandomModel::BernsteinSk: x = (i == 0 || i == d) ? 1.0 : 1.0 / s_k(d, i); break;
    }
  }
  if (model == RandomModel::SO2) {
    // Exact small binomials keep the integer values exact.
    for (int i = 0; i <= d && d <= 60; ++i) v[static_cast<std::size_t>(i)] = binomial(d, i).get_d();
  }
  return v;
}

/// Natural logarithms of the variances; finite for every model and degree.
inline std::vector<double> log_variance_vector(RandomModel model, int d) {
  if (d < 1) throw std::domain_error("log_variance_vector: degree must be >= 1");
  std::vector<double> v(static_cast<std::size_t>(d) + 1, 0.0);
  for (int i = 0; i <= d; ++i) {
    auto& x = v[static_cast<std::size_t>(i)];
    switch (model) {
      case RandomModel::Kac:
      case RandomModel::BernsteinStd: break;
      case RandomModel::SO2: x = std::lgamma(d + 1.0) - std::lgamma(i + 1.0) - std::lgamma(d - i + 1.0); break;
      case RandomModel::Weyl: x = -std::lgamma(i + 1.0); break;
      case RandomModel::BernsteinSk: x = (i == 0 || i == d) ? 0.0 : -std::log(s_k(d, i)); break;
    }
  }
  return v;
}

enum class Basis { Power, Bernstein };

/// Real polynomial with coefficients mantissa[i] * 2^exp2[i]; the separate
/// binary exponent keeps tiny or huge scalings (Weyl at large d) exact.
struct RealPolynomial {
  Basis basis = Basis::Power;
  std::vector<double> mantissa;
  std::vector<long> exp2;

  int degree() const { return static_cast<int>(mantissa.size()) - 1; }
  /// Coefficient as a double (may under/overflow for extreme exponents).
  double coeff(std::size_t i) const { return std::ldexp(mantissa[i], static_cast<int>(exp2[i])); }
};

/// Coefficient i = sqrt(v_i) g_i with g_i the i-th draw of the trial stream.
inline RealPolynomial sample_polynomial(RandomModel model, int d, std::uint64_t seed, std::uint64_t trial = 0) {
  auto logv = log_variance_vector(model, d);
  NormalStream stream = NormalStream::for_trial(seed, model, d, trial);
  RealPolynomial p;
  p.basis = is_bernstein(model) ? Basis::Bernstein : Basis::Power;
  p.mantissa.resize(logv.size());
  p.exp2.resize(logv.size());
  for (std::size_t i = 0; i < logv.size(); ++i) {
    // sqrt(v_i) = 2^(e + f) with integer e and f in [0, 1).
    double lg = 0.5 * logv[i] / std::numbers::ln2;
    double e = std::floor(lg);
    p.mantissa[i] = stream.normal(i) * std::exp2(lg - e);
    p.exp2[i] = static_cast<long>(e);
  }
  return p;
}

namespace detail {

inline std::vector<Dyadic> exact_coefficients(const RealPolynomial& p, long shift) {
  std::vector<Dyadic> out;
  out.reserve(p.mantissa.size());
  for (std::size_t i = 0; i < p.mantissa.size(); ++i) {
    out.push_back(dyadic_of_float(p.mantissa[i]).times_pow2(p.exp2[i] + shift * static_cast<long>(i)));
  }
  return out;
}

inline std::vector<Integer> clear_dyadic(const std::vector<Dyadic>& c) {
  long emin = 0;
  bool first = true;
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    if (first || x.exponent() < emin) emin = x.exponent();
    first = false;
  }
  std::vector<Integer> v;
  v.reserve(c.size());
  for (const auto& x : c) v.push_back(x.is_zero() ? Integer(0) : x.times_pow2(-emin).numerator());
  return v;
}

}  // namespace detail

/// Exact integer polynomial with the same roots as a power-basis sample.
/// With shift = s the result is in y = x / 2^s (roots divided by 2^s), which
/// keeps coefficient sizes balanced for Weyl samples.
inline IntPolynomial exactify(const RealPolynomial& p, long shift = 0) {
  if (p.basis != Basis::Power) throw std::invalid_argument("exactify: Bernstein-basis sample; use exact_bernstein");
  return IntPolynomial(detail::clear_dyadic(detail::exact_coefficients(p, shift))).primitive_part();
}

/// Exact Bernstein coefficients (up to a positive factor) of a Bernstein sample.
inline BernsteinPolynomial exact_bernstein(const RealPolynomial& p) {
  if (p.basis != Basis::Bernstein) throw std::invalid_argument("exact_bernstein: power-basis sample");
  auto v = detail::clear_dyadic(detail::exact_coefficients(p, 0));
  std::vector<Rational> r(v.begin(), v.end());
  return BernsteinPolynomial(std::move(r));
}

/// Convenience: float coefficient vector to its exact integer multiple.
inline IntPolynomial exactify(const std::vector<double>& coeffs) {
  RealPolynomial p;
  p.mantissa = coeffs;
  p.exp2.assign(coeffs.size(), 0);
  return exactify(p);
}

}  // namespace rootstat
