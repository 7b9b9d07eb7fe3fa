#pragma once

// Sturm sequences and exact real-root counting.

#include "bigint.hpp"
#include "dyadic.hpp"
#include "polynomial.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace rootstat {

class NotSquarefreeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a finite left endpoint of a half-open count is itself a root.
class EndpointRootError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Point on the extended real line: a rational or +-infinity.
struct ExtendedRational {
  int infinity = 0;  // -1, 0 or +1
  Rational value;

  static ExtendedRational minus_infinity() { return {-1, {}}; }
  static ExtendedRational plus_infinity() { return {+1, {}}; }
  ExtendedRational() = default;
  ExtendedRational(int inf, Rational v) : infinity(inf), value(std::move(v)) {}
  ExtendedRational(Rational v) : value(std::move(v)) {}  // NOLINT
  ExtendedRational(long v) : value(v) {}                 // NOLINT

  bool is_finite() const { return infinity == 0; }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinity != b.infinity) return a.infinity < b.infinity;
    return a.infinity == 0 && a.value < b.value;
  }
};

inline int sign_variations(std::span<const int> signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

struct SturmOptions {
  /// Record the positive factor f_i with S_i = f_i * (true negative-remainder element).
  bool record_factors = false;
  /// Keep the pseudo-quotients for the quotient-sequence evaluation path.
  bool keep_quotients = false;
};

/// Negative polynomial remainder sequence (A, A', -rem, ...) computed as a
/// subresultant sequence; each stored element is a positive multiple of the
/// corresponding true element.
class SturmSequence {
 public:
  SturmSequence() = default;
  explicit SturmSequence(const IntPolynomial& a, SturmOptions opts = {}) {
    if (a.degree() < 1) throw std::domain_error("sturm_sequence: input must have degree >= 1");
    IntPolynomial p = a.primitive_part();
    auto steps = subresultant_prs(p, derivative(p), /*sturm_signs=*/true, opts.keep_quotients);
    if (steps.back().poly.degree() > 0) {
      throw NotSquarefreeError("sturm_sequence: input is not squarefree (gcd(A, A') has degree " +
                               std::to_string(steps.back().poly.degree()) + ")");
    }
    polys_.reserve(steps.size());
    for (auto& s : steps) polys_.push_back(std::move(s.poly));
    if (opts.record_factors) {
      factors_.assign(polys_.size(), Rational(1));
      // S_{i+1} = |lc S_i|^(delta+1) f_{i-1} / |beta| * T_{i+1}
      for (std::size_t i = 2; i < polys_.size(); ++i) {
        int delta = polys_[i - 2].degree() - polys_[i - 1].degree();
        Rational f = factors_[i - 2] * Rational(pow(Integer(abs(polys_[i - 1].leading())),
                                                    static_cast<unsigned long>(delta + 1)));
        f /= Rational(quotient_beta(i, steps));
        factors_[i] = f;
      }
    }
    if (opts.keep_quotients) {
      for (std::size_t i = 2; i < steps.size(); ++i) {
        quotients_.push_back({std::move(steps[i].quotient), steps[i].sign, std::move(steps[i].beta)});
      }
      has_quotients_ = true;
    }
  }

  const std::vector<IntPolynomial>& polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }
  const IntPolynomial& target() const { return polys_.front(); }
  const std::vector<Rational>& factors() const { return factors_; }

  /// Maximum coefficient bitsize over the whole sequence.
  std::size_t max_bitsize() const {
    std::size_t b = 0;
    for (const auto& p : polys_) b = std::max(b, p.bitsize());
    return b;
  }

  std::vector<int> signs_at(const Rational& x) const {
    std::vector<int> s;
    s.reserve(polys_.size());
    for (const auto& p : polys_) s.push_back(sign_at(p, x));
    return s;
  }
  std::vector<int> signs_at(const Dyadic& x) const {
    std::vector<int> s;
    s.reserve(polys_.size());
    for (const auto& p : polys_) s.push_back(sign_at(p, x));
    return s;
  }
  std::vector<int> signs_at_infinity(int dir) const {
    std::vector<int> s;
    s.reserve(polys_.size());
    for (const auto& p : polys_) s.push_back(sign_at_infinity(p, dir));
    return s;
  }

  int variations_at(const Rational& x) const { return sign_variations(signs_at(x)); }
  int variations_at(const Dyadic& x) const { return sign_variations(signs_at(x)); }
  int variations_at_infinity(int dir) const { return sign_variations(signs_at_infinity(dir)); }
  int variations_at(const ExtendedRational& x) const {
    return x.is_finite() ? variations_at(x.value) : variations_at_infinity(x.infinity);
  }

  /// Signs via the recurrence S_{i+1} = sign_i (lc(S_i)^(delta+1) S_{i-1} - Q_i S_i) / |beta_i|
  /// from A(x) and A'(x) only. Requires SturmOptions::keep_quotients.
  std::vector<int> signs_at_via_quotients(const Rational& x) const {
    if (!has_quotients_) throw std::logic_error("SturmSequence: quotients were not kept");
    std::vector<Rational> val;
    val.reserve(polys_.size());
    val.push_back(evaluate(polys_[0], x));
    val.push_back(evaluate(polys_[1], x));
    for (std::size_t i = 2; i < polys_.size(); ++i) {
      const auto& q = quotients_[i - 2];
      int delta = polys_[i - 2].degree() - polys_[i - 1].degree();
      Rational lc_pow(pow(Integer(polys_[i - 1].leading()), static_cast<unsigned long>(delta + 1)));
      Rational v = lc_pow * val[i - 2] - evaluate(q.quotient, x) * val[i - 1];
      v /= Rational(q.beta);
      if (q.sign < 0) v = -v;
      val.push_back(v);
    }
    std::vector<int> s;
    s.reserve(val.size());
    for (const auto& v : val) s.push_back(sgn(v));
    return s;
  }

  /// Number of distinct real roots in (a, b]; throws EndpointRootError when a
  /// is a finite root.
  int count_in(const ExtendedRational& a, const ExtendedRational& b) const {
    if (!(a < b)) throw std::invalid_argument("count_in: requires a < b");
    if (a.is_finite() && sign_at(target(), a.value) == 0) {
      throw EndpointRootError("count_in: left endpoint " + a.value.get_str() + " is a root");
    }
    return variations_at(a) - variations_at(b);
  }

  int count_all_real() const { return variations_at_infinity(-1) - variations_at_infinity(+1); }

 private:
  struct QuotientStep {
    IntPolynomial quotient;
    int sign;
    Integer beta;
  };

  static const Integer& quotient_beta(std::size_t i, const std::vector<PrsStep>& steps) { return steps[i].beta; }

  std::vector<IntPolynomial> polys_;
  std::vector<QuotientStep> quotients_;
  std::vector<Rational> factors_;
  bool has_quotients_ = false;
};

inline SturmSequence sturm_sequence(const IntPolynomial& a, SturmOptions opts = {}) { return SturmSequence(a, opts); }

/// Sturm sequence of the squarefree part of a.
inline SturmSequence squarefree_sturm_sequence(const IntPolynomial& a) {
  try {
    return SturmSequence(a);
  } catch (const NotSquarefreeError&) {
    return SturmSequence(squarefree_part(a));
  }
}

inline int count_all_real(const IntPolynomial& a) { return squarefree_sturm_sequence(a).count_all_real(); }

}  // namespace rootstat
