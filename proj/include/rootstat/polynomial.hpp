#pragma once

// Dense univariate polynomials with arbitrary-precision integer coefficients.

#include "bigint.hpp"
#include "dyadic.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rootstat {

/// A = sum a_i x^i over Z, stored densely with the leading coefficient
/// nonzero. The zero polynomial has no coefficients and degree -1, which
/// stands in for -infinity.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  /// c * x^k
  static IntPolynomial monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPolynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::size_t size() const { return coeffs_.size(); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const {
    static const Integer zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }
  const Integer& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  /// Maximum coefficient bitsize (tau).
  std::size_t bitsize() const {
    std::size_t b = 0;
    for (const auto& c : coeffs_) b = std::max(b, rootstat::bitsize(c));
    return b;
  }

  /// Non-negative gcd of the coefficients; 0 for the zero polynomial.
  Integer content() const {
    Integer g(0);
    for (const auto& c : coeffs_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Divided by its content; the sign of the leading coefficient is kept.
  IntPolynomial primitive_part() const {
    Integer g = content();
    if (g == 0 || g == 1) return *this;
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(v));
  }

  /// Primitive part with a positive leading coefficient.
  IntPolynomial normalized() const {
    IntPolynomial p = primitive_part();
    if (!p.is_zero() && sgn(p.leading()) < 0) p = -p;
    return p;
  }

  friend IntPolynomial operator-(const IntPolynomial& p) {
    std::vector<Integer> v(p.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -p.coeffs_[i];
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> v(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
      }
    }
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p) {
    std::vector<Integer> v(p.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
    return IntPolynomial(std::move(v));
  }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const Integer& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (!s.empty()) s += sgn(c) > 0 ? " + " : " - ";
      else if (sgn(c) < 0) s += "-";
      Integer a = abs(c);
      if (a != 1 || i == 0) s += a.get_str();
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// prod (x - r_i) for integer roots r_i.
inline IntPolynomial from_integer_roots(std::initializer_list<long> roots) {
  IntPolynomial p{1};
  for (long r : roots) p = p * IntPolynomial{-r, 1};
  return p;
}

/// prod (q_i x - p_i) for rational roots p_i/q_i.
inline IntPolynomial from_rational_roots(const std::vector<Rational>& roots) {
  IntPolynomial p{1};
  for (const auto& r : roots) {
    p = p * IntPolynomial(std::vector<Integer>{Integer(-r.get_num()), Integer(r.get_den())});
  }
  return p;
}

inline IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Integer> v(p.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p[i + 1] * static_cast<unsigned long>(i + 1);
  return IntPolynomial(std::move(v));
}

namespace detail {

/// sum a_i p^i q^(d-i) for the nominal degree d = p.degree(); q > 0.
inline Integer homogeneous_value(const IntPolynomial& a, const Integer& num, const Integer& den) {
  if (a.is_zero()) return Integer(0);
  const auto& c = a.coeffs();
  Integer r = c.back();
  Integer qpow(1);
  for (int i = a.degree() - 1; i >= 0; --i) {
    r *= num;
    qpow *= den;
    mpz_addmul(r.get_mpz_t(), c[static_cast<std::size_t>(i)].get_mpz_t(), qpow.get_mpz_t());
  }
  return r;
}

/// sum a_i m^i 2^(k(d-i)), the value at m / 2^k scaled by 2^(kd).
inline Integer dyadic_scaled_value(const IntPolynomial& a, const Integer& m, unsigned long k) {
  if (a.is_zero()) return Integer(0);
  const auto& c = a.coeffs();
  Integer r = c.back();
  Integer t;
  unsigned long shift = 0;
  for (int i = a.degree() - 1; i >= 0; --i) {
    r *= m;
    shift += k;
    mpz_mul_2exp(t.get_mpz_t(), c[static_cast<std::size_t>(i)].get_mpz_t(), shift);
    r += t;
  }
  return r;
}

}  // namespace detail

/// Exact value A(x).
inline Rational evaluate(const IntPolynomial& p, const Rational& x) {
  if (p.is_zero()) return Rational(0);
  Integer num = detail::homogeneous_value(p, Integer(x.get_num()), Integer(x.get_den()));
  Rational r(num, pow(Integer(x.get_den()), static_cast<unsigned long>(p.degree())));
  r.canonicalize();
  return r;
}

inline int sign_at(const IntPolynomial& p, const Rational& x) {
  return sgn(detail::homogeneous_value(p, Integer(x.get_num()), Integer(x.get_den())));
}

inline int sign_at(const IntPolynomial& p, const Dyadic& x) {
  if (p.is_zero()) return 0;
  if (x.exponent() >= 0) {
    return sgn(detail::homogeneous_value(p, x.numerator(), Integer(1)));
  }
  return sgn(detail::dyadic_scaled_value(p, x.mantissa(), x.denominator_log2()));
}

/// Sign of A at +infinity (dir > 0) or -infinity (dir < 0).
inline int sign_at_infinity(const IntPolynomial& p, int dir) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading());
  return (dir < 0 && p.degree() % 2 == 1) ? -s : s;
}

struct PseudoDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// lc(b)^(deg a - deg b + 1) * a = quotient * b + remainder.
inline PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b, bool want_quotient = true) {
  if (b.is_zero()) throw std::domain_error("pseudo_divide: division by zero polynomial");
  int n = a.degree();
  int m = b.degree();
  if (n < m) return {IntPolynomial{}, a};
  std::vector<Integer> r = a.coeffs();
  const auto& g = b.coeffs();
  const Integer& lc = b.leading();
  std::vector<Integer> q;
  if (want_quotient) q.assign(static_cast<std::size_t>(n - m + 1), Integer(0));
  Integer t;
  for (int k = n - m; k >= 0; --k) {
    t = r[static_cast<std::size_t>(m + k)];
    if (want_quotient) {
      // Earlier quotient terms pick up one more factor of lc per step.
      for (int j = k + 1; j <= n - m; ++j) q[static_cast<std::size_t>(j)] *= lc;
      q[static_cast<std::size_t>(k)] = t;
    }
    for (int j = m + k - 1; j >= 0; --j) {
      auto& rj = r[static_cast<std::size_t>(j)];
      mpz_mul(rj.get_mpz_t(), rj.get_mpz_t(), lc.get_mpz_t());
      if (j >= k && t != 0) mpz_submul(rj.get_mpz_t(), t.get_mpz_t(), g[static_cast<std::size_t>(j - k)].get_mpz_t());
    }
  }
  r.resize(static_cast<std::size_t>(m));
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  return pseudo_divide(a, b, false).remainder;
}

namespace detail {

/// Pseudo-remainder for deg a = deg b + 1, the generic PRS step:
/// lc^2 a - (q1 x + q0) b with q1 = lc a_n, q0 = lc a_(n-1) - a_n b_(n-2).
inline PseudoDivision pseudo_divide_by_one_lower(const IntPolynomial& a, const IntPolynomial& b) {
  const auto& f = a.coeffs();
  const auto& g = b.coeffs();
  const std::size_t m = g.size() - 1;
  const Integer& lc = g[m];
  Integer lc2 = lc * lc;
  Integer q1 = lc * f[m + 1];
  Integer q0 = lc * f[m];
  if (m >= 1) mpz_submul(q0.get_mpz_t(), f[m + 1].get_mpz_t(), g[m - 1].get_mpz_t());
  std::vector<Integer> r(m);
  for (std::size_t j = 0; j < m; ++j) {
    mpz_mul(r[j].get_mpz_t(), lc2.get_mpz_t(), f[j].get_mpz_t());
    if (j >= 1) mpz_submul(r[j].get_mpz_t(), q1.get_mpz_t(), g[j - 1].get_mpz_t());
    mpz_submul(r[j].get_mpz_t(), q0.get_mpz_t(), g[j].get_mpz_t());
  }
  return {IntPolynomial(std::vector<Integer>{q0, q1}), IntPolynomial(std::move(r))};
}

}  // namespace detail

/// Element of a subresultant remainder sequence together with the data that
/// produced it from its two predecessors.
struct PrsStep {
  IntPolynomial poly;
  IntPolynomial quotient;  // pseudo-quotient of the two predecessors (optional)
  int sign = 1;            // sign applied to prem / |beta|
  Integer beta{1};         // |beta| divided out of the pseudo-remainder
};

/// Subresultant polynomial remainder sequence of (f, g), deg f >= deg g.
/// With sturm_signs the i-th element is a positive multiple of the i-th
/// element of the negative remainder sequence f, g, -rem(f, g), ...;
/// otherwise signs follow plain pseudo-remainders. Coefficients stay within
/// the subresultant bound because every step divides by |beta| exactly.
inline std::vector<PrsStep> subresultant_prs(const IntPolynomial& f, const IntPolynomial& g, bool sturm_signs,
                                             bool keep_quotients = false) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("subresultant_prs: zero input");
  if (f.degree() < g.degree()) throw std::domain_error("subresultant_prs: deg f < deg g");
  std::vector<PrsStep> seq;
  seq.push_back({f, {}, 1, Integer(1)});
  seq.push_back({g, {}, 1, Integer(1)});
  Integer psi(1);
  Integer beta(1);
  int prev_delta = -1;
  while (true) {
    const IntPolynomial& a = seq[seq.size() - 2].poly;
    const IntPolynomial& b = seq.back().poly;
    int delta = a.degree() - b.degree();
    if (prev_delta >= 0) {
      // |psi_i| = |lc(a)|^prev_delta / |psi_{i-1}|^(prev_delta - 1)
      Integer lca = abs(a.leading());
      if (prev_delta == 0) {
        // psi * |lc|^0 = psi
      } else {
        Integer num = pow(lca, static_cast<unsigned long>(prev_delta));
        Integer den = pow(psi, static_cast<unsigned long>(prev_delta - 1));
        psi = divexact(num, den);
      }
      beta = lca * pow(psi, static_cast<unsigned long>(delta));
    }
    PseudoDivision pd = (delta == 1 && !keep_quotients) ? detail::pseudo_divide_by_one_lower(a, b)
                                                        : pseudo_divide(a, b, keep_quotients);
    if (pd.remainder.is_zero()) break;
    int s = 1;
    if (sturm_signs) {
      int lcs = sgn(b.leading());
      bool odd = (delta + 1) % 2 == 1;
      s = -((lcs < 0 && odd) ? -1 : 1);
    }
    std::vector<Integer> v = pd.remainder.coeffs();
    for (auto& c : v) {
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), beta.get_mpz_t());
      if (s < 0) mpz_neg(c.get_mpz_t(), c.get_mpz_t());
    }
    seq.push_back({IntPolynomial(std::move(v)), std::move(pd.quotient), s, beta});
    prev_delta = delta;
  }
  return seq;
}

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const IntPolynomial& f = a.degree() >= b.degree() ? a : b;
  const IntPolynomial& g = a.degree() >= b.degree() ? b : a;
  auto seq = subresultant_prs(f.primitive_part(), g.primitive_part(), false);
  return seq.back().poly.normalized();
}

/// q with a = q * b over Q, scaled to a primitive integer polynomial; b must
/// divide a.
inline IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto pd = pseudo_divide(a, b, true);
  if (!pd.remainder.is_zero()) throw std::domain_error("exact_quotient: b does not divide a");
  return pd.quotient.primitive_part();
}

/// p / gcd(p, p'), primitive with positive leading coefficient: the same
/// distinct roots, each simple.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
  if (p.degree() < 1) return p.normalized();
  IntPolynomial g = gcd(p, derivative(p));
  if (g.degree() < 1) return p.normalized();
  return exact_quotient(p, g).normalized();
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Degree of gcd(f, g) over Z/p (p prime); inputs are trimmed residue vectors.
inline int modular_gcd_degree(std::vector<std::uint64_t> f, std::vector<std::uint64_t> g, std::uint64_t p) {
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(f);
  trim(g);
  while (!g.empty()) {
    // f <- f mod g
    std::uint64_t inv = powmod(g.back(), p - 2, p);
    while (f.size() >= g.size()) {
      std::uint64_t c = mulmod(f.back(), inv, p);
      std::size_t off = f.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i) {
        f[off + i] = (f[off + i] + p - mulmod(c, g[i], p)) % p;
      }
      trim(f);
    }
    std::swap(f, g);
  }
  return static_cast<int>(f.size()) - 1;
}

}  // namespace detail

/// True when gcd(A, A') is constant. A few word-size primes settle almost
/// every input; an exact gcd decides the rest.
inline bool is_squarefree(const IntPolynomial& a) {
  if (a.degree() < 1) return true;
  static constexpr std::uint64_t primes[] = {2305843009213693951ULL, 1000000007ULL, 998244353ULL};
  const int d = a.degree();
  for (std::uint64_t p : primes) {
    std::vector<std::uint64_t> f(a.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    if (f.back() == 0 || static_cast<std::uint64_t>(d) % p == 0) continue;
    std::vector<std::uint64_t> g(f.size() - 1);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = detail::mulmod(f[i + 1], (i + 1) % p, p);
    if (detail::modular_gcd_degree(f, g, p) == 0) return true;
  }
  return gcd(a, derivative(a)).degree() == 0;
}

/// L * p / content for L the lcm of the denominators.
inline IntPolynomial clear_denominators(const std::vector<Rational>& coeffs) {
  Integer l(1);
  for (const auto& c : coeffs) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> v(coeffs.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = divexact(l, Integer(coeffs[i].get_den())) * coeffs[i].get_num();
  return IntPolynomial(std::move(v)).primitive_part();
}

// -- Transformations used by the subdivision solvers -----------------------

/// A(-x)
inline IntPolynomial negate_variable(const IntPolynomial& p) {
  std::vector<Integer> v = p.coeffs();
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPolynomial(std::move(v));
}

/// x^d A(1/x) on a coefficient vector of nominal degree v.size()-1.
inline void reverse_in_place(std::vector<Integer>& v) { std::reverse(v.begin(), v.end()); }

/// Coefficients of A(x + 1), in place; O(d^2) additions.
inline void taylor_shift_one(std::vector<Integer>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      mpz_add(v[j].get_mpz_t(), v[j].get_mpz_t(), v[j + 1].get_mpz_t());
    }
  }
}

/// Coefficients of A(x + c), in place.
inline void taylor_shift(std::vector<Integer>& v, const Integer& c) {
  if (c == 0) return;
  if (c == 1) {
    taylor_shift_one(v);
    return;
  }
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      mpz_addmul(v[j].get_mpz_t(), v[j + 1].get_mpz_t(), c.get_mpz_t());
    }
  }
}

/// Coefficients of 2^(k d) A(x / 2^k) for nominal degree d (k >= 0), i.e.
/// a_i 2^(k (d - i)).
inline void scale_down_pow2(std::vector<Integer>& v, unsigned long k) {
  if (v.empty() || k == 0) return;
  const std::size_t d = v.size() - 1;
  for (std::size_t i = 0; i < d; ++i) mpz_mul_2exp(v[i].get_mpz_t(), v[i].get_mpz_t(), k * (d - i));
}

/// Coefficients of A(c x): a_i c^i.
inline void scale_variable(std::vector<Integer>& v, const Integer& c) {
  Integer p(1);
  for (std::size_t i = 1; i < v.size(); ++i) {
    p *= c;
    v[i] *= p;
  }
}

/// Divide every entry by the largest common power of two; returns the
/// removed exponent.
inline std::size_t strip_pow2(std::vector<Integer>& v) {
  std::size_t tz = SIZE_MAX;
  for (const auto& c : v) {
    if (c != 0) tz = std::min(tz, trailing_zeros(c));
  }
  if (tz == SIZE_MAX || tz == 0) return 0;
  for (auto& c : v) mpz_fdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), tz);
  return tz;
}

/// Integer polynomial Q with Q(x) proportional to A(lo + (hi - lo) x), so the
/// roots of A in (lo, hi) correspond to roots of Q in (0, 1). The nominal
/// degree deg A is kept (leading zeros allowed).
inline std::vector<Integer> affine_to_unit(const IntPolynomial& a, const DyadicInterval& iv) {
  std::vector<Integer> v = a.coeffs();
  if (v.empty()) return v;
  // Common scale 2^-k for both the offset and the width.
  long k = std::max<long>(0, std::max(-iv.lo.exponent(), -(iv.width().exponent())));
  Integer off = iv.lo.times_pow2(k).numerator();
  Integer wid = iv.width().times_pow2(k).numerator();
  // B(x) = 2^(kd) A(x / 2^k), then B(off + wid x).
  scale_down_pow2(v, static_cast<unsigned long>(k));
  taylor_shift(v, off);
  scale_variable(v, wid);
  return v;
}

}  // namespace rootstat
