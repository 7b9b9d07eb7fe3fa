#pragma once

// Arbitrary-precision integer and rational helpers on top of GMP.

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootstat {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

/// Number of bits of |z|; zero has bitsize 0.
inline std::size_t bitsize(const Integer& z) {
  return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer pow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rational pow(const Rational& b, unsigned long e) {
  Rational r(pow(Integer(b.get_num()), e), pow(Integer(b.get_den()), e));
  r.canonicalize();
  return r;
}

/// z * 2^k for k >= 0.
inline Integer shl(const Integer& z, unsigned long k) {
  Integer r;
  mpz_mul_2exp(r.get_mpz_t(), z.get_mpz_t(), k);
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Exact quotient; b must divide a.
inline Integer divexact(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Index of the lowest set bit; z must be nonzero.
inline std::size_t trailing_zeros(const Integer& z) {
  return mpz_scan1(z.get_mpz_t(), 0);
}

/// Parse a decimal integer with optional sign. Throws std::invalid_argument.
inline Integer parse_integer(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed integer: '" + s + "'");
  }
  return z;
}

/// Parse "p", "p/q" or a finite decimal like "-1.25" into an exact rational.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational q(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    if (digits == "-" || digits == "+" || digits.empty()) {
      throw std::invalid_argument("malformed number: '" + s + "'");
    }
    Rational q(parse_integer(digits), pow(Integer(10), frac));
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(s));
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Nearest double to a rational, computed by GMP (may overflow to inf).
inline double to_double(const Rational& q) { return q.get_d(); }

/// log2 |z| as a double, usable for huge z.
inline double log2_abs(const Integer& z) {
  if (z == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double m = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(std::abs(m)) + static_cast<double>(exp);
}

inline double log2_abs(const Rational& q) {
  return log2_abs(Integer(q.get_num())) - log2_abs(Integer(q.get_den()));
}

}  // namespace rootstat
