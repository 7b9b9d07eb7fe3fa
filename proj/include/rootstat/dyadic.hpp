#pragma once

// Dyadic rationals m * 2^e and intervals with dyadic endpoints.

#include "bigint.hpp"

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace rootstat {

/// Exact value mantissa * 2^exponent, kept normalized: the mantissa is odd,
/// or zero with exponent 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : mantissa_(v) { normalize(); }  // NOLINT: implicit by intent
  Dyadic(Integer mantissa, long exponent = 0)
      : mantissa_(std::move(mantissa)), exponent_(exponent) {
    normalize();
  }

  static Dyadic pow2(long e) { return Dyadic(Integer(1), e); }

  const Integer& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }
  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return mantissa_ == 0; }

  /// Numerator over the denominator 2^k, k = max(0, -exponent).
  Integer numerator() const {
    return exponent_ >= 0 ? shl(mantissa_, static_cast<unsigned long>(exponent_)) : mantissa_;
  }
  unsigned long denominator_log2() const {
    return exponent_ < 0 ? static_cast<unsigned long>(-exponent_) : 0UL;
  }

  Rational to_rational() const {
    Rational q;
    if (exponent_ >= 0) {
      q = Rational(shl(mantissa_, static_cast<unsigned long>(exponent_)));
    } else {
      mpq_set_z(q.get_mpq_t(), mantissa_.get_mpz_t());
      mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-exponent_));
    }
    return q;
  }

  double to_double() const {
    return std::ldexp(mantissa_.get_d(), static_cast<int>(exponent_));
  }

  /// Bits needed for the numerator plus the denominator exponent.
  std::size_t bitsize() const {
    return rootstat::bitsize(mantissa_) + static_cast<std::size_t>(std::labs(exponent_));
  }

  /// "m*2^e", the exact wire format used by the CLI.
  std::string str() const {
    return mantissa_.get_str() + "*2^" + std::to_string(exponent_);
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long e = std::min(a.exponent_, b.exponent_);
    return Dyadic(shl(a.mantissa_, static_cast<unsigned long>(a.exponent_ - e)) +
                      shl(b.mantissa_, static_cast<unsigned long>(b.exponent_ - e)),
                  e);
  }
  friend Dyadic operator-(const Dyadic& a) { return Dyadic(Integer(-a.mantissa_), a.exponent_); }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(Integer(a.mantissa_ * b.mantissa_), a.exponent_ + b.exponent_);
  }
  Dyadic half() const { return is_zero() ? *this : Dyadic(mantissa_, exponent_ - 1); }
  Dyadic times_pow2(long k) const { return is_zero() ? *this : Dyadic(mantissa_, exponent_ + k); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  void normalize() {
    if (mantissa_ == 0) {
      exponent_ = 0;
      return;
    }
    std::size_t tz = trailing_zeros(mantissa_);
    if (tz > 0) {
      mpz_fdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
      exponent_ += static_cast<long>(tz);
    }
  }

  Integer mantissa_{0};
  long exponent_ = 0;
};

inline Dyadic midpoint(const Dyadic& a, const Dyadic& b) { return (a + b).half(); }

/// Parse "m*2^e" or a plain integer.
inline Dyadic parse_dyadic(const std::string& s) {
  auto star = s.find("*2^");
  if (star == std::string::npos) return Dyadic(parse_integer(s), 0);
  return Dyadic(parse_integer(s.substr(0, star)), std::stol(s.substr(star + 3)));
}

/// The exact binary value of a finite double.
inline Dyadic dyadic_of_float(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("dyadic_of_float: non-finite value");
  if (x == 0.0) return Dyadic();
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e, 0.5 <= |m| < 1
  // 2^53 * m is an exact integer for every double.
  auto scaled = static_cast<long long>(std::ldexp(m, 53));
  Integer mant;
  mpz_set_si(mant.get_mpz_t(), static_cast<long>(scaled));
  return Dyadic(mant, static_cast<long>(e) - 53);
}

/// Closed interval [lo, hi] with dyadic endpoints; lo == hi only for a
/// point located exactly.
struct DyadicInterval {
  Dyadic lo;
  Dyadic hi;

  DyadicInterval() = default;
  DyadicInterval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw std::invalid_argument("DyadicInterval: lo > hi");
  }

  Dyadic width() const { return hi - lo; }
  Dyadic mid() const { return midpoint(lo, hi); }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo.to_rational() <= x && x <= hi.to_rational(); }
  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

}  // namespace rootstat
