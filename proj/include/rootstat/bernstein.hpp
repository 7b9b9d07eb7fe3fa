#pragma once

// Polynomials in the Bernstein basis C(d,k) z^k (1-z)^(d-k) on [0, 1].

#include "bigint.hpp"
#include "polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace rootstat {

struct BernsteinPolynomial {
  int degree = 0;
  std::vector<Rational> coeffs;  // b_0 .. b_d

  BernsteinPolynomial() = default;
  explicit BernsteinPolynomial(std::vector<Rational> b) : degree(static_cast<int>(b.size()) - 1), coeffs(std::move(b)) {
    if (coeffs.empty()) throw std::invalid_argument("BernsteinPolynomial: empty coefficient array");
  }
};

/// P(y) = (1+y)^d P^(y/(1+y)) = sum b_k C(d,k) y^k with denominators cleared.
/// Real roots y of P map to roots z = y/(y+1) of P^: y in (0,inf) to z in
/// (0,1), y in (-inf,-1) to z in (1,inf), y in (-1,0) to z in (-inf,0).
inline IntPolynomial bernstein_to_power(const BernsteinPolynomial& b) {
  std::vector<Rational> c(b.coeffs.size());
  const auto d = static_cast<unsigned long>(b.degree);
  for (unsigned long k = 0; k <= d; ++k) c[k] = b.coeffs[k] * Rational(binomial(d, k));
  return clear_denominators(c);
}

/// P^ itself in the monomial basis of z (denominators cleared).
inline IntPolynomial bernstein_to_monomial(const BernsteinPolynomial& b) {
  IntPolynomial p = bernstein_to_power(b);
  std::vector<Integer> v = p.coeffs();
  v.resize(b.coeffs.size());
  // P^(z) = z^d R(1/z - 1) where R is the reversal of P.
  reverse_in_place(v);
  taylor_shift(v, Integer(-1));
  reverse_in_place(v);
  return IntPolynomial(std::move(v)).primitive_part();
}

/// Integer vector proportional (by a positive factor) to the Bernstein
/// coefficients of a polynomial given by its monomial coefficients q (nominal
/// degree q.size()-1) on [0, 1].
inline std::vector<Integer> bernstein_coefficients(std::vector<Integer> q) {
  const std::size_t n = q.size();
  if (n == 0) return q;
  const unsigned long d = n - 1;
  // (1+x)^d Q(1/(1+x)) = sum_k b_k C(d,k) x^(d-k)
  reverse_in_place(q);
  taylor_shift_one(q);
  Integer l(1);
  for (unsigned long k = 0; k <= d; ++k) l = lcm(l, binomial(d, k));
  std::vector<Integer> b(n);
  for (unsigned long k = 0; k <= d; ++k) {
    b[k] = divexact(l, binomial(d, k)) * q[d - k];
  }
  Integer g(0);
  for (const auto& c : b) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return b;
}

/// Exact value sum b_k C(d,k) z^k (1-z)^(d-k).
inline Rational evaluate(const BernsteinPolynomial& b, const Rational& z) {
  const auto d = static_cast<unsigned long>(b.degree);
  Rational s(0);
  Rational one_minus = Rational(1) - z;
  for (unsigned long k = 0; k <= d; ++k) {
    s += b.coeffs[k] * Rational(binomial(d, k)) * pow(z, k) * pow(one_minus, d - k);
  }
  return s;
}

}  // namespace rootstat
