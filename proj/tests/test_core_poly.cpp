#include <gtest/gtest.h>

#include "rootstat/bernstein.hpp"
#include "rootstat/poly_io.hpp"
#include "rootstat/polynomial.hpp"

#include <cmath>
#include <random>

using namespace rootstat;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = dist(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(std::move(c));
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 17);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST(Evaluate, Examples) {
  IntPolynomial p{-2, 0, 1};
  EXPECT_EQ(evaluate(p, Rational(1)), Rational(-1));
  IntPolynomial q{5, -3, 8, 1};
  EXPECT_EQ(evaluate(q, Rational(0)), Rational(5));
  IntPolynomial r = Integer(7) * IntPolynomial{6, -5, 0, 1};
  EXPECT_EQ(evaluate(r, Rational(3, 2)), Rational(105, 8));
  EXPECT_EQ(evaluate(IntPolynomial{}, Rational(3)), Rational(0));
}

TEST(Evaluate, SignAtDyadicMatchesRational) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    IntPolynomial p = random_poly(rng, 1 + t % 9, 30);
    Dyadic x(Integer(static_cast<long>(rng() % 401) - 200), static_cast<long>(rng() % 9) - 6);
    EXPECT_EQ(sign_at(p, x), sgn(evaluate(p, x.to_rational())));
  }
}

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(IntPolynomial{0, 0, 0, 1}), (IntPolynomial{0, 0, 3}));
  EXPECT_TRUE(derivative(IntPolynomial{9}).is_zero());
  EXPECT_EQ(derivative(IntPolynomial{1, -3, 2}), (IntPolynomial{-3, 4}));
  EXPECT_TRUE(derivative(IntPolynomial{}).is_zero());
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
}

TEST(PseudoDivide, Identity) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    IntPolynomial a = random_poly(rng, 3 + t % 8, 50);
    IntPolynomial b = random_poly(rng, 1 + t % 3, 50);
    auto pd = pseudo_divide(a, b);
    Integer lc_pow = pow(b.leading(), static_cast<unsigned long>(a.degree() - b.degree() + 1));
    EXPECT_EQ(lc_pow * a, pd.quotient * b + pd.remainder);
    EXPECT_LT(pd.remainder.degree(), b.degree());
  }
}

TEST(SquarefreePart, Examples) {
  IntPolynomial p = from_integer_roots({1, 1, -2});
  EXPECT_EQ(squarefree_part(p), from_integer_roots({1, -2}));
  IntPolynomial sq{6, -5, 1};
  EXPECT_EQ(squarefree_part(Integer(4) * sq), sq);
  EXPECT_EQ(squarefree_part(IntPolynomial{1, 0, -2, 0, 1}), (IntPolynomial{-1, 0, 1}));
  EXPECT_THROW(squarefree_part(IntPolynomial{}), std::domain_error);
}

TEST(SquarefreePart, SharesEveryRoot) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    IntPolynomial f = random_poly(rng, 1 + t % 4, 9);
    IntPolynomial g = random_poly(rng, 1 + t % 3, 9);
    IntPolynomial p = f * f * g;
    IntPolynomial s = squarefree_part(p);
    EXPECT_EQ(gcd(s, p), s.normalized());
    EXPECT_EQ(gcd(s, derivative(s)).degree(), 0);
    // Same roots: s divides p and p divides s^k.
    EXPECT_TRUE(pseudo_remainder(p, s).is_zero());
  }
}

TEST(Gcd, KnownCommonFactor) {
  IntPolynomial c = from_integer_roots({3, -1});
  IntPolynomial a = c * IntPolynomial{1, 0, 1};
  IntPolynomial b = c * IntPolynomial{-5, 2};
  EXPECT_EQ(gcd(a, b), c);
  EXPECT_EQ(gcd(Integer(6) * a, Integer(10) * b), c);
}

TEST(BernsteinToPower, Examples) {
  auto bp = [](std::vector<long> b) {
    std::vector<Rational> r(b.begin(), b.end());
    return BernsteinPolynomial(r);
  };
  EXPECT_EQ(bernstein_to_power(bp({1, 1, 1})), (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(bernstein_to_power(bp({0, 1, 0})), (IntPolynomial{0, 1}));  // 2y up to content
  EXPECT_EQ(bernstein_to_power(bp({1, 0, 0, -1})), (IntPolynomial{1, 0, 0, -1}));
}

TEST(BernsteinToPower, ChangeOfVariableIdentity) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    int d = 1 + t % 7;
    std::vector<Rational> b(static_cast<std::size_t>(d) + 1);
    for (auto& x : b) x = random_rational(rng);
    if (b.back() == 0) b.back() = 1;
    BernsteinPolynomial bern(b);
    // Reference: the un-normalized sum b_k C(d,k) y^k, compared up to the
    // positive clearing constant.
    std::vector<Rational> raw(b.size());
    for (int k = 0; k <= d; ++k) raw[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k)] * Rational(binomial(d, k));
    IntPolynomial p = bernstein_to_power(bern);
    Rational scale = Rational(p[0]) != 0 && raw[0] != 0 ? Rational(p[0]) / raw[0] : Rational(0);
    for (int trial = 0; trial < 5; ++trial) {
      Rational y = random_rational(rng);
      if (y == -1) continue;
      Rational z = y / (y + 1);
      Rational lhs = evaluate(p, y);
      Rational rhs = pow(Rational(1) + y, static_cast<unsigned long>(d)) * evaluate(bern, z);
      if (scale != 0) {
        EXPECT_EQ(lhs, scale * rhs);
      } else if (rhs != 0) {
        Rational s2 = lhs / rhs;
        EXPECT_GT(s2, 0);
      }
    }
    // Same thing in the z basis.
    IntPolynomial zp = bernstein_to_monomial(bern);
    Rational z0 = random_rational(rng);
    Rational v1 = evaluate(zp, z0);
    Rational v2 = evaluate(bern, z0);
    EXPECT_EQ(sgn(v1) * sgn(v2) >= 0, true);
  }
}

TEST(BernsteinCoefficients, RoundTrip) {
  std::vector<Rational> b{Rational(3), Rational(-1), Rational(4), Rational(-1), Rational(5)};
  BernsteinPolynomial bern(b);
  IntPolynomial z = bernstein_to_monomial(bern);
  auto back = bernstein_coefficients(z.coeffs());
  ASSERT_EQ(back.size(), b.size());
  Rational ratio = Rational(back[0]) / b[0];
  EXPECT_GT(ratio, 0);
  for (std::size_t k = 0; k < b.size(); ++k) EXPECT_EQ(Rational(back[k]), ratio * b[k]);
}

TEST(DyadicOfFloat, Examples) {
  EXPECT_EQ(dyadic_of_float(0.5).to_rational(), Rational(1, 2));
  EXPECT_EQ(dyadic_of_float(-3.0).to_rational(), Rational(-3));
  Rational tenth(Integer("3602879701896397"), shl(Integer(1), 55));
  EXPECT_EQ(dyadic_of_float(0.1).to_rational(), tenth);
  EXPECT_THROW(dyadic_of_float(std::nan("")), std::invalid_argument);
  EXPECT_THROW(dyadic_of_float(INFINITY), std::invalid_argument);
}

TEST(DyadicOfFloat, ExactAndInjective) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g(0.0, 100.0);
  for (int t = 0; t < 500; ++t) {
    double x = g(rng);
    double y = std::nextafter(x, INFINITY);
    Dyadic dx = dyadic_of_float(x);
    EXPECT_EQ(dx.to_double(), x);
    EXPECT_NE(dx, dyadic_of_float(y));
    EXPECT_EQ(mpq_class(x), dx.to_rational());
  }
}

TEST(ClearDenominators, Examples) {
  EXPECT_EQ(clear_denominators({Rational(1, 3), Rational(1, 2)}), (IntPolynomial{2, 3}));
  EXPECT_EQ(clear_denominators({Rational(4), Rational(8), Rational(-6)}), (IntPolynomial{2, 4, -3}));
  EXPECT_EQ(clear_denominators({Rational(-3, 2), Rational(0), Rational(1, 4)}), (IntPolynomial{-6, 0, 1}));
}

TEST(Dyadic, ArithmeticAndFormat) {
  Dyadic a(Integer(3), -2);  // 3/4
  Dyadic b(Integer(5), -1);  // 5/2
  EXPECT_EQ((a + b).to_rational(), Rational(13, 4));
  EXPECT_EQ(midpoint(a, b).to_rational(), Rational(13, 8));
  EXPECT_EQ(Dyadic(Integer(12), 0).str(), "3*2^2");
  EXPECT_EQ(parse_dyadic("3*2^-2"), a);
  EXPECT_LT(a, b);
  EXPECT_THROW(DyadicInterval(b, a), std::invalid_argument);
}

TEST(AffineToUnit, MapsRoots) {
  IntPolynomial p = from_integer_roots({1, 3});
  DyadicInterval iv(Dyadic(Integer(1), -1), Dyadic(Integer(7), -1));  // [1/2, 7/2]
  IntPolynomial q(affine_to_unit(p, iv));
  // roots at (1 - 1/2)/3 = 1/6 and (3 - 1/2)/3 = 5/6
  EXPECT_EQ(sign_at(q, Rational(1, 6)), 0);
  EXPECT_EQ(sign_at(q, Rational(5, 6)), 0);
  EXPECT_NE(sign_at(q, Rational(1, 2)), 0);
}

TEST(PolyIo, ParseAndFormat) {
  auto t = parse_polynomial_text("2; -2 0 1\n");
  ASSERT_TRUE(std::holds_alternative<IntPolynomial>(t));
  EXPECT_EQ(std::get<IntPolynomial>(t), (IntPolynomial{-2, 0, 1}));
  EXPECT_EQ(format_polynomial(std::get<IntPolynomial>(t)), "2; -2 0 1");
  auto b = parse_polynomial_text("B; 3; 1 0 0 -1");
  ASSERT_TRUE(std::holds_alternative<BernsteinPolynomial>(b));
  EXPECT_EQ(std::get<BernsteinPolynomial>(b).degree, 3);
  EXPECT_EQ(format_polynomial(std::get<BernsteinPolynomial>(b)), "B; 3; 1 0 0 -1");
  EXPECT_THROW(parse_polynomial_text("2; 1 2"), ParseError);
  EXPECT_THROW(parse_polynomial_text("x; 1 2"), ParseError);
  EXPECT_THROW(parse_polynomial_text("1 2 3"), ParseError);
  EXPECT_THROW(parse_polynomial_text("1; 1 z"), ParseError);
}
