#include <gtest/gtest.h>

#include "rootstat/randgen.hpp"
#include "rootstat/stats.hpp"

#include <cmath>
#include <numbers>

using namespace rootstat;

TEST(VarianceVector, Examples) {
  auto so2 = variance_vector(RandomModel::SO2, 4);
  EXPECT_EQ(so2, (std::vector<double>{1, 4, 6, 4, 1}));
  auto weyl = variance_vector(RandomModel::Weyl, 3);
  ASSERT_EQ(weyl.size(), 4U);
  EXPECT_NEAR(weyl[0], 1.0, 1e-15);
  EXPECT_NEAR(weyl[1], 1.0, 1e-15);
  EXPECT_NEAR(weyl[2], 0.5, 1e-15);
  EXPECT_NEAR(weyl[3], 1.0 / 6, 1e-15);
  auto sk = variance_vector(RandomModel::BernsteinSk, 4);
  EXPECT_NEAR(sk[2], std::sqrt(std::numbers::pi), 1e-12);
  EXPECT_EQ(sk[0], 1.0);
  EXPECT_EQ(sk[4], 1.0);
  EXPECT_EQ(variance_vector(RandomModel::Kac, 5), std::vector<double>(6, 1.0));
  EXPECT_THROW(variance_vector(RandomModel::Kac, 0), std::domain_error);
}

TEST(VarianceVector, LogFormAgrees) {
  for (auto m : {RandomModel::Kac, RandomModel::SO2, RandomModel::Weyl, RandomModel::BernsteinSk}) {
    auto v = variance_vector(m, 30);
    auto lv = log_variance_vector(m, 30);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(std::log(v[i]), lv[i], 1e-10);
  }
}

TEST(SamplePolynomial, Deterministic) {
  for (auto m : {RandomModel::Kac, RandomModel::SO2, RandomModel::Weyl, RandomModel::BernsteinStd, RandomModel::BernsteinSk}) {
    auto a = sample_polynomial(m, 50, 42, 3);
    auto b = sample_polynomial(m, 50, 42, 3);
    EXPECT_EQ(a.mantissa, b.mantissa);
    EXPECT_EQ(a.exp2, b.exp2);
    auto c = sample_polynomial(m, 50, 42, 4);
    EXPECT_NE(a.mantissa, c.mantissa);
    EXPECT_EQ(a.basis, is_bernstein(m) ? Basis::Bernstein : Basis::Power);
  }
}

TEST(SamplePolynomial, StreamIsPinned) {
  // Guards the seed-stability contract: these words must never change.
  NormalStream s(0);
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(s.word(0), splitmix64(0x9e3779b97f4a7c15ULL));
}

TEST(SamplePolynomial, KacCoefficientMoments) {
  std::vector<double> x;
  for (int t = 0; t < 10000; ++t) x.push_back(sample_polynomial(RandomModel::Kac, 5, 7, static_cast<std::uint64_t>(t)).coeff(3));
  double m = mean(x);
  double sd = sample_sd(x);
  EXPECT_NEAR(m, 0.0, 0.05);
  EXPECT_NEAR(sd * sd, 1.0, 0.1);
}

TEST(SamplePolynomial, WeylRescaledVariance) {
  std::vector<double> x;
  for (int t = 0; t < 1000; ++t) {
    auto p = sample_polynomial(RandomModel::Weyl, 9, 11, static_cast<std::uint64_t>(t));
    for (std::size_t i = 0; i < p.mantissa.size(); ++i) x.push_back(p.coeff(i) * std::sqrt(std::tgamma(i + 1.0)));
  }
  double sd = sample_sd(x);
  EXPECT_NEAR(sd * sd, 1.0, 0.1);
}

TEST(SamplePolynomial, WeylLargeDegreeStaysFinite) {
  auto p = sample_polynomial(RandomModel::Weyl, 1000, 1);
  for (std::size_t i = 0; i < p.mantissa.size(); ++i) {
    EXPECT_TRUE(std::isfinite(p.mantissa[i]));
    EXPECT_LT(std::fabs(p.mantissa[i]), 20.0);
  }
  // 1000! is about 2^8530, so the top coefficient carries exponent near -4265.
  EXPECT_NEAR(static_cast<double>(p.exp2.back()), -0.5 * std::lgamma(1001.0) / std::numbers::ln2, 1.0);
}

TEST(NormalStream, PassesKsAgainstNormal) {
  NormalStream s = NormalStream::for_trial(2024, RandomModel::Kac, 1, 0);
  std::vector<double> x;
  for (int i = 0; i < 10000; ++i) x.push_back(s.next());
  auto ks = ks_test(x, standard_normal_cdf);
  EXPECT_GT(ks.p_value, 1e-3);
  EXPECT_LT(ks.statistic, 0.03);
}

TEST(KsTest, SelfChecks) {
  std::vector<double> u;
  for (int i = 0; i < 1000; ++i) u.push_back((i + 0.5) / 1000.0);
  auto uni = [](double t) { return std::clamp(t, 0.0, 1.0); };
  EXPECT_LT(ks_test(u, uni).statistic, 0.05);
  auto bad = ks_test(std::vector<double>(100, 0.999), uni);
  EXPECT_GT(bad.statistic, 0.99);
  EXPECT_LT(bad.p_value, 1e-10);
  EXPECT_THROW(ks_test({}, uni), std::domain_error);
  // Tail reference values of the Kolmogorov distribution.
  EXPECT_NEAR(kolmogorov_tail(1.3581), 0.05, 1e-4);
  EXPECT_NEAR(kolmogorov_tail(1.6276), 0.01, 1e-4);
}

TEST(Exactify, Examples) {
  EXPECT_EQ(exactify(std::vector<double>{0.5, -1.0}), (IntPolynomial{1, -2}));
  EXPECT_EQ(exactify(std::vector<double>{3.0, -7.0, 2.0}), (IntPolynomial{3, -7, 2}));
  IntPolynomial p = exactify(std::vector<double>{0.1, 0.3});
  EXPECT_EQ(p.degree(), 1);
  // 0.1 and 0.3 as exact dyadics, ratio preserved.
  Rational r(p[1], p[0]);
  r.canonicalize();
  EXPECT_EQ(r, Rational(mpq_class(0.3)) / Rational(mpq_class(0.1)));
  RealPolynomial inf;
  inf.mantissa = {1.0, INFINITY};
  inf.exp2 = {0, 0};
  EXPECT_THROW(exactify(inf), std::invalid_argument);
}

TEST(Exactify, PreservesSignsAndRatios) {
  for (auto m : {RandomModel::Kac, RandomModel::SO2, RandomModel::Weyl}) {
    auto s = sample_polynomial(m, 40, 5, 1);
    IntPolynomial p = exactify(s);
    ASSERT_EQ(p.degree(), 40);
    for (std::size_t i = 0; i <= 40; ++i) EXPECT_EQ(sgn(p[i]), s.mantissa[i] > 0 ? 1 : -1);
    // Exact ratio check on two coefficients.
    Rational lhs(p[7], p[3]);
    lhs.canonicalize();
    Rational rhs = Rational(mpq_class(s.mantissa[7])) / Rational(mpq_class(s.mantissa[3])) *
                   (s.exp2[7] >= s.exp2[3] ? Rational(shl(Integer(1), static_cast<unsigned long>(s.exp2[7] - s.exp2[3])))
                                           : Rational(1) / Rational(shl(Integer(1), static_cast<unsigned long>(s.exp2[3] - s.exp2[7]))));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Exactify, ShiftScalesRoots) {
  auto s = sample_polynomial(RandomModel::Weyl, 12, 9);
  IntPolynomial p = exactify(s);
  IntPolynomial q = exactify(s, 3);
  // q(y) is proportional to p(8 y).
  for (long k = -5; k <= 5; ++k) EXPECT_EQ(sign_at(q, Rational(k, 7)), sign_at(p, Rational(8 * k, 7)));
}

TEST(ExactBernstein, MatchesSample) {
  auto s = sample_polynomial(RandomModel::BernsteinSk, 10, 4);
  auto b = exact_bernstein(s);
  ASSERT_EQ(b.degree, 10);
  for (std::size_t i = 0; i <= 10; ++i) EXPECT_EQ(sgn(b.coeffs[i]), s.mantissa[i] > 0 ? 1 : -1);
  EXPECT_THROW(exactify(s), std::invalid_argument);
}
