#include <gtest/gtest.h>

#include "rootstat/bench.hpp"
#include "brute_force.hpp"

#include <cmath>
#include <numbers>

using namespace rootstat;
using rootstat::testing::brute_force_roots;

namespace {

ExperimentConfig small_table1(CounterMethod m) {
  ExperimentConfig cfg;
  cfg.model = RandomModel::BernsteinStd;
  cfg.degrees = {12, 20};
  cfg.trials = 8;
  cfg.seed = 5;
  cfg.counter = m;
  return cfg;
}

}  // namespace

// The four columns against a sign-scan of the Bernstein form in z, which
// needs no change of variable.
TEST(Table1Trial, MatchesOracleOnBernsteinForm) {
  for (std::uint64_t t = 0; t < 15; ++t) {
    int d = 6 + static_cast<int>(t % 10);
    auto tr = table1_trial(RandomModel::BernsteinStd, d, 99, t, CounterMethod::Sturm);
    ASSERT_EQ(tr.resamples, 0);
    auto sample = sample_polynomial(RandomModel::BernsteinStd, d, 99, t);
    IntPolynomial z = bernstein_to_monomial(exact_bernstein(sample));
    std::array<int, 4> expect{};
    for (long double r : brute_force_roots(z)) {
      if (r < -1) ++expect[0];
      else if (r < 0) ++expect[1];
      else if (r < 1) ++expect[2];
      else ++expect[3];
    }
    EXPECT_EQ(tr.counts, expect) << "trial " << t;
    EXPECT_EQ(tr.total, expect[0] + expect[1] + expect[2] + expect[3]);
  }
}

TEST(Table1Trial, CountersAgree) {
  for (std::uint64_t t = 0; t < 10; ++t) {
    auto a = table1_trial(RandomModel::BernsteinStd, 40, 3, t, CounterMethod::Sturm);
    auto b = table1_trial(RandomModel::BernsteinStd, 40, 3, t, CounterMethod::Descartes);
    auto c = table1_trial(RandomModel::BernsteinStd, 40, 3, t, CounterMethod::Bernstein);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(a.counts, c.counts);
    EXPECT_EQ(a.total, b.total);
  }
}

TEST(RunTable1, SingleTrialRowIsThatTrial) {
  ExperimentConfig cfg = small_table1(CounterMethod::Sturm);
  cfg.degrees = {30};
  cfg.trials = 1;
  auto res = run_table1(cfg);
  ASSERT_EQ(res.rows.size(), 1U);
  ASSERT_EQ(res.raw.size(), 1U);
  const auto& row = res.rows[0];
  EXPECT_EQ(row.mean_total, res.raw[0].total);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(row.mean[k], res.raw[0].counts[k]);
  EXPECT_EQ(row.sd_total, 0.0);
}

TEST(RunTable1, ConservationAndAggregation) {
  auto res = run_table1(small_table1(CounterMethod::Descartes));
  ASSERT_EQ(res.rows.size(), 2U);
  for (const auto& t : res.raw) EXPECT_EQ(t.total, t.counts[0] + t.counts[1] + t.counts[2] + t.counts[3]);
  for (const auto& r : res.rows) EXPECT_NEAR(r.mean_total, r.mean[0] + r.mean[1] + r.mean[2] + r.mean[3], 1e-12);
  // Re-aggregating the raw log reproduces the rows.
  auto again = aggregate_table1(res.raw, 5);
  EXPECT_EQ(table1_table(again).to_csv(), table1_table(res.rows).to_csv());
  EXPECT_EQ(table1_table(res.rows).header.size(), 10U);
}

TEST(RunTable1, ByteIdenticalAcrossRunsAndWidths) {
  auto cfg = small_table1(CounterMethod::Descartes);
  std::string a = table1_table(run_table1(cfg).rows).to_csv();
  std::string b = table1_table(run_table1(cfg).rows).to_csv();
  cfg.jobs = 4;
  auto par = run_table1(cfg);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, table1_table(par.rows).to_csv());
  EXPECT_EQ(table1_raw_table(par.raw).to_csv(), table1_raw_table(run_table1(small_table1(CounterMethod::Descartes)).raw).to_csv());
}

// Roughly 3/4 of the roots are positive in z and 1/2 lie in (0, 1).
TEST(RunTable1, PositiveRootFractions) {
  ExperimentConfig cfg;
  cfg.model = RandomModel::BernsteinStd;
  cfg.degrees = {300};
  cfg.trials = 100;
  cfg.counter = CounterMethod::Descartes;
  auto rows = run_table1(cfg).rows;
  const auto& r = rows[0];
  EXPECT_NEAR((r.mean[2] + r.mean[3]) / r.mean_total, 0.75, 0.05);
  EXPECT_NEAR(r.mean[2] / r.mean_total, 0.5, 0.05);
}

TEST(SampleRealRoots, MatchOracle) {
  for (auto m : {RandomModel::Kac, RandomModel::SO2, RandomModel::Weyl}) {
    auto s = sample_polynomial(m, 14, 17);
    auto roots = sample_real_roots(s, root_scale_shift(m, 14), CounterMethod::Descartes);
    auto oracle = brute_force_roots(exactify(s));
    ASSERT_EQ(roots.size(), oracle.size()) << to_string(m);
    for (std::size_t i = 0; i < roots.size(); ++i) EXPECT_NEAR(roots[i], static_cast<double>(oracle[i]), 1e-9 * std::max(1.0, std::fabs(roots[i])));
  }
}

TEST(RunSep, LargeLengthGivesCertainty) {
  ExperimentConfig cfg;
  cfg.model = RandomModel::SO2;
  cfg.trials = 20;
  auto res = run_sep(cfg, 30, {100.0, 1e-12});
  EXPECT_EQ(res.rows[0].empirical, 1.0);
  EXPECT_EQ(res.rows[1].empirical, 0.0);
  EXPECT_EQ(res.rows[0].used + res.rows[0].skipped, 20);
  // Straightened roots have unit density, so the mean gap is near 1.
  EXPECT_NEAR(res.mean_gap, 1.0, 0.25);
  EXPECT_THROW(run_sep([] { ExperimentConfig c; c.model = RandomModel::Kac; return c; }(), 10, {0.1}), std::invalid_argument);
}

TEST(RunSep, DeterministicAcrossWidths) {
  ExperimentConfig cfg;
  cfg.model = RandomModel::Weyl;
  cfg.trials = 12;
  std::string a = sep_table(run_sep(cfg, 40, {0.1, 0.3}), cfg.seed).to_csv();
  cfg.jobs = 3;
  EXPECT_EQ(a, sep_table(run_sep(cfg, 40, {0.1, 0.3}), cfg.seed).to_csv());
}

TEST(Uniformity, SelfChecks) {
  // Exactly uniform angles map back to z = (1 + cos theta) / 2.
  std::vector<double> z;
  for (int i = 0; i < 2000; ++i) z.push_back((1 + std::cos((i + 0.5) * std::numbers::pi / 2000)) / 2);
  EXPECT_LT(uniformity_from_roots(z).ks.statistic, 0.05);
  auto bad = uniformity_from_roots(std::vector<double>(50, 0.999999));
  EXPECT_GT(bad.ks.statistic, 0.99);
  EXPECT_THROW(uniformity_from_roots({}), std::domain_error);
}

TEST(Uniformity, UnitRootsMatchOracle) {
  auto s = sample_polynomial(RandomModel::BernsteinStd, 16, 8);
  auto got = bernstein_unit_roots(s, CounterMethod::Bernstein);
  std::vector<double> want;
  for (long double r : brute_force_roots(bernstein_to_monomial(exact_bernstein(s))))
    if (r > 0 && r < 1) want.push_back(static_cast<double>(r));
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-9);
}

TEST(RunEkMc, So2WithinThreeStandardErrors) {
  ExperimentConfig cfg;
  cfg.model = RandomModel::SO2;
  cfg.degrees = {100};
  cfg.trials = 100;
  auto rows = run_ek_mc(cfg);
  EXPECT_NEAR(rows[0].prediction, 10.0, 1e-6);
  EXPECT_LT(std::fabs(rows[0].z), 3.0);
  cfg.model = RandomModel::Weyl;
  EXPECT_LT(std::fabs(run_ek_mc(cfg)[0].z), 3.0);
}

TEST(Solver, NoRootsIsSingleNode) {
  for (auto m : {CounterMethod::Sturm, CounterMethod::Descartes, CounterMethod::Bernstein}) {
    auto t = instrument_isolation(IntPolynomial{1, 0, 1}, m);
    EXPECT_EQ(t.tree_nodes, 1);
    EXPECT_EQ(t.roots, 0);
  }
}

TEST(Solver, ConstructedProductIsDeterministic) {
  IntPolynomial p = from_integer_roots({1, 2, 3, 4, 5, 6});
  DyadicInterval I0(Dyadic(0), Dyadic(8));
  for (auto m : {CounterMethod::Sturm, CounterMethod::Descartes, CounterMethod::Bernstein}) {
    auto a = isolate(p, I0, m);
    auto b = isolate(p, I0, m);
    EXPECT_EQ(a.stats.tree_nodes, b.stats.tree_nodes);
    EXPECT_LE(a.stats.tree_nodes, 20);
    EXPECT_EQ(a.roots.size(), 6U);
  }
}

TEST(Solver, TreeWithinEnvelopeOnSmallCorpus) {
  ExperimentConfig cfg;
  cfg.model = RandomModel::SO2;
  cfg.degrees = {40};
  cfg.trials = 20;
  auto res = run_solver(cfg, {CounterMethod::Descartes, CounterMethod::Bernstein});
  ASSERT_EQ(res.rows.size(), 2U);
  for (const auto& r : res.rows) EXPECT_LE(r.max_ratio, 4.0);
  EXPECT_EQ(res.rows[0].mean_nodes, res.rows[1].mean_nodes);
  EXPECT_EQ(solver_table(res.rows, false).header.size(), 8U);
  EXPECT_EQ(solver_table(res.rows, true).header.size(), 9U);
}

TEST(ParallelMap, OrderAndErrors) {
  auto v = parallel_map(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], static_cast<int>(i * i));
  EXPECT_THROW(parallel_map(10, 3, [](std::size_t i) -> int {
                 if (i == 7) throw std::runtime_error("boom");
                 return 0;
               }),
               std::runtime_error);
}

TEST(ExperimentConfig, Validation) {
  ExperimentConfig c;
  c.trials = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.trials = 1;
  c.degrees = {};
  EXPECT_THROW(c.validate(), std::invalid_argument);
}
