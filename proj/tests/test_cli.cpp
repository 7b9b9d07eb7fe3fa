#include <gtest/gtest.h>

#include "cli.hpp"
#include "brute_force.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rootstat;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rootstat");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rootstat_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body) {
    auto p = (dir_ / name).string();
    std::ofstream(p) << body;
    return p;
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream f(p);
    return {std::istreambuf_iterator<char>(f), {}};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, VersionNamesRngAlgorithm) {
  auto r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(kRngAlgorithm), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExit64) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--model", "nope"}).code, cli::kUsage);
  EXPECT_EQ(run({"table1", "--trials", "0"}).code, cli::kUsage);
  auto p = file("p.txt", "2; -2 0 1\n");
  EXPECT_EQ(run({"count", "--in", p, "--interval", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"isolate", "--in", p, "--interval", "0:1/3"}).code, cli::kUsage);
}

TEST_F(CliTest, MalformedFileExits65) {
  auto p = file("bad.txt", "3; 1 2\n");
  auto r = run({"isolate", "--in", p});
  EXPECT_EQ(r.code, cli::kBadInput);
  EXPECT_FALSE(r.err.empty());
}

// x^2 - 2 has one root in each of (-inf, 0] and (0, inf).
TEST_F(CliTest, CountHalfOpen) {
  auto p = file("p.txt", "2; -2 0 1\n");
  EXPECT_EQ(run({"count", "--in", p}).out, "2\n");
  EXPECT_EQ(run({"count", "--in", p, "--interval", "-inf:0"}).out, "1\n");
  EXPECT_EQ(run({"count", "--in", p, "--interval", "3/2:inf"}).out, "0\n");
  // Repeated factors are counted once.
  auto q = file("q.txt", "3; 0 1 -2 1\n");  // x (x-1)^2
  EXPECT_EQ(run({"count", "--in", q}).out, "2\n");
}

// gen -> isolate round trip: every interval holds one root of the oracle.
TEST_F(CliTest, GenThenIsolateAgreesWithOracle) {
  for (std::string model : {"kac", "so2"}) {
    auto p = path(model + ".txt");
    ASSERT_EQ(run({"--seed", "7", "--out", p, "gen", "--model", model, "--degree", "25"}).code, 0);
    auto text = read_polynomial_file(p);
    auto poly = std::get<IntPolynomial>(text);
    auto oracle = rootstat::testing::brute_force_roots(poly);

    auto r = run({"--json", "isolate", "--in", p, "--method", "bernstein"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["intervals"].size(), oracle.size()) << model;
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      double lo = parse_dyadic(j["intervals"][i]["lo"]).to_rational().get_d();
      double hi = parse_dyadic(j["intervals"][i]["hi"]).to_rational().get_d();
      EXPECT_LE(lo, static_cast<double>(oracle[i]) + 1e-9);
      EXPECT_GE(hi, static_cast<double>(oracle[i]) - 1e-9);
    }
    EXPECT_GE(j["stats"]["tree_nodes"].get<long>(), 1);
  }
}

TEST_F(CliTest, IsolateOnSubintervalAndRefine) {
  auto p = file("p.txt", "3; 0 -4 0 1\n");  // x^3 - 4x, roots -2, 0, 2
  auto r = run({"isolate", "--in", p, "--interval", "1:8", "--eps", "1/1024"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream is(r.out);
  std::string header, line, extra;
  std::getline(is, header);
  std::getline(is, line);
  EXPECT_FALSE(std::getline(is, extra));
  auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
  Rational lo = parse_dyadic(line.substr(0, c1)).to_rational();
  Rational hi = parse_dyadic(line.substr(c1 + 1, c2 - c1 - 1)).to_rational();
  EXPECT_LE(lo, 2);
  EXPECT_GE(hi, 2);
  EXPECT_LE(hi - lo, Rational(1, 1024));
}

// Bernstein files are isolated through their monomial form in z.
TEST_F(CliTest, BernsteinFileRoots) {
  // -(1-z)^2 + 2z(1-z) + 3z^2 = 4z - 1
  auto p = file("b.txt", "B; 2; -1 1 3\n");
  EXPECT_EQ(run({"count", "--in", p}).out, "1\n");
  EXPECT_EQ(run({"count", "--in", p, "--interval", "1/4:1"}).out, "0\n");
  EXPECT_EQ(run({"count", "--in", p, "--interval", "0:1/4"}).out, "1\n");
}

TEST_F(CliTest, BoundsDominateRoots) {
  auto p = file("p.txt", "2; 6 -5 1\n");
  auto r = run({"--json", "bound", "--in", p});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_GE(parse_dyadic(j["hong_positive"]).to_rational(), 3);
  EXPECT_EQ(j["cauchy"], "7");
}

TEST_F(CliTest, DensityCountMatchesLibrary) {
  auto r = run({"--json", "density", "--model", "kac", "--degree", "30", "--points", "3", "--count"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["expected_count_all"].get<double>(), ek_expected_count(RandomModel::Kac, 30), 1e-6);
  ASSERT_EQ(j["rows"].size(), 3u);
  EXPECT_NEAR(j["rows"][1]["ek_density"].get<double>(), ek_density(DensityModel::of(RandomModel::Kac, 30), 0.0), 1e-5);
}

// The lower binomial-ratio bound fails already at d = 2, k = 1; --check must say so.
TEST_F(CliTest, IdentitiesCheckReportsViolation) {
  auto r = run({"--check", "identities", "--max-n", "6", "--max-d", "12", "--max-wallis", "40"});
  EXPECT_EQ(r.code, cli::kCheckFailed);
  EXPECT_NE(r.err.find("FAIL binomial_ratio_lower"), std::string::npos);
  EXPECT_NE(r.err.find("PASS binomial_sum_identity"), std::string::npos);
  EXPECT_NE(r.err.find("PASS wallis_bound"), std::string::npos);
}

TEST_F(CliTest, Table1WritesRawLogAndIsReproducible) {
  auto raw1 = path("raw1.csv"), raw2 = path("raw2.csv");
  auto a = run({"--seed", "3", "table1", "--degrees", "10,14", "--trials", "6", "--counter", "descartes", "--raw", raw1});
  auto b = run({"--seed", "3", "--jobs", "3", "table1", "--degrees", "10,14", "--trials", "6", "--counter", "descartes", "--raw", raw2});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(slurp(raw1), slurp(raw2));
  // header + 12 trials
  auto raw = slurp(raw1);
  EXPECT_EQ(std::count(raw.begin(), raw.end(), '\n'), 13);
  // No reference row exists for these degrees: --check has nothing to fail.
  auto c = run({"--check", "table1", "--degrees", "10", "--trials", "2", "--raw", "-"});
  EXPECT_EQ(c.code, 0);
}

TEST_F(CliTest, ConfigFileSuppliesDefaults) {
  auto cfg = file("run.toml", "seed = 11\n");
  auto out = path("g.txt");
  ASSERT_EQ(run({"--config", cfg, "--out", out, "gen", "--model", "kac", "--degree", "6"}).code, 0);
  auto direct = run({"--seed", "11", "gen", "--model", "kac", "--degree", "6"});
  EXPECT_EQ(slurp(out), direct.out);
  auto other = run({"--seed", "12", "gen", "--model", "kac", "--degree", "6"});
  EXPECT_NE(other.out, direct.out);
}

TEST_F(CliTest, SmallExperimentsRunInJson) {
  auto s = run({"--json", "sep", "--model", "so2", "--degrees", "30", "--trials", "20", "--probs", "0.1,0.3"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(nlohmann::json::parse(s.out)["rows"].size(), 2u);

  auto v = run({"--json", "solver-bench", "--degrees", "20", "--trials", "3", "--methods", "descartes,bernstein"});
  ASSERT_EQ(v.code, 0) << v.err;
  auto rows = nlohmann::json::parse(v.out)["rows"];
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[0]["max_nodes_over_rhs"].is_number());

  auto u = run({"uniformity", "--degrees", "20", "--trials", "5"});
  ASSERT_EQ(u.code, 0) << u.err;
  auto e = run({"ek-mc", "--model", "kac", "--degrees", "20", "--trials", "30"});
  ASSERT_EQ(e.code, 0) << e.err;
}
