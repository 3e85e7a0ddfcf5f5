#include "supersplit/cli.hpp"
#include "supersplit/factor_cache.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using supersplit::cli::run;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(SUPERSPLIT_TEST_DATA) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

// Scoped environment variable override.
class EnvVar {
 public:
  EnvVar(const char* name, const std::string& value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    ::setenv(name, value.c_str(), 1);
  }
  ~EnvVar() {
    if (old_)
      ::setenv(name_, old_->c_str(), 1);
    else
      ::unsetenv(name_);
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

std::filesystem::path temp_file(const std::string& stem) {
  return std::filesystem::temp_directory_path() / (stem + "_" + std::to_string(::getpid()) + ".txt");
}

}  // namespace

TEST(Cli, Genus) {
  auto r = invoke({"genus", "--n", "2", "--d", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "g = 2\n");
  EXPECT_EQ(invoke({"genus", "--n", "3", "--d", "4"}).out, "g = 3\n");
  EXPECT_EQ(invoke({"genus", "--r", "2", "--lambda", "1", "--m", "2"}).out, "g = 1\n");
  EXPECT_EQ(invoke({"genus", "--family-X", "--r", "19", "--s", "6"}).out, "g = 64530\n");
  EXPECT_EQ(invoke({"--format", "json", "genus", "--n", "2", "--d", "5"}).out, "{\n  \"g\": 2\n}\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"genus", "--n", "2", "--d", "2"}).code, 2);  // d <= n
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"nonsense"}).code, 2);
  EXPECT_EQ(invoke({"genus"}).code, 2);
  EXPECT_EQ(invoke({"--budget-ms", "0", "genus", "--n", "2", "--d", "5"}).code, 2);
  EXPECT_EQ(invoke({"--format", "csv", "genus", "--n", "2", "--d", "5"}).code, 2);
  EXPECT_EQ(invoke({"split", "--n", "2"}).code, 2);
  EXPECT_EQ(invoke({"group", "verify", "--tag", "G5", "--n", "2", "--m", "2"}).code, 2);
  auto r = invoke({"factor", "-5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "error"));
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, FamilyTable) {
  auto r = invoke({"family", "table", "--s-max", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "s | m | r\n"
            "1 | 2 | 2\n"
            "2 | 2 | 1\n"
            "6 | 18 | 19\n"
            "18 | 27594 | 29125\n"
            "42 | 204560302842 | 209430786241\n");
  auto csv = invoke({"--format", "csv", "family", "table", "--s-max", "50"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_TRUE(contains(csv.out, "6,18,19,"));
  auto json = invoke({"--format", "json", "family", "table", "--s-max", "50"});
  EXPECT_TRUE(contains(json.out, "\"209430786241\""));
}

TEST(Cli, FamilyTableGatesLargeS) {
  auto r = invoke({"--format", "csv", "family", "table", "--s-max", "130"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "126,,,,unresolved-factoring,"));
  auto t = invoke({"family", "table", "--s-max", "130"});
  EXPECT_TRUE(contains(t.out, "126 | - | - | unresolved (factoring timeout)"));
}

TEST(Cli, FamilySolveAndCheck) {
  auto r = invoke({"family", "solve", "--s", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "6 | 18 | 19"));
  auto c = invoke({"family", "check", "--r", "19", "--m", "18", "--s", "6"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(contains(c.out, "family_condition = true"));
  EXPECT_TRUE(contains(c.out, "genus_X = 64530"));
  EXPECT_TRUE(contains(c.out, "sum_components = 64530"));
}

TEST(Cli, AdmissibleAndSequences) {
  EXPECT_EQ(invoke({"family", "admissible", "--bound", "21"}).out, "1 2 4 6 12 18 20\n");
  EXPECT_EQ(invoke({"seq", "A014945", "--bound", "250"}).out, "1 3 9 21 27 63 81 147 171 189 243\n");
  EXPECT_EQ(invoke({"seq", "A014957", "--bound", "120"}).out,
            "1 3 5 9 15 21 25 27 39 45 55 63 75 81 105 117\n");
  EXPECT_EQ(invoke({"seq", "A000001"}).code, 2);
}

TEST(Cli, Split) {
  auto yes = invoke({"split", "--n", "2", "--m", "2", "--delta", "3"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_TRUE(contains(yes.out, "splits=true"));
  EXPECT_TRUE(contains(yes.out, "g = 2, g1 = 1, g2 = 1"));
  EXPECT_TRUE(contains(yes.out, "prime case = B"));
  auto no = invoke({"split", "--n", "2", "--m", "3", "--delta", "3"});
  EXPECT_EQ(no.code, 0);
  EXPECT_TRUE(contains(no.out, "splits=false"));
  auto en = invoke({"--format", "csv", "split", "--enumerate", "--n-max", "3", "--m-max", "3", "--delta-max", "3"});
  EXPECT_EQ(en.code, 0);
  EXPECT_EQ(en.out.substr(0, en.out.find('\n')), "n,m,delta,lhs,rhs,splits,g,g1,g2");
  EXPECT_TRUE(contains(en.out, "3,3,1,"));
}

TEST(Cli, Curve) {
  auto r = invoke({"curve", "--n", "2", "--m", "2", "--delta", "2", "--coeffs", "3", "--quotients"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "y^2 = x^4 + 3*x^2 + 1"));
  EXPECT_TRUE(contains(r.out, "genus = 1"));
  EXPECT_TRUE(contains(r.out, "X1: "));
  EXPECT_EQ(invoke({"curve", "--n", "2", "--m", "2", "--delta", "2", "--coeffs", "2"}).code, 2);  // not squarefree
}

TEST(Cli, Groups) {
  auto c = invoke({"group", "candidates", "--n", "3", "--m", "2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(contains(c.out, "Metacyclic(l=2)"));
  auto v = invoke({"group", "verify", "--tag", "Metacyclic", "--n", "3", "--m", "2", "--l", "2", "--gap"});
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(contains(v.out, "outcome = order matches"));
  EXPECT_TRUE(contains(v.out, "actual order = 6"));
  EXPECT_TRUE(contains(v.out, "FreeGroup(\"gamma\", \"sigma\")"));
  auto big = invoke({"group", "verify", "--tag", "D2mn", "--n", "80", "--m", "80"});
  EXPECT_TRUE(contains(big.out, "outcome = too large"));
  auto red = invoke({"group", "reduced", "--r", "2", "--m", "5"});
  EXPECT_TRUE(contains(red.out, "D2m (m = 5)"));
}

TEST(Cli, AccolaAndKaniRosen) {
  auto a = invoke({"accola", "--input", data("v4_partition.json")});
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(contains(a.out, "residual = 0"));
  EXPECT_TRUE(contains(a.out, "holds = true"));
  auto ie = invoke({"accola", "--input", data("v4_inclusion_exclusion.json")});
  EXPECT_TRUE(contains(ie.out, "residual = 0"));
  auto k = invoke({"kani-rosen", "--input", data("v4_kani_rosen.json")});
  EXPECT_EQ(k.code, 0);
  EXPECT_TRUE(contains(k.out, "holds = true"));
  auto k2 = invoke({"kani-rosen", "--n", "2", "--m", "2", "--delta", "3"});
  EXPECT_TRUE(contains(k2.out, "holds = true"));
  EXPECT_EQ(invoke({"accola", "--input", data("missing.json")}).code, 2);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> cases = {
      {"--format", "json", "family", "table", "--s-max", "50"},
      {"--format", "csv", "split", "--enumerate", "--n-max", "8", "--m-max", "8", "--delta-max", "20"},
      {"group", "candidates", "--n", "4", "--m", "2", "--reduced", "D2m", "--gap"},
  };
  for (const auto& args : cases) EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, FactorCacheFlagAndEnv) {
  const auto flag_path = temp_file("supersplit_cli_cache_flag");
  const auto env_path = temp_file("supersplit_cli_cache_env");
  std::filesystem::remove(flag_path);
  std::filesystem::remove(env_path);

  auto r = invoke({"--cache", flag_path.string(), "factor", "1000000016000000063"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1000000016000000063 = 1000000007^1 * 1000000009^1\n");
  EXPECT_EQ(supersplit::arith::FactorCache(flag_path).size(), 1u);

  {
    EnvVar env("SUPERSPLIT_FACTOR_CACHE", env_path.string());
    EXPECT_EQ(invoke({"factor", "720720"}).code, 0);
  }
  EXPECT_EQ(supersplit::arith::FactorCache(env_path).size(), 1u);

  std::filesystem::remove(flag_path);
  std::filesystem::remove(env_path);
}

TEST(Cli, FactorReportsUnresolved) {
  // (2^89 - 1)(2^107 - 1): two large primes, far beyond a 1 ms rho budget.
  auto r = invoke({"--budget-ms", "1", "factor", "100433627766186892221372630609062766858404681029709092356097"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "unresolved"));
}

TEST(Binary, EndToEnd) {
  const std::string cmd = std::string(SUPERSPLIT_BIN) + " family table --s-max 50 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string text;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) text += buf;
  const int status = ::pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 0);
  EXPECT_TRUE(contains(text, "42 | 204560302842 | 209430786241"));

  const std::string bad = std::string(SUPERSPLIT_BIN) + " genus --n 2 --d 2 >/dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), 2);
}
