#include "supersplit/arith.hpp"
#include "supersplit/family.hpp"
#include "supersplit/groups.hpp"
#include "supersplit/split.hpp"

#include <gtest/gtest.h>

using namespace supersplit;

TEST(Parallel, EnumerateSplitsMatchesSerial) {
  EXPECT_EQ(split::enumerate_splits(12, 12, 60), split::serial::enumerate_splits(12, 12, 60));
  EXPECT_EQ(split::enumerate_splits(40, 5, 200), split::serial::enumerate_splits(40, 5, 200));
  EXPECT_TRUE(split::enumerate_splits(1, 5, 5).empty());
}

TEST(Parallel, SievesMatchSerial) {
  EXPECT_EQ(family::admissible_s(5000), family::serial::admissible_s(5000));
  for (auto k : {family::SequenceKind::A014945, family::SequenceKind::A014957})
    EXPECT_EQ(family::sequence(k, 20000), family::serial::sequence(k, 20000));
}

TEST(Parallel, SolveManyMatchesSerial) {
  std::vector<family::Int> s;
  for (family::Int v = 1; v <= 120; ++v) s.push_back(v);
  auto par = family::solve_many(s);
  auto ser = family::serial::solve_many(s);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    EXPECT_EQ(par[i].s, ser[i].s);
    EXPECT_EQ(par[i].status, ser[i].status);
    EXPECT_EQ(par[i].solutions, ser[i].solutions);
  }
}

TEST(Parallel, SolveManyPropagatesErrors) {
  EXPECT_THROW(family::solve_many({2, 0, 6}), std::invalid_argument);
}

TEST(Parallel, AxiomCheckMatchesSerial) {
  for (auto tag : {groups::GroupTag::D2mxCn, groups::GroupTag::D2mn, groups::GroupTag::G1, groups::GroupTag::G4}) {
    auto g = groups::realize(groups::make_presentation(tag, 6, 4));
    auto a = groups::check_axioms(g);
    auto b = groups::serial::check_axioms(g);
    EXPECT_EQ(a.ok(), b.ok());
    EXPECT_TRUE(a.ok());
  }
}

TEST(Parallel, FindFactorAgreesWithSerial) {
  const BigInt n = BigInt("1000000007") * BigInt("998244353");
  arith::FactorBudget budget;
  auto p = arith::find_factor(n, budget);
  auto q = arith::serial::find_factor(n, budget);
  ASSERT_TRUE(p && q);
  EXPECT_EQ(n % *p, 0);
  EXPECT_EQ(n % *q, 0);
  EXPECT_TRUE(*p > 1 && *p < n);
}
