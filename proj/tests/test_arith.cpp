#include "oracles.hpp"
#include "supersplit/arith.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace supersplit;
using namespace supersplit::arith;

namespace {

BigInt product_of(const FactorMap& f) {
  BigInt p = 1;
  for (const auto& pp : f.factors) p *= ipow(pp.prime, pp.exponent);
  if (f.cofactor) p *= *f.cofactor;
  return p;
}

void expect_valid(const FactorMap& f) {
  EXPECT_EQ(product_of(f), f.n);
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    EXPECT_TRUE(is_probable_prime(f.factors[i].prime)) << f.factors[i].prime;
    EXPECT_GE(f.factors[i].exponent, 1u);
    if (i) {
      EXPECT_LT(f.factors[i - 1].prime, f.factors[i].prime);
    }
  }
}

}  // namespace

TEST(Modpow, Examples) {
  EXPECT_EQ(modpow(2, 19, 19), 2);
  EXPECT_EQ(modpow(2, 43, 43), 2);
  EXPECT_EQ(modpow(12345, 0, 97), 1);
  EXPECT_EQ(modpow(-3, 3, 7), 1);  // -27 = 1 (mod 7)
}

TEST(Modpow, RejectsBadModulusAndExponent) {
  EXPECT_THROW(modpow(2, 3, 1), std::invalid_argument);
  EXPECT_THROW(modpow(2, 3, 0), std::invalid_argument);
  EXPECT_THROW(modpow(2, -1, 7), std::invalid_argument);
}

TEST(Modpow, MatchesNaiveMultiplication) {
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<std::uint64_t> base(0, 1'000'000'000'000ULL), exp(0, 10'000), mod(2, 1'000'000'007ULL);
  for (int i = 0; i < 300; ++i) {
    const auto a = base(rng), e = exp(rng), n = mod(rng);
    ASSERT_EQ(modpow(BigInt(std::to_string(a)), BigInt(std::to_string(e)), BigInt(std::to_string(n))),
              BigInt(std::to_string(oracle::naive_powmod(a, e, n))))
        << a << "^" << e << " mod " << n;
  }
}

TEST(MultOrder, Examples) {
  EXPECT_EQ(mult_order(4, 9), BigInt(3));
  EXPECT_EQ(mult_order(1, 17), BigInt(1));
  EXPECT_EQ(mult_order(2, 4), std::nullopt);
  EXPECT_THROW(mult_order(2, 1), std::invalid_argument);
}

TEST(MultOrder, DividesPhiAndIsMinimal) {
  for (unsigned long n = 2; n <= 10'000; ++n) {
    const auto f = factorize(BigInt(n));
    const BigInt phi = euler_phi(f);
    for (unsigned long a : {2ul, 3ul, 10ul, n - 1}) {
      auto d = mult_order(BigInt(a), BigInt(n));
      if (std::gcd(a, n) != 1) {
        ASSERT_FALSE(d) << a << " mod " << n;
        continue;
      }
      ASSERT_TRUE(d);
      ASSERT_EQ(phi % *d, 0) << a << " mod " << n;
      ASSERT_EQ(oracle::naive_powmod(a, d->get_ui(), n), 1u % n);
      if (n <= 2000) {  // minimality by direct search
        for (unsigned long k = 1; k < d->get_ui(); ++k) ASSERT_NE(oracle::naive_powmod(a, k, n), 1u);
      }
    }
  }
}

TEST(Primality, AgreesWithTrialDivisionBelow1e5) {
  for (std::uint64_t n = 0; n < 100'000; ++n) {
    const bool prime = n >= 2 && oracle::smallest_prime_factor(n) == n;
    ASSERT_EQ(is_probable_prime(BigInt(std::to_string(n))), prime) << n;
  }
}

TEST(Primality, StrongPseudoprimesAndLargePrimes) {
  // Strong pseudoprimes to several small bases.
  for (const char* c : {"3215031751", "2152302898747", "3474749660383", "341550071728321", "3825123056546413051"})
    EXPECT_FALSE(is_probable_prime(BigInt(c))) << c;
  EXPECT_TRUE(is_probable_prime(BigInt("18446744073709551557")));  // largest prime below 2^64
  EXPECT_TRUE(is_probable_prime(pow2(127) - 1));
  EXPECT_FALSE(is_probable_prime(pow2(128) + 1));
  EXPECT_TRUE(is_probable_prime(BigInt("37277251491763635481137535334549611")));
}

TEST(Factorize, Examples) {
  auto f = factorize(262125);
  EXPECT_TRUE(f.complete);
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[0], (PrimePower{3, 2}));
  EXPECT_EQ(f.factors[1], (PrimePower{5, 3}));
  EXPECT_EQ(f.factors[2], (PrimePower{233, 1}));

  auto one = factorize(1);
  EXPECT_TRUE(one.complete);
  EXPECT_TRUE(one.factors.empty());
  EXPECT_EQ(one.to_string(), "1");

  auto big = factorize(BigInt("4398046511061"));  // 2^42 - 43
  EXPECT_TRUE(big.complete);
  expect_valid(big);
  EXPECT_EQ(big.to_string(), "3^1 * 7^1 * 101^1 * 2073572141^1");

  EXPECT_THROW(factorize(0), std::invalid_argument);
  EXPECT_THROW(factorize(-5), std::invalid_argument);
}

TEST(Factorize, MatchesTrialDivisionOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1'000'000'000'000ULL);
  for (int i = 0; i < 200; ++i) {
    const auto n = pick(rng);
    const auto f = factorize(BigInt(std::to_string(n)));
    ASSERT_TRUE(f.complete);
    const auto ref = oracle::trial_factor(n);
    ASSERT_EQ(f.factors.size(), ref.size()) << n;
    for (std::size_t k = 0; k < ref.size(); ++k) {
      EXPECT_EQ(f.factors[k].prime, BigInt(std::to_string(ref[k].first)));
      EXPECT_EQ(f.factors[k].exponent, ref[k].second);
    }
  }
}

TEST(Factorize, SemiprimeNeedsRho) {
  const BigInt p("1000000000039"), q("1000000000000000003");
  const auto f = factorize(p * q);
  ASSERT_TRUE(f.complete);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, p);
  EXPECT_EQ(f.factors[1].prime, q);
}

TEST(Factorize, ExhaustedBudgetLeavesCofactor) {
  // Product of two 30-digit primes; a tiny iteration cap cannot split it.
  const BigInt p("100000000000000000000000000319"), q("100000000000000000000000000379");
  ASSERT_TRUE(is_probable_prime(p));
  ASSERT_TRUE(is_probable_prime(q));
  FactorBudget budget;
  budget.max_iterations = 1000;
  const auto f = factorize(BigInt(12) * p * q, budget);
  EXPECT_FALSE(f.complete);
  ASSERT_TRUE(f.cofactor);
  EXPECT_EQ(*f.cofactor, p * q);
  EXPECT_EQ(product_of(f), f.n);
  EXPECT_EQ(f.to_string(), "2^2 * 3^1 * [" + BigInt(p * q).get_str() + "]");
  EXPECT_THROW(divisors(f), std::invalid_argument);
}

TEST(Divisors, Examples) {
  auto d = divisors(factorize(38));
  EXPECT_EQ(d, (std::vector<BigInt>{1, 2, 19, 38}));
  EXPECT_EQ(divisors(factorize(1)), (std::vector<BigInt>{1}));
  EXPECT_EQ(divisors(factorize(9)), (std::vector<BigInt>{1, 3, 9}));
}

TEST(Divisors, CountAndDivisibilityUpTo1e6) {
  for (unsigned long n = 1; n <= 1'000'000; ++n) {
    const auto f = factorize(BigInt(n));
    ASSERT_TRUE(f.complete);
    ASSERT_EQ(product_of(f), BigInt(n));
    std::size_t expected = 1;
    for (const auto& pp : f.factors) expected *= pp.exponent + 1;
    if (n % 997 != 0 && n > 5000) continue;  // full divisor listing on a subsample
    const auto d = divisors(f);
    ASSERT_EQ(d.size(), expected) << n;
    for (std::size_t i = 0; i < d.size(); ++i) {
      ASSERT_EQ(BigInt(n) % d[i], 0);
      if (i) {
        ASSERT_LT(d[i - 1], d[i]);
      }
    }
  }
}

TEST(Divide, ExactQuotient) {
  auto q = divide(factorize(BigInt(4) * 19 * 3), factorize(6));
  EXPECT_EQ(q.n, 38);
  EXPECT_EQ(q.to_string(), "2^1 * 19^1");
  EXPECT_THROW(divide(factorize(6), factorize(4)), std::invalid_argument);
}

TEST(FindFactor, SerialAndParallelBothSplit) {
  const BigInt n = BigInt("1000000007") * BigInt("998244353");
  FactorBudget budget;
  for (auto d : {serial::find_factor(n, budget), find_factor(n, budget)}) {
    ASSERT_TRUE(d);
    EXPECT_TRUE(*d > 1 && *d < n && n % *d == 0);
  }
}
