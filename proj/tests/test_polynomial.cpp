#include "supersplit/polynomial.hpp"

#include <gtest/gtest.h>

using namespace supersplit;

namespace {

RationalPolynomial P(std::vector<Rational> desc) { return RationalPolynomial::from_descending(desc); }

}  // namespace

TEST(Polynomial, NormalizesAndReportsDegree) {
  EXPECT_EQ(P({0, 0, 1, 2}).degree(), 1);
  EXPECT_TRUE(P({0, 0}).is_zero());
  EXPECT_EQ(RationalPolynomial().degree(), -1);
}

TEST(Polynomial, Renders) {
  EXPECT_EQ(P({1, 3, Rational(-1, 2), 1}).to_string(), "x^3 + 3*x^2 - 1/2*x + 1");
  EXPECT_EQ(P({-1, 0, 0}).to_string(), "-x^2");
  EXPECT_EQ(RationalPolynomial().to_string(), "0");
  EXPECT_EQ(P({2, -1}).to_string("X"), "2*X - 1");
}

TEST(Polynomial, Arithmetic) {
  auto a = P({1, 1});   // x + 1
  auto b = P({1, -1});  // x - 1
  EXPECT_EQ(a * b, P({1, 0, -1}));
  EXPECT_EQ(a + b, P({2, 0}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(P({1, 0, 0, 5}).derivative(), P({3, 0, 0}));
  EXPECT_EQ(P({2, 4}).monic(), P({1, 2}));
}

TEST(Polynomial, DivmodReconstructs) {
  auto a = P({1, 3, Rational(-1, 2), 7, 2});
  auto b = P({Rational(2, 3), 0, 1});
  auto [q, r] = divmod(a, b);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_EQ(q * b + r, a);
  EXPECT_THROW(divmod(a, RationalPolynomial()), std::domain_error);
}

TEST(Polynomial, GcdIsMonic) {
  auto f = P({1, 1}) * P({1, 1}) * P({1, -2});
  auto g = P({3, 3}) * P({1, 5});
  EXPECT_EQ(gcd(f, g), P({1, 1}));
  EXPECT_EQ(gcd(P({1, 0, 1}), P({1, 1})), P({1}));
  EXPECT_TRUE(gcd(RationalPolynomial(), RationalPolynomial()).is_zero());
}
