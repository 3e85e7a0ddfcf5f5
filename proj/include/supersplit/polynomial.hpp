#pragma once

#include "supersplit/bigint.hpp"

#include <string>
#include <utility>
#include <vector>

namespace supersplit {

/// Dense univariate polynomial over Q. Coefficients are stored in ascending
/// degree order with no trailing zeros; the zero polynomial is empty.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending);

  static RationalPolynomial from_descending(const std::vector<Rational>& coeffs);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }

  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Descending powers, e.g. "x^3 + 3*x^2 - 1/2*x + 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);

/// Monic gcd (zero only when both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

}  // namespace supersplit
