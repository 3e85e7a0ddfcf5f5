#include "supersplit/curves.hpp"

#include <numeric>
#include <stdexcept>

namespace supersplit::curves {

RationalPolynomial SuperellipticCurve::polynomial() const {
  if (!coeffs) throw std::logic_error("curve has no coefficients");
  // f(x^m) has X^(delta-k) -> x^((delta-k) m); coefficient a_0 = 1, a_delta = 1.
  const auto shift = static_cast<std::size_t>(twisted ? 1 : 0);
  std::vector<Rational> v(static_cast<std::size_t>(degree()) + 1, Rational(0));
  for (Int k = 0; k <= delta; ++k) {
    Rational a = (k == 0 || k == delta) ? Rational(1) : (*coeffs)[static_cast<std::size_t>(k - 1)];
    v[static_cast<std::size_t>((delta - k) * m) + shift] = a;
  }
  return RationalPolynomial(std::move(v));
}

std::string SuperellipticCurve::equation() const {
  std::string lhs = "y^" + std::to_string(n) + " = ";
  if (coeffs) return lhs + polynomial().to_string("x");
  std::string arg = m == 1 ? "x" : "x^" + std::to_string(m);
  return lhs + (twisted ? "x*" : "") + "f(" + arg + ")";
}

SuperellipticCurve make_curve(Int n, Int m, Int delta, std::optional<std::vector<Rational>> coeffs,
                              bool twisted) {
  if (n < 2) throw std::invalid_argument("curve level n must be at least 2");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (delta < 1) throw std::invalid_argument("delta must be at least 1");
  SuperellipticCurve c{n, m, delta, std::move(coeffs), twisted};
  if (c.coeffs) {
    if (static_cast<Int>(c.coeffs->size()) != delta - 1)
      throw std::invalid_argument("expected " + std::to_string(delta - 1) + " coefficients a_1..a_{delta-1}");
    if (!discriminant_nonzero(c.polynomial()))
      throw std::invalid_argument("right-hand side " + c.polynomial().to_string() + " is not squarefree");
  }
  return c;
}

Int genus_formula(Int n, Int d) {
  if (n < 2) throw std::invalid_argument("genus: n must be at least 2");
  if (d < 1) throw std::invalid_argument("genus: degree must be positive");
  Int twice = n * d - n - d - std::gcd(d, n);
  // Riemann-Hurwitz makes the numerator even and the genus nonnegative.
  if (twice % 2 != 0 || twice < -2) throw std::logic_error("genus formula left its valid range");
  return 1 + twice / 2;
}

Int genus_superelliptic(Int n, Int d) {
  if (d <= n) throw std::invalid_argument("genus formula requires d > n");
  return genus_formula(n, d);
}

CurveGenus curve_genus(const SuperellipticCurve& c) {
  Int d = c.degree();
  return {genus_formula(c.n, d), d <= c.n, c.twisted};
}

QuotientGenera quotient_genera(Int n, Int delta) {
  if (n < 2) throw std::invalid_argument("quotient_genera: n must be at least 2");
  if (delta < 1) throw std::invalid_argument("quotient_genera: delta must be at least 1");
  return {genus_formula(n, delta), genus_formula(n, delta + 1), delta <= n, delta + 1 <= n};
}

QuotientPair quotient_equations(const SuperellipticCurve& c) {
  if (c.twisted) throw std::invalid_argument("quotient_equations expects the untwisted form y^n = f(x^m)");
  if (!c.coeffs) throw std::invalid_argument("quotient_equations needs explicit coefficients");
  QuotientPair q;
  q.x1 = SuperellipticCurve{c.n, 1, c.delta, c.coeffs, false};
  q.x2 = SuperellipticCurve{c.n, 1, c.delta, c.coeffs, true};
  auto g = quotient_genera(c.n, c.delta);
  q.g1 = g.g1;
  q.g2 = g.g2;
  return q;
}

SubfieldExponent subfield_exponent(Int n, Int lambda) {
  if (n < 2) throw std::invalid_argument("subfield_exponent: n must be at least 2");
  if (lambda < 1) throw std::invalid_argument("subfield_exponent: lambda must be positive");
  Int m = lambda * n;
  Int i = lambda * (n - 1);
  Rational total = Rational(BigInt(i), BigInt(m)) + Rational(BigInt(1), BigInt(n));
  total.canonicalize();
  return {i, total.get_den() == 1};
}

bool discriminant_nonzero(const RationalPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("discriminant of the zero polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace supersplit::curves
