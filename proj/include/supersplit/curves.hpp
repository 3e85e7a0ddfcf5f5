#pragma once

// Superelliptic curves y^n = f(x^m) with f monic of degree delta and
// constant term 1, their genus, and the two degree-m quotient curves
// y^n = f(X) and y^n = X f(X).

#include "supersplit/bigint.hpp"
#include "supersplit/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace supersplit::curves {

using Int = std::int64_t;

struct SuperellipticCurve {
  Int n = 2;      // level
  Int m = 1;      // order of the extra automorphism x -> zeta_m x; 1 = none
  Int delta = 1;  // degree of f, so deg f(x^m) = delta * m
  /// a_1 .. a_{delta-1} of f(X) = X^delta + a_1 X^(delta-1) + ... + a_{delta-1} X + 1.
  std::optional<std::vector<Rational>> coeffs;
  /// y^n = x * f(x^m) instead of y^n = f(x^m).
  bool twisted = false;

  Int degree() const { return delta * m + (twisted ? 1 : 0); }
  /// The right-hand side expanded in x. Requires coeffs.
  RationalPolynomial polynomial() const;
  /// "y^n = ..." in descending powers; symbolic when coeffs are absent.
  std::string equation() const;

  friend bool operator==(const SuperellipticCurve&, const SuperellipticCurve&) = default;
};

/// Checked constructor: n >= 2, m >= 1, delta >= 1, delta - 1 coefficients
/// and a squarefree right-hand side. Throws std::invalid_argument.
SuperellipticCurve make_curve(Int n, Int m, Int delta, std::optional<std::vector<Rational>> coeffs,
                              bool twisted = false);

/// Riemann-Hurwitz genus of y^n = f(x) with deg f = d and f squarefree:
/// 1 + (nd - n - d - gcd(d, n)) / 2. Rejects d <= n.
Int genus_superelliptic(Int n, Int d);

/// The same expression evaluated for any d >= 1. Used where the quotient
/// curves have degree <= n.
Int genus_formula(Int n, Int d);

struct CurveGenus {
  Int genus = 0;
  /// deg <= n, so the closed form was applied outside its stated range.
  bool formula_extended = false;
  /// Twisted curve; genus taken as genus_formula(n, delta*m + 1).
  bool twisted_convention = false;
};

CurveGenus curve_genus(const SuperellipticCurve& c);

struct QuotientGenera {
  Int g1 = 0;
  Int g2 = 0;
  bool g1_extended = false;  // delta <= n
  bool g2_extended = false;  // delta + 1 <= n

  friend bool operator==(const QuotientGenera&, const QuotientGenera&) = default;
};

/// g1 = genus of y^n = f(X) (degree delta), g2 = genus of y^n = X f(X)
/// (degree delta + 1). Requires n >= 2, delta >= 1.
QuotientGenera quotient_genera(Int n, Int delta);

struct QuotientPair {
  SuperellipticCurve x1;
  SuperellipticCurve x2;
  Int g1 = 0;
  Int g2 = 0;
};

/// Rejects twisted curves and curves without coefficients.
QuotientPair quotient_equations(const SuperellipticCurve& c);

struct SubfieldExponent {
  Int i = 0;
  bool verified = false;
};

/// For m = lambda * n the function X^i Y with i = lambda (n - 1) is fixed by
/// (X, Y) -> (zeta_m X, zeta_n Y); `verified` checks i/m + 1/n is an integer.
SubfieldExponent subfield_exponent(Int n, Int lambda);

/// gcd(f, f') is constant. Rejects the zero polynomial.
bool discriminant_nonzero(const RationalPolynomial& f);

}  // namespace supersplit::curves
