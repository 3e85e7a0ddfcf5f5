#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace supersplit {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses a decimal integer with optional sign. Throws std::invalid_argument
/// on anything else (GMP's own parser accepts hex/octal prefixes).
BigInt parse_bigint(std::string_view text);

inline std::string to_string(const BigInt& v) { return v.get_str(10); }
std::string to_string(const Rational& q);

inline BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Rounds |v| to `digits` significant decimal digits (half away from zero)
/// and renders it as "d.dddde+XX".
std::string format_scientific(const BigInt& v, int digits = 5);

/// Exact decimal up to 10^15, scientific with 5 significant digits above.
std::string format_table_value(const BigInt& v);

bool fits_int64(const BigInt& v);
std::int64_t to_int64(const BigInt& v);

}  // namespace supersplit
