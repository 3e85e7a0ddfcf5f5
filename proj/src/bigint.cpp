#include "supersplit/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace supersplit {

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (digits.empty())
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  for (char c : digits)
    if (c < '0' || c > '9')
      throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  BigInt v(std::string(digits), 10);
  return text.front() == '-' ? BigInt(-v) : v;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string format_scientific(const BigInt& v, int digits) {
  if (digits < 1) throw std::invalid_argument("format_scientific: digits < 1");
  BigInt mag = abs(v);
  if (mag == 0) return "0." + std::string(digits - 1, '0') + "e+00";
  std::string s = mag.get_str(10);
  long exponent = static_cast<long>(s.size()) - 1;
  std::string mant;
  if (static_cast<int>(s.size()) <= digits) {
    mant = s + std::string(digits - s.size(), '0');
  } else {
    BigInt head(s.substr(0, digits), 10);
    if (s[digits] >= '5') head += 1;
    mant = head.get_str(10);
    if (static_cast<int>(mant.size()) > digits) {  // 9.9999|5 -> 10.000
      mant.pop_back();
      ++exponent;
    }
  }
  std::string out = v < 0 ? "-" : "";
  out += mant.substr(0, 1);
  if (digits > 1) out += "." + mant.substr(1);
  out += exponent < 10 ? "e+0" : "e+";
  out += std::to_string(exponent);
  return out;
}

std::string format_table_value(const BigInt& v) {
  static const BigInt limit("1000000000000000", 10);
  return abs(v) > limit ? format_scientific(v, 5) : v.get_str(10);
}

bool fits_int64(const BigInt& v) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()), 10);
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()), 10);
  return v >= lo && v <= hi;
}

std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v)) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return std::stoll(v.get_str(10));
}

}  // namespace supersplit
