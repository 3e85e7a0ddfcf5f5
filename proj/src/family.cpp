#include "supersplit/family.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace supersplit::family {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

// base^e mod n for n >= 1 (n = 1 gives 0).
std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t n) {
  std::uint64_t result = 1 % n;
  base %= n;
  while (e) {
    if (e & 1) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    e >>= 1;
  }
  return result;
}

// base^t = 1 (mod t), true for t = 1.
bool fixed_by_power(std::uint64_t base, std::uint64_t t) { return powmod(base, t, t) == 1 % t; }

bool fixed_by_power_big(unsigned long base, Int t) {
  if (t == 1) return true;
  return arith::modpow(BigInt(base), BigInt(t), BigInt(t)) == 1;
}

template <class Pred>
bool admissible_with(Int s, Pred fixed) {
  if (s == 1) return true;
  if (s % 2 == 1 || s % 8 == 0) return false;
  if (s % 4 == 2) return fixed(4, s / 2);
  return fixed(16, s / 4);
}

unsigned long sequence_base(SequenceKind kind) { return kind == SequenceKind::A014945 ? 4 : 16; }

template <class Pred>
std::vector<Int> parallel_filter(Int bound, Pred keep) {
  if (bound <= 1) return {};
  std::vector<char> hit(static_cast<std::size_t>(bound), 0);
#pragma omp parallel for schedule(dynamic, 256)
  for (Int v = 1; v < bound; ++v) hit[static_cast<std::size_t>(v)] = keep(v) ? 1 : 0;
  std::vector<Int> out;
  for (Int v = 1; v < bound; ++v)
    if (hit[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

}  // namespace

BigInt genus_X(Int r, Int s) {
  if (r < 2) throw std::invalid_argument("genus_X: r must be at least 2");
  if (s < 1) throw std::invalid_argument("genus_X: s must be at least 1");
  const auto su = static_cast<unsigned long>(s);
  return BigInt(r - 1) * (BigInt(r) * s * pow2(su - 1) - pow2(su) + 1);
}

BigInt genus_C(Int r, Int lambda, Int m) {
  if (r < 2) throw std::invalid_argument("genus_C: r must be at least 2");
  if (lambda < 1) throw std::invalid_argument("genus_C: lambda must be at least 1");
  if (m < 2) throw std::invalid_argument("genus_C: m must be at least 2");
  BigInt twice = BigInt(r) * (BigInt(r - 1) * lambda * m - 2);
  if (!mpz_even_p(twice.get_mpz_t())) throw std::logic_error("genus_C: odd numerator");
  return 1 + twice / 2;
}

BigInt sum_components(Int r, Int m, Int s) {
  if (r < 2 || m < 2 || s < 1) throw std::invalid_argument("sum_components: need r >= 2, m >= 2, s >= 1");
  Rational inner = Rational(BigInt(r) * m * (s + 1), BigInt(4)) - 1;
  Rational total = Rational(BigInt(s) * (r - 1)) * inner;
  total.canonicalize();
  if (total.get_den() != 1)
    throw std::domain_error("sum_components: closed form is not an integer for r=" + std::to_string(r) +
                            ", m=" + std::to_string(m) + ", s=" + std::to_string(s));
  return total.get_num();
}

bool family_condition(const BigInt& r, const BigInt& m, Int s) {
  if (s < 1) throw std::invalid_argument("family_condition: s must be at least 1");
  const auto su = static_cast<unsigned long>(s);
  BigInt lhs = r * (m * s * (s + 1) - BigInt(s) * pow2(su + 1));
  BigInt rhs = 4 * (1 + BigInt(s) - pow2(su));
  return lhs == rhs;
}

std::string to_string(SolutionStatus s) {
  switch (s) {
    case SolutionStatus::exact: return "exact";
    case SolutionStatus::degenerate_s1: return "degenerate-s1";
    case SolutionStatus::unresolved_factoring: return "unresolved-factoring";
  }
  return "exact";
}

SolutionStatus solution_status_from_string(const std::string& s) {
  if (s == "exact") return SolutionStatus::exact;
  if (s == "degenerate-s1") return SolutionStatus::degenerate_s1;
  if (s == "unresolved-factoring") return SolutionStatus::unresolved_factoring;
  throw std::invalid_argument("unknown solution status '" + s + "'");
}

BigInt family_numerator(Int s) {
  if (s < 1) throw std::invalid_argument("family_numerator: s must be at least 1");
  return 4 * (pow2(static_cast<unsigned long>(s)) - s - 1);
}

SolveReport solve_family(Int s, const SolveOptions& options) {
  if (s < 1) throw std::invalid_argument("solve_family: s must be at least 1");
  SolveReport report;
  report.s = s;

  if (s == 1) {
    // 0/0 in the closed form; m = r = 2 is the answer from the parity
    // argument for odd s.
    report.status = SolutionStatus::degenerate_s1;
    report.solutions.push_back({1, 2, 2, 0, std::nullopt, SolutionStatus::degenerate_s1});
    return report;
  }

  const BigInt numerator = family_numerator(s);
  if (numerator % s != 0) return report;

  if (s >= kLargeS && !options.allow_large) {
    report.status = SolutionStatus::unresolved_factoring;
    report.gated = true;
    return report;
  }

  arith::FactorMap full = arith::factorize(numerator, options.budget, options.cache);
  report.factorization = full;
  if (!full.complete) {
    report.status = SolutionStatus::unresolved_factoring;
    return report;
  }

  const arith::FactorMap per_s = arith::divide(full, arith::factorize(BigInt(s)));
  const BigInt top = pow2(static_cast<unsigned long>(s + 1));
  const BigInt modulus = s + 1;
  for (const BigInt& x : arith::divisors(per_s)) {
    BigInt diff = top - x;
    if (diff % modulus != 0) continue;
    BigInt m = diff / modulus;
    if (m < 2) continue;
    BigInt r = per_s.n / x;
    if (!family_condition(r, m, s)) throw std::logic_error("divisor solve produced a non-solution");
    report.solutions.push_back({s, m, r, x, full, SolutionStatus::exact});
  }
  std::sort(report.solutions.begin(), report.solutions.end(),
            [](const FamilySolution& a, const FamilySolution& b) { return a.r > b.r; });
  return report;
}

namespace serial {

std::vector<SolveReport> solve_many(const std::vector<Int>& s_values, const SolveOptions& options) {
  std::vector<SolveReport> out;
  out.reserve(s_values.size());
  for (Int s : s_values) out.push_back(solve_family(s, options));
  return out;
}

std::vector<Int> admissible_s(Int bound) {
  std::vector<Int> out;
  for (Int s = 1; s < bound; ++s)
    if (admissible_with(s, fixed_by_power_big)) out.push_back(s);
  return out;
}

std::vector<Int> sequence(SequenceKind kind, Int bound) {
  std::vector<Int> out;
  const unsigned long base = sequence_base(kind);
  for (Int t = 1; t < bound; t += 2)
    if (fixed_by_power_big(base, t)) out.push_back(t);
  return out;
}

}  // namespace serial

std::vector<SolveReport> solve_many(const std::vector<Int>& s_values, const SolveOptions& options) {
  std::vector<SolveReport> out(s_values.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    try {
      out[i] = solve_family(s_values[i], options);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<Int> admissible_s(Int bound) {
  return parallel_filter(bound, [](Int s) {
    return admissible_with(s, [](std::uint64_t base, Int t) {
      return fixed_by_power(base, static_cast<std::uint64_t>(t));
    });
  });
}

std::vector<Int> sequence(SequenceKind kind, Int bound) {
  const std::uint64_t base = sequence_base(kind);
  return parallel_filter(bound, [base](Int t) {
    return t % 2 == 1 && fixed_by_power(base, static_cast<std::uint64_t>(t));
  });
}

SequenceKind sequence_kind_from_string(const std::string& s) {
  if (s == "A014945") return SequenceKind::A014945;
  if (s == "A014957") return SequenceKind::A014957;
  throw std::invalid_argument("unknown sequence '" + s + "' (expected A014945 or A014957)");
}

std::string to_string(SequenceKind k) { return k == SequenceKind::A014945 ? "A014945" : "A014957"; }

LemmaVerdict smallest_prime_lemma(const BigInt& a, const BigInt& n) {
  if (n <= 1) throw std::invalid_argument("smallest_prime_lemma: n must exceed 1");
  LemmaVerdict v;
  arith::FactorMap f = arith::factorize(n);
  if (!f.complete) throw std::runtime_error("smallest_prime_lemma: could not factor n");
  v.p = f.factors.front().prime;
  v.applicable = arith::modpow(a, n, n) == 1;
  BigInt residue;
  mpz_mod(residue.get_mpz_t(), BigInt(a - 1).get_mpz_t(), v.p->get_mpz_t());
  v.conclusion_holds = residue == 0;
  return v;
}

}  // namespace supersplit::family
