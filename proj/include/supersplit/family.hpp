#pragma once

// The complete-intersection family X_{r,s} and its superelliptic components
// C_{r,lambda,m}: Y^r = prod_{i<=lambda} h_i(X^m, 1).
//
// Jac(X_{r,s}) ~ prod_lambda Jac(C_{r,lambda,m}) exactly when
//
//   r (m s (s+1) - s 2^(s+1)) = 4 (1 + s - 2^s).
//
// Writing X = 2^(s+1) - m (s+1) turns this into r s X = 4 (2^s - s - 1), so
// the solutions for fixed s are divisor pairs (r, X) of 4(2^s - s - 1)/s with
// X = 2^(s+1) (mod s+1).

#include "supersplit/arith.hpp"
#include "supersplit/bigint.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace supersplit::family {

using Int = std::int64_t;

/// (r - 1)(r s 2^(s-1) - 2^s + 1). Requires r >= 2, s >= 1.
BigInt genus_X(Int r, Int s);

/// 1 + (r/2)((r - 1) lambda m - 2). Requires r >= 2, lambda >= 1, m >= 2.
BigInt genus_C(Int r, Int lambda, Int m);

/// s (r - 1)(r m (s + 1) / 4 - 1), the sum of genus_C over 1 <= lambda <= s.
/// Throws std::domain_error if the closed form is not an integer.
BigInt sum_components(Int r, Int m, Int s);

/// Cleared-denominator form of the decomposition condition.
bool family_condition(const BigInt& r, const BigInt& m, Int s);

enum class SolutionStatus { exact, degenerate_s1, unresolved_factoring };

std::string to_string(SolutionStatus s);
SolutionStatus solution_status_from_string(const std::string& s);

struct FamilySolution {
  Int s = 0;
  BigInt m = 0;
  BigInt r = 0;
  /// X = 2^(s+1) - m (s+1), with r s X = 4 (2^s - s - 1).
  BigInt witness_x = 0;
  /// Factorization of 4 (2^s - s - 1); absent for s = 1 where it is 0.
  std::optional<arith::FactorMap> factorization;
  SolutionStatus status = SolutionStatus::exact;

  friend bool operator==(const FamilySolution&, const FamilySolution&) = default;
};

struct SolveOptions {
  arith::FactorBudget budget{};
  /// Without this, s >= kLargeS is reported unresolved without factoring.
  bool allow_large = false;
  arith::FactorCache* cache = nullptr;
};

inline constexpr Int kLargeS = 126;

/// Outcome of solving for one s. `status` is exact (possibly with no
/// solutions), degenerate_s1 or unresolved_factoring; in the last case
/// `solutions` is empty and `factorization` holds the partial result.
struct SolveReport {
  Int s = 0;
  SolutionStatus status = SolutionStatus::exact;
  std::vector<FamilySolution> solutions;  // descending r
  std::optional<arith::FactorMap> factorization;
  /// Set when large-s gating skipped the factorization.
  bool gated = false;
};

/// 4 (2^s - s - 1).
BigInt family_numerator(Int s);

/// All (m >= 2, r >= 1) for this s. s = 1 yields the degenerate (2, 2).
SolveReport solve_family(Int s, const SolveOptions& options = {});

/// solve_family over several s values, parallel across s, results in input
/// order.
std::vector<SolveReport> solve_many(const std::vector<Int>& s_values, const SolveOptions& options = {});

/// s < bound with s = 1, s = 2t (t odd, 4^t = 1 mod t) or s = 4u
/// (u odd, 16^u = 1 mod u). Parallel sieve.
std::vector<Int> admissible_s(Int bound);

enum class SequenceKind { A014945, A014957 };

SequenceKind sequence_kind_from_string(const std::string& s);
std::string to_string(SequenceKind k);

/// Odd t < bound with 4^t = 1 (mod t) (A014945) or 16^t = 1 (mod t)
/// (A014957). Parallel sieve.
std::vector<Int> sequence(SequenceKind kind, Int bound);

struct LemmaVerdict {
  bool applicable = false;        // a^n = 1 (mod n)
  std::optional<BigInt> p;        // smallest prime divisor of n
  bool conclusion_holds = false;  // a = 1 (mod p), only meaningful if applicable
};

/// If a^n = 1 (mod n) then a = 1 (mod p) for the smallest prime p | n.
/// Requires n > 1.
LemmaVerdict smallest_prime_lemma(const BigInt& a, const BigInt& n);

namespace serial {

std::vector<Int> admissible_s(Int bound);
std::vector<Int> sequence(SequenceKind kind, Int bound);
std::vector<SolveReport> solve_many(const std::vector<Int>& s_values, const SolveOptions& options = {});

}  // namespace serial

}  // namespace supersplit::family
