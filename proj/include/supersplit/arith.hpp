#pragma once

// Arbitrary-precision integer utilities: modular exponentiation,
// multiplicative order, primality, budgeted factorization and divisor
// enumeration.

#include "supersplit/bigint.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace supersplit::arith {

class FactorCache;

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization of a positive integer. When `complete` is false the
/// primes found so far are listed and the unfactored composite part is held
/// in `cofactor`; in both cases product() == n.
struct FactorMap {
  BigInt n = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes
  bool complete = true;
  std::optional<BigInt> cofactor;

  BigInt product() const;
  /// "p1^e1 * p2^e2 * ..." ("1" for n = 1). A composite cofactor is
  /// appended as "[c]".
  std::string to_string() const;

  friend bool operator==(const FactorMap&, const FactorMap&) = default;
};

struct FactorBudget {
  /// Wall-clock cap for each composite handed to Pollard-rho.
  std::chrono::milliseconds wall{30000};
  /// Cap on rho iterations per composite; 0 means no cap.
  std::uint64_t max_iterations = 0;
};

/// a^e mod n in [0, n). Rejects n <= 1 and e < 0.
BigInt modpow(const BigInt& a, const BigInt& e, const BigInt& n);

/// Least d >= 1 with a^d = 1 (mod n), or nullopt when gcd(a, n) != 1.
/// Rejects n <= 1.
std::optional<BigInt> mult_order(const BigInt& a, const BigInt& n);

/// Deterministic Miller-Rabin below 2^64, 40 seeded random rounds above.
bool is_probable_prime(const BigInt& n);

/// Trial division to 10^6, then Brent's variant of Pollard-rho within
/// `budget`. Rejects n <= 0. Results are looked up in and written back to
/// `cache` when one is supplied.
FactorMap factorize(const BigInt& n, const FactorBudget& budget = {},
                    FactorCache* cache = nullptr);

/// All positive divisors of f.n in ascending order. Rejects incomplete maps.
std::vector<BigInt> divisors(const FactorMap& f);

/// phi(n) from a complete factorization.
BigInt euler_phi(const FactorMap& f);

/// Exact quotient map of a / b for complete factorizations with b | a.
FactorMap divide(const FactorMap& a, const FactorMap& b);

/// Primes below 10^6, sieved once on first use.
const std::vector<std::uint32_t>& small_primes();

namespace serial {

/// Single-threaded Brent rho; returns a nontrivial factor or nullopt when
/// the budget runs out.
std::optional<BigInt> find_factor(const BigInt& n, const FactorBudget& budget);

}  // namespace serial

/// Same contract as serial::find_factor, racing independent rho seeds
/// across OpenMP threads.
std::optional<BigInt> find_factor(const BigInt& n, const FactorBudget& budget);

}  // namespace supersplit::arith
