#include "supersplit/arith.hpp"

#include "supersplit/factor_cache.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace supersplit::arith {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

using Clock = std::chrono::steady_clock;

BigInt reduce_mod(const BigInt& a, const BigInt& n) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool miller_rabin_round(const BigInt& n, const BigInt& n_minus_1, const BigInt& d,
                        unsigned long twos, const BigInt& base) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < twos; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

enum class RhoOutcome { found, cycled, exhausted };

struct RhoLimits {
  Clock::time_point deadline;
  std::uint64_t max_iterations;
  const std::atomic<bool>* stop;
};

// Brent's cycle detection with batched gcds.
RhoOutcome brent_rho(const BigInt& n, unsigned long c, unsigned long seed,
                     const RhoLimits& limits, std::uint64_t& iterations, BigInt& factor) {
  constexpr std::uint64_t kBatch = 128;
  BigInt y = seed, x, ys, q = 1, g = 1, diff;
  auto step = [&](BigInt& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  auto out_of_budget = [&] {
    if (limits.stop && limits.stop->load(std::memory_order_relaxed)) return true;
    if (limits.max_iterations && iterations >= limits.max_iterations) return true;
    return Clock::now() >= limits.deadline;
  };

  std::uint64_t r = 1;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    iterations += r;
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      std::uint64_t span = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < span; ++i) {
        step(y);
        diff = x - y;
        q = q * abs(diff) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += span;
      iterations += span;
      if (g == 1 && out_of_budget()) return RhoOutcome::exhausted;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      step(ys);
      diff = x - ys;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return RhoOutcome::cycled;
  factor = g;
  return RhoOutcome::found;
}

// Cheap splits that rho handles badly.
std::optional<BigInt> easy_factor(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
  }
  return std::nullopt;
}

}  // namespace

BigInt FactorMap::product() const {
  BigInt p = 1;
  for (const auto& [prime, e] : factors) p *= ipow(prime, e);
  if (cofactor) p *= *cofactor;
  return p;
}

std::string FactorMap::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [prime, e] : factors) {
    if (!first) os << " * ";
    os << prime.get_str() << '^' << e;
    first = false;
  }
  if (cofactor) {
    if (!first) os << " * ";
    os << '[' << cofactor->get_str() << ']';
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

BigInt modpow(const BigInt& a, const BigInt& e, const BigInt& n) {
  if (n <= 1) throw std::invalid_argument("modpow: modulus must exceed 1");
  if (e < 0) throw std::invalid_argument("modpow: negative exponent");
  BigInt r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<BigInt> mult_order(const BigInt& a, const BigInt& n) {
  if (n <= 1) throw std::invalid_argument("mult_order: modulus must exceed 1");
  BigInt base = reduce_mod(a, n);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), base.get_mpz_t(), n.get_mpz_t());
  if (g != 1) return std::nullopt;
  if (base == 1) return BigInt(1);

  FactorMap fn = factorize(n);
  if (!fn.complete) throw std::runtime_error("mult_order: could not factor modulus " + n.get_str());
  BigInt order = euler_phi(fn);
  FactorMap fphi = factorize(order);
  if (!fphi.complete) throw std::runtime_error("mult_order: could not factor phi(n)");
  for (const auto& [q, e] : fphi.factors) {
    for (unsigned i = 0; i < e; ++i) {
      BigInt candidate = order / q;
      if (modpow(base, candidate, n) != 1) break;
      order = candidate;
    }
  }
  return order;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned long, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned long p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  unsigned long twos = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), twos);

  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    // The first twelve prime bases are exact below 3.3 * 10^24.
    for (unsigned long b : kBases)
      if (!miller_rabin_round(n, n_minus_1, d, twos, BigInt(b))) return false;
    return true;
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x5eed5eedUL);
  BigInt span = n - 3;
  for (int round = 0; round < 40; ++round) {
    BigInt base = rng.get_z_range(span) + 2;  // [2, n-2]
    if (!miller_rabin_round(n, n_minus_1, d, twos, base)) return false;
  }
  return true;
}

namespace serial {

std::optional<BigInt> find_factor(const BigInt& n, const FactorBudget& budget) {
  if (auto f = easy_factor(n)) return f;
  RhoLimits limits{Clock::now() + budget.wall, budget.max_iterations, nullptr};
  BigInt factor;
  std::uint64_t iterations = 0;
  for (unsigned long c = 1;; ++c) {
    switch (brent_rho(n, c, 2, limits, iterations, factor)) {
      case RhoOutcome::found:
        return factor;
      case RhoOutcome::exhausted:
        return std::nullopt;
      case RhoOutcome::cycled:
        if (Clock::now() >= limits.deadline) return std::nullopt;
        break;
    }
  }
}

}  // namespace serial

std::optional<BigInt> find_factor(const BigInt& n, const FactorBudget& budget) {
  if (auto f = easy_factor(n)) return f;
  if (omp_get_max_threads() == 1) return serial::find_factor(n, budget);

  std::atomic<bool> done{false};
  std::optional<BigInt> result;
  std::mutex result_mutex;
  const auto deadline = Clock::now() + budget.wall;

#pragma omp parallel
  {
    const unsigned long threads = static_cast<unsigned long>(omp_get_num_threads());
    RhoLimits limits{deadline, budget.max_iterations, &done};
    BigInt factor;
    std::uint64_t iterations = 0;
    for (unsigned long c = static_cast<unsigned long>(omp_get_thread_num()) + 1;
         !done.load(std::memory_order_relaxed); c += threads) {
      RhoOutcome outcome = brent_rho(n, c, 2, limits, iterations, factor);
      if (outcome == RhoOutcome::found) {
        std::lock_guard lock(result_mutex);
        if (!result) result = factor;
        done.store(true);
        break;
      }
      if (outcome == RhoOutcome::exhausted || Clock::now() >= deadline) break;
    }
  }
  return result;
}

FactorMap factorize(const BigInt& n, const FactorBudget& budget, FactorCache* cache) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  if (cache) {
    if (auto hit = cache->lookup(n)) return *hit;
  }

  std::map<BigInt, unsigned> found;
  BigInt rest = n;
  for (std::uint32_t p : small_primes()) {
    if (BigInt(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++found[BigInt(p)];
    }
  }

  BigInt leftover = 1;
  std::vector<BigInt> pending;
  if (rest > 1) pending.push_back(rest);
  while (!pending.empty()) {
    BigInt c = std::move(pending.back());
    pending.pop_back();
    if (is_probable_prime(c)) {
      ++found[c];
      continue;
    }
    auto d = find_factor(c, budget);
    if (!d) {
      leftover *= c;
      continue;
    }
    pending.push_back(c / *d);
    pending.push_back(*d);
  }

  FactorMap out;
  out.n = n;
  for (auto& [p, e] : found) out.factors.push_back({p, e});
  if (leftover > 1) {
    out.complete = false;
    out.cofactor = leftover;
  }
  if (cache && out.complete) cache->store(out);
  return out;
}

std::vector<BigInt> divisors(const FactorMap& f) {
  if (!f.complete) throw std::invalid_argument("divisors: factorization is incomplete");
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt euler_phi(const FactorMap& f) {
  if (!f.complete) throw std::invalid_argument("euler_phi: factorization is incomplete");
  BigInt phi = 1;
  for (const auto& [p, e] : f.factors) phi *= (p - 1) * ipow(p, e - 1);
  return phi;
}

FactorMap divide(const FactorMap& a, const FactorMap& b) {
  if (!a.complete || !b.complete) throw std::invalid_argument("divide: factorization is incomplete");
  std::map<BigInt, long> exps;
  for (const auto& [p, e] : a.factors) exps[p] += e;
  for (const auto& [p, e] : b.factors) exps[p] -= e;
  FactorMap out;
  out.n = a.n / b.n;
  for (const auto& [p, e] : exps) {
    if (e < 0) throw std::invalid_argument("divide: divisor does not divide");
    if (e > 0) out.factors.push_back({p, static_cast<unsigned>(e)});
  }
  if (out.n * b.n != a.n) throw std::invalid_argument("divide: divisor does not divide");
  return out;
}

}  // namespace supersplit::arith
