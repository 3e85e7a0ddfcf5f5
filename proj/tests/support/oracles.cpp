#include "oracles.hpp"

#include <numeric>

namespace oracle {

Int riemann_hurwitz_genus(Int n, Int d) {
  // x: X -> P^1 has degree n. Each root of f is totally ramified (e = n).
  // Over infinity there are gcd(n, d) points, each with e = n / gcd(n, d).
  Int ramification = 0;
  for (Int root = 0; root < d; ++root) ramification += n - 1;
  const Int points_at_infinity = std::gcd(n, d);
  for (Int p = 0; p < points_at_infinity; ++p) ramification += n / points_at_infinity - 1;
  const Int twice_g_minus_2 = -2 * n + ramification;
  return (twice_g_minus_2 + 2) / 2;
}

std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t naive_powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  unsigned __int128 r = 1 % n;
  for (std::uint64_t i = 0; i < e; ++i) r = r * (a % n) % n;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

namespace {

class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t max_cosets)
      : cols_(2 * generators), max_(max_cosets) {
    add_row();
  }

  bool overflow() const { return overflow_; }

  std::size_t live() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) n += parent_[i] == static_cast<int>(i);
    return n;
  }

  bool alive(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  std::size_t rows() const { return parent_.size(); }
  std::size_t cols() const { return cols_; }
  int get(int c, std::size_t x) const { return table_[static_cast<std::size_t>(c)][x]; }

  void define(int c, std::size_t x) {
    if (parent_.size() >= max_) {
      overflow_ = true;
      return;
    }
    int d = add_row();
    set(c, x, d);
  }

  void scan_and_fill(int c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    for (;;) {
      int f = c, b = c;
      std::size_t i = 0, j = w.size();
      while (i < j && get(f, w[i]) >= 0) f = get(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && get(b, inv(w[j - 1])) >= 0) b = get(b, inv(w[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, w[i], b);
        return;
      }
      define(f, w[i]);
      if (overflow_) return;
    }
  }

 private:
  static std::size_t inv(std::size_t x) { return x ^ 1u; }

  int add_row() {
    table_.emplace_back(cols_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(parent_.size() - 1);
  }

  void set(int c, std::size_t x, int d) {
    table_[static_cast<std::size_t>(c)][x] = d;
    table_[static_cast<std::size_t>(d)][inv(x)] = c;
  }

  int rep(int k) {
    int l = k;
    while (parent_[static_cast<std::size_t>(l)] != l) l = parent_[static_cast<std::size_t>(l)];
    while (parent_[static_cast<std::size_t>(k)] != k) {
      int next = parent_[static_cast<std::size_t>(k)];
      parent_[static_cast<std::size_t>(k)] = l;
      k = next;
    }
    return l;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int e = queue[qi];
      for (std::size_t x = 0; x < cols_; ++x) {
        const int d = table_[static_cast<std::size_t>(e)][x];
        if (d < 0) continue;
        table_[static_cast<std::size_t>(d)][inv(x)] = -1;
        const int mu = rep(e), nu = rep(d);
        if (table_[static_cast<std::size_t>(mu)][x] >= 0) {
          merge(nu, table_[static_cast<std::size_t>(mu)][x], queue);
        } else if (table_[static_cast<std::size_t>(nu)][inv(x)] >= 0) {
          merge(mu, table_[static_cast<std::size_t>(nu)][inv(x)], queue);
        } else {
          table_[static_cast<std::size_t>(mu)][x] = nu;
          table_[static_cast<std::size_t>(nu)][inv(x)] = mu;
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t max_;
  bool overflow_ = false;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

}  // namespace

std::optional<std::size_t> todd_coxeter_order(std::size_t generators,
                                              const std::vector<supersplit::groups::Word>& relators,
                                              std::size_t max_cosets) {
  std::vector<std::vector<std::size_t>> rels;
  for (const auto& w : relators) {
    std::vector<std::size_t> cols;
    for (const auto& l : w) {
      const std::size_t col = 2 * static_cast<std::size_t>(l.generator) + (l.exponent < 0 ? 1 : 0);
      const Int reps = l.exponent < 0 ? -l.exponent : l.exponent;
      for (Int i = 0; i < reps; ++i) cols.push_back(col);
    }
    rels.push_back(std::move(cols));
  }
  CosetTable t(generators, max_cosets);
  for (int c = 0; static_cast<std::size_t>(c) < t.rows(); ++c) {
    for (const auto& r : rels) {
      if (!t.alive(c)) break;
      t.scan_and_fill(c, r);
      if (t.overflow()) return std::nullopt;
    }
    for (std::size_t x = 0; x < t.cols() && t.alive(c); ++x) {
      if (t.get(c, x) < 0) t.define(c, x);
      if (t.overflow()) return std::nullopt;
    }
  }
  return t.live();
}

bool brute_associative(const supersplit::groups::ConcreteGroup& g) {
  using E = supersplit::groups::ConcreteGroup::Element;
  const auto n = static_cast<E>(g.order());
  for (E a = 0; a < n; ++a)
    for (E b = 0; b < n; ++b) {
      const E ab = g.multiply(a, b);
      for (E c = 0; c < n; ++c)
        if (g.multiply(ab, c) != g.multiply(a, g.multiply(b, c))) return false;
    }
  return true;
}

}  // namespace oracle
