#include "supersplit/split.hpp"

#include "supersplit/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace supersplit::split {

namespace {

// Unicode sub/superscript digits for the isogeny statements.
std::string scripted(Int v, bool sub) {
  static const char* const kSub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  static const char* const kSup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string digits = std::to_string(v);
  std::string out;
  for (char c : digits) out += (sub ? kSub : kSup)[c - '0'];
  return out;
}

std::string quotient_factor(std::size_t index, Int multiplicity) {
  std::string s = "Jac(𝒳/H" + scripted(static_cast<Int>(index + 1), true) + ")";
  if (multiplicity > 1) s += scripted(multiplicity, false);
  return s;
}

std::string join_product(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " × " + parts[i];
  return out;
}

std::vector<SplitCertificate> scan_pair(Int n, Int m, Int delta_max) {
  std::vector<SplitCertificate> out;
  for (Int delta = 1; delta <= delta_max; ++delta) {
    auto cert = eqm_certificate(n, m, delta);
    if (cert.splits) out.push_back(cert);
  }
  return out;
}

}  // namespace

SplitCertificate eqm_certificate(Int n, Int m, Int delta) {
  if (n < 2) throw std::invalid_argument("eqm_certificate: n must be at least 2");
  if (m < 2) throw std::invalid_argument("eqm_certificate: m must be at least 2");
  if (delta < 1) throw std::invalid_argument("eqm_certificate: delta must be at least 1");
  SplitCertificate c;
  c.n = n;
  c.m = m;
  c.delta = delta;
  c.lhs = delta * (n - 1) * (m - 2);
  c.rhs = 1 - (std::gcd(delta + 1, n) + std::gcd(delta, n) - std::gcd(delta * m, n));
  c.splits = c.lhs == c.rhs;
  c.g = curves::genus_formula(n, delta * m);
  c.formula_extended = delta * m <= n;
  auto q = curves::quotient_genera(n, delta);
  c.g1 = q.g1;
  c.g2 = q.g2;
  if (c.splits != (c.g == c.g1 + c.g2))
    throw std::logic_error("split criterion disagrees with g = g1 + g2");
  return c;
}

namespace serial {

std::vector<SplitCertificate> enumerate_splits(Int n_max, Int m_max, Int delta_max) {
  std::vector<SplitCertificate> out;
  for (Int n = 2; n <= n_max; ++n)
    for (Int m = 2; m <= m_max; ++m) {
      auto part = scan_pair(n, m, delta_max);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

}  // namespace serial

std::vector<SplitCertificate> enumerate_splits(Int n_max, Int m_max, Int delta_max) {
  if (n_max < 2 || m_max < 2 || delta_max < 1) return {};
  const Int ms = m_max - 1;
  const Int pairs = (n_max - 1) * ms;
  std::vector<std::vector<SplitCertificate>> slots(static_cast<std::size_t>(pairs));
#pragma omp parallel for schedule(dynamic)
  for (Int idx = 0; idx < pairs; ++idx)
    slots[static_cast<std::size_t>(idx)] = scan_pair(2 + idx / ms, 2 + idx % ms, delta_max);
  std::vector<SplitCertificate> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::string to_string(PrimeCase c) {
  switch (c) {
    case PrimeCase::A: return "A";
    case PrimeCase::B: return "B";
    case PrimeCase::C: return "C";
    case PrimeCase::D: return "D";
    case PrimeCase::None: return "NONE";
  }
  return "NONE";
}

PrimeCase classify_prime_case(Int n, Int m, Int delta) {
  if (!arith::is_probable_prime(BigInt(n))) throw std::invalid_argument("classify_prime_case: n must be prime");
  if (m < 2 || delta < 1) throw std::invalid_argument("classify_prime_case: need m >= 2, delta >= 1");
  const Int r = delta % n;
  if (m == 2 && r == 0) return PrimeCase::A;
  if (n == 2 && m == 2 && delta % 2 == 1) return PrimeCase::B;
  if (n == 3 && m == 3 && delta == 1) return PrimeCase::C;
  if (n % 2 == 1 && m == 2 && r != 0 && r != n - 1) return PrimeCase::D;
  return PrimeCase::None;
}

HyperellipticSplit hyperelliptic_split(Int m, Int g) {
  if (m < 2) throw std::invalid_argument("hyperelliptic_split: m must be at least 2");
  if (g < 2) throw std::invalid_argument("hyperelliptic_split: genus must be at least 2");
  if (m != 2) return {};
  return {true, "V4", g / 2, (g + 1) / 2};
}

Int accola_check(const PartitionData& p) {
  if (p.subgroups.empty()) throw std::invalid_argument("accola_check: no subgroups");
  const Int s = static_cast<Int>(p.subgroups.size());
  Int sum = 0;
  for (const auto& h : p.subgroups) sum += h.order * h.genus;
  return p.g0 * p.order_g - (p.g - s * p.g + sum);
}

Int accola_ie_check(const PartitionData& p) {
  if (p.subgroups.empty()) throw std::invalid_argument("accola_ie_check: no subgroups");
  const std::size_t s = p.subgroups.size();
  if (s > 20) throw std::invalid_argument("accola_ie_check: too many subgroups");
  Int total = 0;
  for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < s; ++i)
      if (mask & (1u << i)) idx.push_back(static_cast<int>(i));
    SubgroupGenus h;
    if (idx.size() == 1) {
      h = p.subgroups[static_cast<std::size_t>(idx[0])];
    } else {
      auto it = p.intersections.find(idx);
      if (it == p.intersections.end()) {
        std::string key;
        for (int i : idx) key += (key.empty() ? "" : ",") + std::to_string(i);
        throw std::invalid_argument("accola_ie_check: missing intersection {" + key + "}");
      }
      h = it->second;
    }
    Int term = h.order * h.genus;
    total += idx.size() % 2 == 1 ? term : -term;
  }
  return p.g0 * p.order_g - total;
}

KaniRosenVerdict kani_rosen_check(const std::vector<std::vector<Int>>& gij, const std::vector<Int>& nvec) {
  const std::size_t t = gij.size();
  if (nvec.size() != t) throw std::invalid_argument("kani_rosen_check: matrix and vector sizes differ");
  for (std::size_t i = 0; i < t; ++i) {
    if (gij[i].size() != t) throw std::invalid_argument("kani_rosen_check: matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gij[i][j] != gij[j][i]) throw std::invalid_argument("kani_rosen_check: matrix is not symmetric");
  }

  KaniRosenVerdict v;
  v.linear.assign(t, 0);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) v.linear[i] += nvec[j] * gij[i][j];
    v.quadratic += nvec[i] * v.linear[i];
  }
  v.holds = v.quadratic == 0;
  for (Int l : v.linear) v.holds = v.holds && l == 0;

  if (t >= 2) {
    v.product_shape = true;
    Int sum = 0;
    for (std::size_t i = 1; i < t; ++i) {
      sum += gij[i][i];
      for (std::size_t j = i + 1; j < t; ++j) v.product_shape = v.product_shape && gij[i][j] == 0;
    }
    v.product_shape = v.product_shape && gij[0][0] == sum;
  }

  if (!v.holds) return v;
  if (v.product_shape) {
    std::vector<std::string> parts;
    for (std::size_t i = 1; i < t; ++i) parts.push_back("Jac 𝒳" + scripted(static_cast<Int>(i), true));
    v.statement = "Jac 𝒳 ≅ " + join_product(parts);
    return v;
  }
  std::vector<std::string> left, right;
  for (std::size_t i = 0; i < t; ++i) {
    if (nvec[i] > 0) left.push_back(quotient_factor(i, nvec[i]));
    if (nvec[i] < 0) right.push_back(quotient_factor(i, -nvec[i]));
  }
  if (!left.empty() || !right.empty()) v.statement = join_product(left) + " ≅ " + join_product(right);
  return v;
}

KaniRosenInput superelliptic_configuration(Int n, Int m, Int delta) {
  auto c = eqm_certificate(n, m, delta);
  return {{{c.g, c.g1, c.g2}, {c.g1, c.g1, 0}, {c.g2, 0, c.g2}}, {1, -1, -1}};
}

}  // namespace supersplit::split
