#pragma once

// When does Jac(y^n = f(x^m)) split as Jac(X1) x Jac(X2)? The criterion
//
//   delta (n-1)(m-2) = 1 - (gcd(delta+1, n) + gcd(delta, n) - gcd(delta m, n))
//
// is equivalent to g = g1 + g2. Also: the prime-level classification, the
// hyperelliptic V4 case and the Accola / Kani-Rosen genus relations.

#include "supersplit/curves.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace supersplit::split {

using curves::Int;

struct SplitCertificate {
  Int n = 0, m = 0, delta = 0;
  Int lhs = 0;  // delta (n-1)(m-2)
  Int rhs = 0;  // 1 - (gcd(delta+1,n) + gcd(delta,n) - gcd(delta m,n))
  Int g = 0, g1 = 0, g2 = 0;
  bool splits = false;
  /// delta * m <= n: g came from the closed form outside its stated range.
  bool formula_extended = false;

  friend bool operator==(const SplitCertificate&, const SplitCertificate&) = default;
};

/// Requires n >= 2, m >= 2, delta >= 1.
SplitCertificate eqm_certificate(Int n, Int m, Int delta);

/// Every splitting (n, m, delta) with 2 <= n <= n_max, 2 <= m <= m_max,
/// 1 <= delta <= delta_max, in ascending lexicographic order. Empty when a
/// range is empty. The scan is split across OpenMP threads.
std::vector<SplitCertificate> enumerate_splits(Int n_max, Int m_max, Int delta_max);

enum class PrimeCase {
  A,     // m = 2, delta = 0 (mod n)
  B,     // n = 2, m = 2, delta odd
  C,     // n = 3, m = 3, delta = 1
  D,     // n odd, m = 2, delta != 0, -1 (mod n)
  None,
};

std::string to_string(PrimeCase c);

/// First matching case in the order A, B, C, D. Rejects composite n.
PrimeCase classify_prime_case(Int n, Int m, Int delta);

struct HyperellipticSplit {
  bool splits = false;
  std::optional<std::string> group;  // "V4" when splitting
  Int g1 = 0, g2 = 0;                // floor(g/2), floor((g+1)/2) when splitting
};

/// Hyperelliptic genus-g curve with reduced automorphism C_m: splits iff
/// m = 2. Requires m >= 2, g >= 2.
HyperellipticSplit hyperelliptic_split(Int m, Int g);

/// |H| and g(X/H) for a subgroup H.
struct SubgroupGenus {
  Int order = 1;
  Int genus = 0;
};

struct PartitionData {
  Int order_g = 1;  // |G|
  Int g = 0;        // genus of X
  Int g0 = 0;       // genus of X/G
  std::vector<SubgroupGenus> subgroups;
  /// Keyed by a sorted index set {i, j, ...} (0-based, size >= 2):
  /// |H_i cap H_j cap ...| and the genus of X by that intersection.
  std::map<std::vector<int>, SubgroupGenus> intersections;
};

/// g0 |G| - (g - s g + sum |H_i| g_i) for pairwise trivially intersecting
/// subgroups. Zero when the relation holds. Rejects an empty subgroup list.
Int accola_check(const PartitionData& p);

/// g0 |G| - inclusion-exclusion sum over all nonempty index sets, for
/// subgroups covering G. Throws std::invalid_argument naming the first
/// missing intersection entry.
Int accola_ie_check(const PartitionData& p);

struct KaniRosenVerdict {
  bool holds = false;
  Int quadratic = 0;          // sum_ij n_i n_j g_ij
  std::vector<Int> linear;    // sum_j n_j g_ij for each i
  bool product_shape = false; // g_ij = 0 for 2 <= i < j and g_11 = sum_{i>=2} g_ii
  std::optional<std::string> statement;
};

/// `gij` is the symmetric matrix of genera g(X / H_i H_j) with row 1 for the
/// trivial subgroup (so g_11 = g(X)). Throws on asymmetric or mismatched
/// input.
KaniRosenVerdict kani_rosen_check(const std::vector<std::vector<Int>>& gij, const std::vector<Int>& nvec);

/// The three-subgroup configuration {1}, <sigma>, <sigma tau> for
/// y^n = f(x^m): g_11 = g, g_22 = g_12 = g1, g_33 = g_13 = g2, g_23 = 0,
/// with n = (1, -1, -1).
struct KaniRosenInput {
  std::vector<std::vector<Int>> gij;
  std::vector<Int> nvec;
};
KaniRosenInput superelliptic_configuration(Int n, Int m, Int delta);

namespace serial {

std::vector<SplitCertificate> enumerate_splits(Int n_max, Int m_max, Int delta_max);

}  // namespace serial

}  // namespace supersplit::split
