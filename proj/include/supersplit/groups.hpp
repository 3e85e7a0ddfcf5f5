#pragma once

// Candidate automorphism groups of the component curves C_{r,lambda,m}:
// degree-n central extensions of the reduced group C_m or D_2m, stored as
// presentations and realized as concrete finite groups for verification.

#include "supersplit/bigint.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace supersplit::groups {

using Int = std::int64_t;

enum class GroupTag { Cmn, Metacyclic, D2mxCn, D2mn, Gspecial, G1, G2, G3, G4 };

std::string to_string(GroupTag t);
GroupTag group_tag_from_string(const std::string& s);

struct Letter {
  int generator = 0;  // index into GroupPresentation::generators
  Int exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// lhs = rhs, with `text` the human-readable form, e.g. "sigma*gamma*sigma^-1 = gamma^2".
struct Relation {
  Word lhs;
  Word rhs;
  std::string text;
};

struct GroupPresentation {
  GroupTag tag = GroupTag::Cmn;
  Int n = 0;
  Int m = 0;
  std::optional<Int> l;  // Metacyclic only
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  BigInt expected_order = 0;

  /// e.g. "Metacyclic(l=2)", "D2m x Cn", "G3".
  std::string name() const;
  /// lhs * rhs^-1 for every relation.
  std::vector<Word> relators() const;
};

/// Validates parameters: n, m >= 2; Metacyclic needs gcd(l, n) = 1,
/// l^m = 1 (mod n) and l = n - 1 when gcd(m, n) = 1; Gspecial needs n even
/// and m odd; G1..G4 need n and m even. Throws std::invalid_argument.
GroupPresentation make_presentation(GroupTag tag, Int n, Int m, std::optional<Int> l = std::nullopt);

/// Free-group quotient in GAP syntax.
std::string to_gap(const GroupPresentation& p);

enum class ReducedTag { Cm, D2m };

std::string to_string(ReducedTag t);
ReducedTag reduced_tag_from_string(const std::string& s);

struct ReducedGroup {
  ReducedTag tag = ReducedTag::Cm;
  Int m = 0;
  bool generic = true;
};

/// Reduced automorphism group of a generic C_{r,lambda,m}: D_2m when r = 2,
/// C_m otherwise.
ReducedGroup reduced_group(Int r, Int lambda, Int m, bool generic = true);

/// Every extension allowed for the given reduced group, as a candidate list.
std::vector<GroupPresentation> full_group_candidates(Int n, Int m, ReducedTag reduced);

/// Finite group on elements 0 .. order-1 with a multiplication rule.
class ConcreteGroup {
 public:
  using Element = std::uint32_t;
  using Rule = std::function<Element(Element, Element)>;
  using Labeler = std::function<std::string(Element)>;

  ConcreteGroup(std::string name, std::size_t order, Element identity, Rule mul, Labeler label,
                std::vector<std::pair<std::string, Element>> generators);

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element multiply(Element a, Element b) const { return mul_(a, b); }
  std::string label(Element e) const { return label_(e); }
  const std::vector<std::pair<std::string, Element>>& generators() const { return generators_; }
  Element generator(const std::string& name) const;

  /// Assumes the group axioms hold.
  Element power(Element a, Int e) const;
  Element inverse(Element a) const;

  /// Value of a word whose letters index `names`.
  Element evaluate(const Word& w, const std::vector<std::string>& names) const;

  /// Elements reachable from the identity by right multiplication by generators.
  std::size_t generated_order() const;
  bool is_abelian() const;
  /// Conjugacy class sizes in ascending order.
  std::vector<std::size_t> class_sizes() const;

 private:
  std::string name_;
  std::size_t order_;
  Element identity_;
  Rule mul_;
  Labeler label_;
  std::vector<std::pair<std::string, Element>> generators_;
};

struct AxiomReport {
  bool closed = false;
  bool identity = false;
  bool inverses = false;
  /// Light's test over the generators; conclusive only when the generators
  /// generate the whole set.
  bool associative = false;

  bool ok() const { return closed && identity && inverses && associative; }
};

/// Exhaustive group-axiom check, parallel over elements.
AxiomReport check_axioms(const ConcreteGroup& g);

/// Every relation of `p` holds for the group's generators (matched by name).
bool relators_hold(const ConcreteGroup& g, const GroupPresentation& p);

/// Pairs (a mod n, b mod m), (a1, b1)(a2, b2) = (a1 + l^b1 a2, b1 + b2),
/// gamma = (1, 0), sigma = (0, 1). Requires gcd(l, n) = 1 and l^m = 1 (mod n).
ConcreteGroup realize_metacyclic(Int n, Int m, Int l);

/// Concrete model for any presentation. G1..G4 and Gspecial use the normal
/// form gamma^a * w with w one of the 2m reduced alternating sigma/tau words.
ConcreteGroup realize(const GroupPresentation& p);

enum class VerifyOutcome { order_matches, order_differs, too_large };

std::string to_string(VerifyOutcome o);

struct VerifyReport {
  VerifyOutcome outcome = VerifyOutcome::too_large;
  std::optional<BigInt> actual;
  bool relators_hold = false;
  bool axioms_hold = false;
};

/// Builds the concrete model and compares its order with expected_order.
/// Requires cap <= 10^4; expected orders above cap give too_large.
VerifyReport verify_presentation(const GroupPresentation& p, Int cap = 10000);

namespace serial {

AxiomReport check_axioms(const ConcreteGroup& g);

}  // namespace serial

}  // namespace supersplit::groups
