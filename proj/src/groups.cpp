#include "supersplit/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace supersplit::groups {

namespace {

constexpr int kGamma = 0, kSigma = 1, kTau = 2;

Int mod(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

Int powmod_small(Int base, Int e, Int n) {
  Int r = 1 % n;
  base = mod(base, n);
  while (e > 0) {
    if (e & 1) r = r * base % n;
    base = base * base % n;
    e >>= 1;
  }
  return r;
}

Word gen(int g, Int e = 1) { return e == 0 ? Word{} : Word{{g, e}}; }

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word conjugate(int by, int g) { return {{by, 1}, {g, 1}, {by, -1}}; }

// (sigma*tau)^k spelled out letter by letter.
Word alternating_power(Int k) {
  Word w;
  for (Int i = 0; i < k; ++i) {
    w.push_back({kSigma, 1});
    w.push_back({kTau, 1});
  }
  return w;
}

Word inverse_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->exponent});
  return out;
}

std::string power_text(const std::string& base, Int e) {
  if (e == 0) return "1";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

// Merges adjacent equal generators, "a*a*b^-1" style.
std::string word_text(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::vector<Letter> merged;
  for (const auto& l : w) {
    if (!merged.empty() && merged.back().generator == l.generator)
      merged.back().exponent += l.exponent;
    else
      merged.push_back(l);
    if (merged.back().exponent == 0) merged.pop_back();
  }
  if (merged.empty()) return "1";
  std::string out;
  for (const auto& l : merged) {
    if (!out.empty()) out += "*";
    out += power_text(names[static_cast<std::size_t>(l.generator)], l.exponent);
  }
  return out;
}

// Relations shared by G1..G4 and Gspecial.
struct ExtensionShape {
  Int tau_square;   // tau^2 = gamma^tau_square
  Int braid_power;  // (sigma*tau)^m = gamma^braid_power
  bool tau_inverts; // tau*gamma*tau^-1 = gamma^-1
};

ExtensionShape extension_shape(GroupTag tag, Int n) {
  switch (tag) {
    case GroupTag::G1: return {0, 0, true};
    case GroupTag::G2: return {n - 1, 0, false};
    case GroupTag::G3: return {0, n / 2, true};
    case GroupTag::G4: return {n - 1, n / 2, false};
    case GroupTag::Gspecial: return {n - 1, n / 2, false};
    default: throw std::logic_error("not a sigma/tau extension");
  }
}

std::vector<Relation> extension_relations(Int n, Int m, const ExtensionShape& x) {
  std::vector<Relation> rel;
  rel.push_back({gen(kGamma, n), {}, "gamma^" + std::to_string(n) + " = 1"});
  rel.push_back({gen(kSigma, 2), gen(kGamma), "sigma^2 = gamma"});
  rel.push_back({gen(kTau, 2), gen(kGamma, x.tau_square), "tau^2 = " + power_text("gamma", x.tau_square)});
  rel.push_back({alternating_power(m), gen(kGamma, x.braid_power),
                 "(sigma*tau)^" + std::to_string(m) + " = " + power_text("gamma", x.braid_power)});
  rel.push_back({conjugate(kSigma, kGamma), gen(kGamma), "sigma*gamma*sigma^-1 = gamma"});
  Int image = x.tau_inverts ? n - 1 : 1;
  rel.push_back({conjugate(kTau, kGamma), gen(kGamma, image), "tau*gamma*tau^-1 = " + power_text("gamma", image)});
  return rel;
}

// D_2k as (rotation r mod k, reflection bit f) = rho^r phi^f with
// sigma = rho*phi, tau = phi.
struct Dihedral {
  Int k;
  Int size() const { return 2 * k; }
  Int mul(Int a, Int b) const {
    Int r1 = a % k, f1 = a / k, r2 = b % k, f2 = b / k;
    return mod(r1 + (f1 ? -r2 : r2), k) + k * (f1 ^ f2);
  }
  std::string label(Int a) const {
    Int r = a % k, f = a / k;
    std::string s = r == 0 ? "" : power_text("rho", r);
    if (f) s += s.empty() ? "phi" : "*phi";
    return s.empty() ? "1" : s;
  }
  static constexpr Int sigma(Int k) { return 1 + k; }
  static constexpr Int tau(Int k) { return k; }
};

// gamma^a * w for the 2m reduced alternating words w: index 0 is the empty
// word, 1 + 2(L-1) + start for length L < m, 2m - 1 for the length-m word
// starting with sigma. A length-m word starting with tau is rewritten to
// gamma^braid_shift times the sigma-led one.
class SigmaTauExtension {
 public:
  SigmaTauExtension(Int n, Int m, ExtensionShape shape) : n_(n), m_(m), shape_(shape) {
    braid_shift_ = compute_braid_shift();
  }

  Int order() const { return n_ * 2 * m_; }
  Int encode(Int a, Int w) const { return mod(a, n_) + n_ * w; }

  Int multiply(Int x, Int y) const {
    Int a = x % n_, w = x / n_;
    Int b = y % n_, v = y / n_;
    a = mod(a + sign(w) * b, n_);
    auto [start, len] = shape_of(v);
    for (Int i = 0; i < len; ++i) std::tie(a, w) = right_letter(a, w, letter(start, i));
    return encode(a, w);
  }

  std::string label(Int x) const {
    Int a = x % n_, w = x / n_;
    std::string s = a == 0 ? "" : power_text("gamma", a);
    auto [start, len] = shape_of(w);
    for (Int i = 0; i < len; ++i) {
      if (!s.empty()) s += "*";
      s += letter(start, i) == kSigma ? "sigma" : "tau";
    }
    return s.empty() ? "1" : s;
  }

  Int gamma() const { return encode(1, 0); }
  Int sigma() const { return encode(0, word_index(kSigma, 1)); }
  Int tau() const { return encode(0, word_index(kTau, 1)); }

 private:
  Int word_index(int start, Int len) const {
    if (len == 0) return 0;
    if (len == m_) return 2 * m_ - 1;
    return 1 + 2 * (len - 1) + (start == kTau ? 1 : 0);
  }

  std::pair<int, Int> shape_of(Int w) const {
    if (w == 0) return {kSigma, 0};
    if (w == 2 * m_ - 1) return {kSigma, m_};
    Int len = (w - 1) / 2 + 1;
    return {(w - 1) % 2 == 0 ? kSigma : kTau, len};
  }

  static int letter(int start, Int i) {
    return ((start == kSigma ? 0 : 1) + i) % 2 == 0 ? kSigma : kTau;
  }

  Int tau_count(int start, Int len) const {
    Int c = 0;
    for (Int i = 0; i < len; ++i) c += letter(start, i) == kTau;
    return c;
  }

  Int sign_of(int start, Int len) const {
    return shape_.tau_inverts && tau_count(start, len) % 2 == 1 ? -1 : 1;
  }

  // w * gamma^b = gamma^(sign(w) b) * w.
  Int sign(Int w) const {
    auto [start, len] = shape_of(w);
    return sign_of(start, len);
  }

  Int square_power(int x) const { return x == kSigma ? 1 : shape_.tau_square; }

  std::pair<Int, Int> right_letter(Int a, Int w, int x) const {
    auto [start, len] = shape_of(w);
    if (len > 0 && letter(start, len - 1) == x) {
      Int shorter = word_index(start, len - 1);
      return {mod(a + sign(shorter) * square_power(x), n_), shorter};
    }
    if (len == 0) return {a, word_index(x, 1)};
    if (len + 1 < m_) return {a, word_index(start, len + 1)};
    if (len + 1 == m_) {
      if (start == kSigma) return {a, word_index(kSigma, m_)};
      return {mod(a + braid_shift_, n_), word_index(kSigma, m_)};
    }
    // len == m: sigma-led word times x is sigma * (tau-led word of length m),
    // which rewrites to gamma^(shift) sigma sigma (tail) = gamma^(shift+1) tail.
    return {mod(a + braid_shift_ + 1, n_), word_index(kTau, m_ - 1)};
  }

  // Exponent k with (tau-led length-m word) = gamma^k (sigma-led length-m word).
  Int compute_braid_shift() const {
    // Collect A^-1 = prod over reversed letters of gamma^(-e_x) x.
    Int k = 0;
    Int taus = 0;
    for (Int i = m_ - 1; i >= 0; --i) {
      int x = letter(kSigma, i);
      Int s = shape_.tau_inverts && taus % 2 == 1 ? -1 : 1;
      k += s * -square_power(x);
      taus += x == kTau;
    }
    const Int c = shape_.braid_power;
    if (m_ % 2 == 1) return mod(k + sign_of(kSigma, m_) * c, n_);  // B = A^-1 gamma^c
    return mod(-(c + k), n_);                                     // A = gamma^c A^-1
  }

  Int n_, m_;
  ExtensionShape shape_;
  Int braid_shift_ = 0;
};

ConcreteGroup::Element el(Int v) { return static_cast<ConcreteGroup::Element>(v); }

}  // namespace

std::string to_string(GroupTag t) {
  switch (t) {
    case GroupTag::Cmn: return "Cmn";
    case GroupTag::Metacyclic: return "Metacyclic";
    case GroupTag::D2mxCn: return "D2mxCn";
    case GroupTag::D2mn: return "D2mn";
    case GroupTag::Gspecial: return "Gspecial";
    case GroupTag::G1: return "G1";
    case GroupTag::G2: return "G2";
    case GroupTag::G3: return "G3";
    case GroupTag::G4: return "G4";
  }
  return "?";
}

GroupTag group_tag_from_string(const std::string& s) {
  for (GroupTag t : {GroupTag::Cmn, GroupTag::Metacyclic, GroupTag::D2mxCn, GroupTag::D2mn, GroupTag::Gspecial,
                     GroupTag::G1, GroupTag::G2, GroupTag::G3, GroupTag::G4})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown group tag '" + s + "'");
}

std::string GroupPresentation::name() const {
  switch (tag) {
    case GroupTag::Metacyclic: return "Metacyclic(l=" + std::to_string(l.value_or(0)) + ")";
    case GroupTag::D2mxCn: return "D2m x Cn";
    default: return to_string(tag);
  }
}

std::vector<Word> GroupPresentation::relators() const {
  std::vector<Word> out;
  for (const auto& r : relations) out.push_back(concat(r.lhs, inverse_word(r.rhs)));
  return out;
}

GroupPresentation make_presentation(GroupTag tag, Int n, Int m, std::optional<Int> l) {
  if (n < 2 || m < 2) throw std::invalid_argument("presentation needs n >= 2 and m >= 2");
  GroupPresentation p;
  p.tag = tag;
  p.n = n;
  p.m = m;
  const std::string ns = std::to_string(n), ms = std::to_string(m);
  switch (tag) {
    case GroupTag::Cmn:
      p.generators = {"gamma", "sigma"};
      p.relations = {{gen(kGamma, n), {}, "gamma^" + ns + " = 1"},
                     {gen(kSigma, m), gen(kGamma), "sigma^" + ms + " = gamma"},
                     {conjugate(kSigma, kGamma), gen(kGamma), "sigma*gamma*sigma^-1 = gamma"}};
      p.expected_order = BigInt(m) * n;
      break;
    case GroupTag::Metacyclic: {
      if (!l) throw std::invalid_argument("Metacyclic needs l");
      Int lv = mod(*l, n);
      if (std::gcd(lv, n) != 1) throw std::invalid_argument("Metacyclic needs gcd(l, n) = 1");
      if (powmod_small(lv, m, n) != 1 % n) throw std::invalid_argument("Metacyclic needs l^m = 1 (mod n)");
      if (std::gcd(m, n) == 1 && lv != n - 1)
        throw std::invalid_argument("Metacyclic with gcd(m, n) = 1 needs l = n - 1");
      p.l = lv;
      p.generators = {"gamma", "sigma"};
      p.relations = {{gen(kGamma, n), {}, "gamma^" + ns + " = 1"},
                     {gen(kSigma, m), {}, "sigma^" + ms + " = 1"},
                     {conjugate(kSigma, kGamma), gen(kGamma, lv), "sigma*gamma*sigma^-1 = " + power_text("gamma", lv)}};
      p.expected_order = BigInt(m) * n;
      break;
    }
    case GroupTag::D2mxCn:
      p.generators = {"gamma", "sigma", "tau"};
      p.relations = {{gen(kGamma, n), {}, "gamma^" + ns + " = 1"},
                     {gen(kSigma, 2), {}, "sigma^2 = 1"},
                     {gen(kTau, 2), {}, "tau^2 = 1"},
                     {alternating_power(m), {}, "(sigma*tau)^" + ms + " = 1"},
                     {conjugate(kSigma, kGamma), gen(kGamma), "sigma*gamma*sigma^-1 = gamma"},
                     {conjugate(kTau, kGamma), gen(kGamma), "tau*gamma*tau^-1 = gamma"}};
      p.expected_order = BigInt(2) * m * n;
      break;
    case GroupTag::D2mn:
      p.generators = {"gamma", "sigma", "tau"};
      // gamma is named for uniformity and pinned to (sigma*tau)^m.
      p.relations = {{gen(kSigma, 2), {}, "sigma^2 = 1"},
                     {gen(kTau, 2), {}, "tau^2 = 1"},
                     {alternating_power(m * n), {}, "(sigma*tau)^" + std::to_string(m * n) + " = 1"},
                     {gen(kGamma), alternating_power(m), "gamma = (sigma*tau)^" + ms}};
      p.expected_order = BigInt(2) * m * n;
      break;
    case GroupTag::Gspecial:
      if (n % 2 != 0 || m % 2 == 0) throw std::invalid_argument("Gspecial needs n even and m odd");
      p.generators = {"gamma", "sigma", "tau"};
      p.relations = extension_relations(n, m, extension_shape(tag, n));
      p.expected_order = BigInt(2) * m * n;
      break;
    case GroupTag::G1:
    case GroupTag::G2:
    case GroupTag::G3:
    case GroupTag::G4:
      if (n % 2 != 0 || m % 2 != 0) throw std::invalid_argument(to_string(tag) + " needs n and m even");
      p.generators = {"gamma", "sigma", "tau"};
      p.relations = extension_relations(n, m, extension_shape(tag, n));
      p.expected_order = BigInt(2) * m * n;
      break;
  }
  return p;
}

std::string to_gap(const GroupPresentation& p) {
  std::string out = "F := FreeGroup(";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    out += (i ? ", \"" : "\"") + p.generators[i] + "\"";
  out += ");;\n";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    out += p.generators[i] + " := F." + std::to_string(i + 1) + ";; ";
  out += "\nG := F / [ ";
  auto rels = p.relators();
  for (std::size_t i = 0; i < rels.size(); ++i) out += (i ? ", " : "") + word_text(rels[i], p.generators);
  out += " ];;\n";
  return out;
}

std::string to_string(ReducedTag t) { return t == ReducedTag::Cm ? "Cm" : "D2m"; }

ReducedTag reduced_tag_from_string(const std::string& s) {
  if (s == "Cm") return ReducedTag::Cm;
  if (s == "D2m") return ReducedTag::D2m;
  throw std::invalid_argument("unknown reduced group '" + s + "' (expected Cm or D2m)");
}

ReducedGroup reduced_group(Int r, Int lambda, Int m, bool generic) {
  if (r < 2 || lambda < 1 || m < 2) throw std::invalid_argument("reduced_group: need r >= 2, lambda >= 1, m >= 2");
  return {r == 2 ? ReducedTag::D2m : ReducedTag::Cm, m, generic};
}

std::vector<GroupPresentation> full_group_candidates(Int n, Int m, ReducedTag reduced) {
  if (n < 2 || m < 2) throw std::invalid_argument("full_group_candidates: need n >= 2 and m >= 2");
  std::vector<GroupPresentation> out;
  if (reduced == ReducedTag::Cm) {
    out.push_back(make_presentation(GroupTag::Cmn, n, m));
    const bool coprime = std::gcd(m, n) == 1;
    for (Int l = 2; l < n; ++l) {
      if (std::gcd(l, n) != 1 || powmod_small(l, m, n) != 1) continue;
      if (coprime && l != n - 1) continue;
      out.push_back(make_presentation(GroupTag::Metacyclic, n, m, l));
    }
    return out;
  }
  out.push_back(make_presentation(GroupTag::D2mxCn, n, m));
  if (n % 2 == 0 && m % 2 == 1) out.push_back(make_presentation(GroupTag::Gspecial, n, m));
  if (n % 2 == 0 && m % 2 == 0) {
    out.push_back(make_presentation(GroupTag::D2mn, n, m));
    for (GroupTag t : {GroupTag::G1, GroupTag::G2, GroupTag::G3, GroupTag::G4})
      out.push_back(make_presentation(t, n, m));
  }
  return out;
}

ConcreteGroup::ConcreteGroup(std::string name, std::size_t order, Element identity, Rule mul, Labeler label,
                             std::vector<std::pair<std::string, Element>> generators)
    : name_(std::move(name)),
      order_(order),
      identity_(identity),
      mul_(std::move(mul)),
      label_(std::move(label)),
      generators_(std::move(generators)) {}

ConcreteGroup::Element ConcreteGroup::generator(const std::string& name) const {
  for (const auto& [n, e] : generators_)
    if (n == name) return e;
  throw std::invalid_argument("group " + name_ + " has no generator '" + name + "'");
}

ConcreteGroup::Element ConcreteGroup::power(Element a, Int e) const {
  if (e < 0) return power(inverse(a), -e);
  Element result = identity_;
  Element base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

ConcreteGroup::Element ConcreteGroup::inverse(Element a) const {
  return power(a, static_cast<Int>(order_) - 1);
}

ConcreteGroup::Element ConcreteGroup::evaluate(const Word& w, const std::vector<std::string>& names) const {
  Element v = identity_;
  for (const auto& l : w) v = multiply(v, power(generator(names[static_cast<std::size_t>(l.generator)]), l.exponent));
  return v;
}

std::size_t ConcreteGroup::generated_order() const {
  std::vector<char> seen(order_, 0);
  std::vector<Element> frontier{identity_};
  seen[identity_] = 1;
  std::size_t count = 1;
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (const auto& [name, g] : generators_) {
      Element y = multiply(x, g);
      if (y >= order_) return 0;
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  return count;
}

bool ConcreteGroup::is_abelian() const {
  for (const auto& [na, a] : generators_)
    for (const auto& [nb, b] : generators_)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

std::vector<std::size_t> ConcreteGroup::class_sizes() const {
  std::vector<char> done(order_, 0);
  std::vector<std::size_t> sizes;
  for (Element x = 0; x < order_; ++x) {
    if (done[x]) continue;
    std::size_t size = 0;
    for (Element g = 0; g < order_; ++g) {
      Element c = multiply(multiply(g, x), inverse(g));
      if (!done[c]) {
        done[c] = 1;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

namespace {

// One row of the axiom check: element x against every y.
struct RowResult {
  bool closed = true, identity = true, inverses = true, associative = true;
};

RowResult check_row(const ConcreteGroup& g, ConcreteGroup::Element x) {
  using Element = ConcreteGroup::Element;
  const auto n = static_cast<Element>(g.order());
  const Element e = g.identity();
  RowResult r;
  r.identity = g.multiply(e, x) == x && g.multiply(x, e) == x;

  Element inv = g.inverse(x);
  bool found = inv < n && g.multiply(x, inv) == e && g.multiply(inv, x) == e;
  for (Element y = 0; !found && y < n; ++y) found = g.multiply(x, y) == e && g.multiply(y, x) == e;
  r.inverses = found;

  for (const auto& [name, s] : g.generators()) {
    const Element xs = g.multiply(x, s);
    if (xs >= n) {
      r.closed = false;
      return r;
    }
    for (Element y = 0; y < n; ++y) {
      const Element sy = g.multiply(s, y);
      const Element left = g.multiply(xs, y);
      const Element right = g.multiply(x, sy);
      if (sy >= n || left >= n || right >= n) {
        r.closed = false;
        return r;
      }
      if (left != right) r.associative = false;
    }
  }
  return r;
}

}  // namespace

namespace serial {

AxiomReport check_axioms(const ConcreteGroup& g) {
  AxiomReport rep{true, true, true, true};
  for (ConcreteGroup::Element x = 0; x < g.order(); ++x) {
    auto r = check_row(g, x);
    rep.closed = rep.closed && r.closed;
    rep.identity = rep.identity && r.identity;
    rep.inverses = rep.inverses && r.inverses;
    rep.associative = rep.associative && r.associative;
  }
  rep.associative = rep.associative && g.generated_order() == g.order();
  return rep;
}

}  // namespace serial

AxiomReport check_axioms(const ConcreteGroup& g) {
  bool closed = true, identity = true, inverses = true, associative = true;
  const auto n = static_cast<std::int64_t>(g.order());
#pragma omp parallel for schedule(static) reduction(&& : closed, identity, inverses, associative)
  for (std::int64_t x = 0; x < n; ++x) {
    auto r = check_row(g, static_cast<ConcreteGroup::Element>(x));
    closed = closed && r.closed;
    identity = identity && r.identity;
    inverses = inverses && r.inverses;
    associative = associative && r.associative;
  }
  return {closed, identity, inverses, associative && g.generated_order() == g.order()};
}

bool relators_hold(const ConcreteGroup& g, const GroupPresentation& p) {
  for (const auto& r : p.relations)
    if (g.evaluate(r.lhs, p.generators) != g.evaluate(r.rhs, p.generators)) return false;
  return true;
}

ConcreteGroup realize_metacyclic(Int n, Int m, Int l) {
  if (n < 1 || m < 1) throw std::invalid_argument("realize_metacyclic: need n, m >= 1");
  const Int lv = mod(l, n);
  if (std::gcd(lv, n) != 1 && n > 1) throw std::invalid_argument("realize_metacyclic: gcd(l, n) must be 1");
  if (powmod_small(lv, m, n) != 1 % n) throw std::invalid_argument("realize_metacyclic: l^m must be 1 (mod n)");
  std::vector<Int> lpow(static_cast<std::size_t>(m));
  for (Int b = 0; b < m; ++b) lpow[static_cast<std::size_t>(b)] = powmod_small(lv, b, n);
  auto mul = [n, m, lpow](ConcreteGroup::Element x, ConcreteGroup::Element y) {
    Int a1 = x % n, b1 = x / n, a2 = y % n, b2 = y / n;
    return el((a1 + lpow[static_cast<std::size_t>(b1)] * a2) % n + n * ((b1 + b2) % m));
  };
  auto label = [n](ConcreteGroup::Element x) {
    Int a = x % n, b = x / n;
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  return ConcreteGroup("Metacyclic(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(lv) + ")",
                       static_cast<std::size_t>(n * m), 0, mul, label, {{"gamma", el(1 % n)}, {"sigma", el(n * (1 % m))}});
}

ConcreteGroup realize(const GroupPresentation& p) {
  const Int n = p.n, m = p.m;
  switch (p.tag) {
    case GroupTag::Cmn: {
      const Int order = m * n;
      return ConcreteGroup(
          p.name(), static_cast<std::size_t>(order), 0,
          [order](ConcreteGroup::Element x, ConcreteGroup::Element y) { return el((x + y) % order); },
          [](ConcreteGroup::Element x) { return power_text("sigma", x); }, {{"gamma", el(m)}, {"sigma", el(1)}});
    }
    case GroupTag::Metacyclic:
      return realize_metacyclic(n, m, *p.l);
    case GroupTag::D2mxCn: {
      const Dihedral d{m};
      const Int ds = d.size();
      return ConcreteGroup(
          p.name(), static_cast<std::size_t>(ds * n), 0,
          [d, ds, n](ConcreteGroup::Element x, ConcreteGroup::Element y) {
            return el(d.mul(x % ds, y % ds) + ds * ((x / ds + y / ds) % n));
          },
          [d, ds](ConcreteGroup::Element x) {
            return d.label(x % ds) + (x / ds ? "*" + power_text("gamma", x / ds) : "");
          },
          {{"gamma", el(ds)}, {"sigma", el(Dihedral::sigma(m))}, {"tau", el(Dihedral::tau(m))}});
    }
    case GroupTag::D2mn: {
      const Dihedral d{m * n};
      const Int rho_m = m;  // (sigma*tau)^m
      return ConcreteGroup(
          p.name(), static_cast<std::size_t>(d.size()), 0,
          [d](ConcreteGroup::Element x, ConcreteGroup::Element y) { return el(d.mul(x, y)); },
          [d](ConcreteGroup::Element x) { return d.label(x); },
          {{"gamma", el(rho_m)}, {"sigma", el(Dihedral::sigma(m * n))}, {"tau", el(Dihedral::tau(m * n))}});
    }
    case GroupTag::Gspecial:
    case GroupTag::G1:
    case GroupTag::G2:
    case GroupTag::G3:
    case GroupTag::G4: {
      const SigmaTauExtension ext(n, m, extension_shape(p.tag, n));
      return ConcreteGroup(
          p.name(), static_cast<std::size_t>(ext.order()), 0,
          [ext](ConcreteGroup::Element x, ConcreteGroup::Element y) { return el(ext.multiply(x, y)); },
          [ext](ConcreteGroup::Element x) { return ext.label(x); },
          {{"gamma", el(ext.gamma())}, {"sigma", el(ext.sigma())}, {"tau", el(ext.tau())}});
    }
  }
  throw std::logic_error("realize: unhandled tag");
}

std::string to_string(VerifyOutcome o) {
  switch (o) {
    case VerifyOutcome::order_matches: return "order matches";
    case VerifyOutcome::order_differs: return "order differs";
    case VerifyOutcome::too_large: return "too large";
  }
  return "?";
}

VerifyReport verify_presentation(const GroupPresentation& p, Int cap) {
  if (cap < 1 || cap > 10000) throw std::invalid_argument("verify_presentation: cap must be in [1, 10^4]");
  VerifyReport rep;
  if (p.expected_order > cap) return rep;
  ConcreteGroup g = realize(p);
  rep.axioms_hold = check_axioms(g).ok();
  rep.relators_hold = rep.axioms_hold && relators_hold(g, p);
  const std::size_t actual = g.generated_order();
  rep.actual = BigInt(static_cast<unsigned long>(actual));
  const bool matches = rep.axioms_hold && rep.relators_hold && *rep.actual == p.expected_order;
  rep.outcome = matches ? VerifyOutcome::order_matches : VerifyOutcome::order_differs;
  return rep;
}

}  // namespace supersplit::groups
