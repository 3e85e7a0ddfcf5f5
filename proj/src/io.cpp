#include "supersplit/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace supersplit::io {

namespace {

using family::FamilySolution;
using family::SolutionStatus;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::int64_t require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("key \"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

// Accepts a decimal string or a JSON integer.
BigInt big_from_json(const Json& v, const char* key) {
  if (v.is_string()) return parse_bigint(v.get<std::string>());
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<std::int64_t>()));
  throw std::invalid_argument(std::string("key \"") + key + "\" must be a decimal string");
}

bool is_unresolved(const FamilySolution& s) { return s.status == SolutionStatus::unresolved_factoring; }

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    std::string_view d = text.substr(slash + 1);
    if (!d.empty() && (d.front() == '-' || d.front() == '+')) throw std::invalid_argument("denominator must be unsigned");
    den = parse_bigint(d);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Json to_json(const curves::SuperellipticCurve& c) {
  Json j;
  j["n"] = c.n;
  j["m"] = c.m;
  j["delta"] = c.delta;
  j["twisted"] = c.twisted;
  if (c.coeffs) {
    Json arr = Json::array();
    for (const auto& q : *c.coeffs) arr.push_back(to_string(q));
    j["coeffs"] = arr;
  } else {
    j["coeffs"] = nullptr;
  }
  const auto g = curves::curve_genus(c);
  j["genus"] = g.genus;
  j["equation"] = c.equation();
  j["formula_extended"] = g.formula_extended;
  return j;
}

curves::SuperellipticCurve curve_from_json(const Json& j) {
  std::optional<std::vector<Rational>> coeffs;
  if (j.contains("coeffs") && !j.at("coeffs").is_null()) {
    std::vector<Rational> cs;
    for (const auto& v : j.at("coeffs")) {
      if (v.is_string())
        cs.push_back(parse_rational(v.get<std::string>()));
      else if (v.is_number_integer())
        cs.emplace_back(BigInt(std::to_string(v.get<std::int64_t>())));
      else
        throw std::invalid_argument("coefficients must be integers or rational strings");
    }
    coeffs = std::move(cs);
  }
  const bool twisted = j.contains("twisted") && j.at("twisted").get<bool>();
  return curves::make_curve(require_int(j, "n"), require_int(j, "m"), require_int(j, "delta"), std::move(coeffs),
                            twisted);
}

Json to_json(const split::SplitCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["m"] = c.m;
  j["delta"] = c.delta;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["splits"] = c.splits;
  j["g"] = c.g;
  j["g1"] = c.g1;
  j["g2"] = c.g2;
  j["formula_extended"] = c.formula_extended;
  return j;
}

Json to_json(const arith::FactorMap& f) {
  Json j;
  j["n"] = f.n.get_str();
  Json factors = Json::array();
  for (const auto& pp : f.factors) factors.push_back({{"p", pp.prime.get_str()}, {"e", pp.exponent}});
  j["factors"] = factors;
  j["complete"] = f.complete;
  j["cofactor"] = f.cofactor ? Json(f.cofactor->get_str()) : Json(nullptr);
  return j;
}

arith::FactorMap factor_map_from_json(const Json& j) {
  arith::FactorMap f;
  f.n = big_from_json(require(j, "n"), "n");
  for (const auto& e : require(j, "factors")) {
    arith::PrimePower pp{big_from_json(require(e, "p"), "p"), 0};
    const std::int64_t exp = require_int(e, "e");
    if (exp < 1) throw std::invalid_argument("factor exponent must be positive");
    pp.exponent = static_cast<unsigned>(exp);
    f.factors.push_back(pp);
  }
  f.complete = require(j, "complete").get<bool>();
  if (j.contains("cofactor") && !j.at("cofactor").is_null()) f.cofactor = big_from_json(j.at("cofactor"), "cofactor");
  if (f.product() != f.n) throw std::invalid_argument("factorization does not multiply to n");
  return f;
}

arith::FactorMap parse_factor_string(std::string_view text) {
  text = trim(text);
  arith::FactorMap f;
  if (text == "1") return f;
  for (std::string_view term : split_on(text, '*')) {
    term = trim(term);
    if (term.empty()) throw std::invalid_argument("empty term in factorization");
    if (term.front() == '[') {
      if (term.back() != ']' || f.cofactor) throw std::invalid_argument("malformed cofactor term");
      f.cofactor = parse_bigint(term.substr(1, term.size() - 2));
      f.complete = false;
      continue;
    }
    if (f.cofactor) throw std::invalid_argument("cofactor must be the last term");
    auto caret = term.find('^');
    arith::PrimePower pp{parse_bigint(term.substr(0, caret)), 1};
    if (caret != std::string_view::npos) {
      BigInt e = parse_bigint(term.substr(caret + 1));
      if (e < 1 || !e.fits_uint_p()) throw std::invalid_argument("bad exponent in factorization");
      pp.exponent = static_cast<unsigned>(e.get_ui());
    }
    if (!f.factors.empty() && f.factors.back().prime >= pp.prime)
      throw std::invalid_argument("primes must be strictly increasing");
    if (!arith::is_probable_prime(pp.prime)) throw std::invalid_argument(pp.prime.get_str() + " is not prime");
    f.factors.push_back(pp);
  }
  f.n = f.product();
  return f;
}

Json to_json(const FamilySolution& s) {
  Json j;
  const bool unresolved = is_unresolved(s);
  j["s"] = s.s;
  j["m"] = unresolved ? Json(nullptr) : Json(s.m.get_str());
  j["r"] = unresolved ? Json(nullptr) : Json(s.r.get_str());
  j["witnessX"] = unresolved ? Json(nullptr) : Json(s.witness_x.get_str());
  j["status"] = family::to_string(s.status);
  j["factorization"] = s.factorization ? to_json(*s.factorization) : Json(nullptr);
  return j;
}

FamilySolution family_solution_from_json(const Json& j) {
  FamilySolution s;
  s.s = require_int(j, "s");
  s.status = family::solution_status_from_string(require(j, "status").get<std::string>());
  auto big_or_zero = [&](const char* key) {
    const Json& v = require(j, key);
    return v.is_null() ? BigInt(0) : big_from_json(v, key);
  };
  s.m = big_or_zero("m");
  s.r = big_or_zero("r");
  s.witness_x = big_or_zero("witnessX");
  if (j.contains("factorization") && !j.at("factorization").is_null())
    s.factorization = factor_map_from_json(j.at("factorization"));
  return s;
}

std::vector<FamilySolution> table_rows(const std::vector<family::SolveReport>& reports) {
  std::vector<FamilySolution> rows;
  for (const auto& rep : reports) {
    if (rep.status == SolutionStatus::unresolved_factoring) {
      rows.push_back({rep.s, 0, 0, 0, rep.factorization, SolutionStatus::unresolved_factoring});
      continue;
    }
    rows.insert(rows.end(), rep.solutions.begin(), rep.solutions.end());
  }
  return rows;
}

std::string render_table(const std::vector<FamilySolution>& rows) {
  std::string out = "s | m | r\n";
  for (const auto& row : rows) {
    out += std::to_string(row.s) + " | ";
    if (is_unresolved(row))
      out += "- | - | unresolved (factoring timeout)\n";
    else
      out += format_table_value(row.m) + " | " + format_table_value(row.r) + "\n";
  }
  return out;
}

Json rows_to_json(const std::vector<FamilySolution>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr;
}

std::vector<FamilySolution> rows_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of solutions");
  std::vector<FamilySolution> rows;
  for (const auto& e : j) rows.push_back(family_solution_from_json(e));
  return rows;
}

namespace {
constexpr std::string_view kCsvHeader = "s,m,r,witnessX,status,factorization";
}

std::string rows_to_csv(const std::vector<FamilySolution>& rows) {
  std::string out(kCsvHeader);
  out += "\n";
  for (const auto& row : rows) {
    const bool unresolved = is_unresolved(row);
    out += std::to_string(row.s) + ",";
    out += (unresolved ? "" : row.m.get_str()) + ",";
    out += (unresolved ? "" : row.r.get_str()) + ",";
    out += (unresolved ? "" : row.witness_x.get_str()) + ",";
    out += family::to_string(row.status) + ",";
    out += (row.factorization ? row.factorization->to_string() : "") + "\n";
  }
  return out;
}

std::vector<FamilySolution> rows_from_csv(std::string_view csv) {
  auto lines = split_on(csv, '\n');
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty() || trim(lines.front()) != kCsvHeader)
    throw std::invalid_argument("CSV must start with header '" + std::string(kCsvHeader) + "'");
  std::vector<FamilySolution> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_on(trim(lines[i]), ',');
    if (cells.size() != 6)
      throw std::invalid_argument("CSV line " + std::to_string(i + 1) + ": expected 6 fields");
    FamilySolution s;
    BigInt sv = parse_bigint(cells[0]);
    if (!fits_int64(sv)) throw std::invalid_argument("CSV line " + std::to_string(i + 1) + ": s out of range");
    s.s = to_int64(sv);
    s.status = family::solution_status_from_string(std::string(trim(cells[4])));
    auto cell = [](std::string_view c) { return trim(c).empty() ? BigInt(0) : parse_bigint(c); };
    s.m = cell(cells[1]);
    s.r = cell(cells[2]);
    s.witness_x = cell(cells[3]);
    if (!trim(cells[5]).empty()) s.factorization = parse_factor_string(cells[5]);
    rows.push_back(std::move(s));
  }
  return rows;
}

split::PartitionData partition_from_json(const Json& j) {
  split::PartitionData p;
  p.order_g = require_int(j, "order");
  p.g = require_int(j, "g");
  p.g0 = require_int(j, "g0");
  if (p.order_g < 1 || p.g < 0 || p.g0 < 0) throw std::invalid_argument("order must be positive, genera nonnegative");
  for (const auto& h : require(j, "subgroups")) p.subgroups.push_back({require_int(h, "order"), require_int(h, "genus")});
  if (j.contains("intersections")) {
    for (const auto& e : j.at("intersections")) {
      std::vector<int> idx = require(e, "indices").get<std::vector<int>>();
      std::sort(idx.begin(), idx.end());
      if (idx.size() < 2 || std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw std::invalid_argument("intersection indices must name at least two distinct subgroups");
      if (idx.front() < 0 || idx.back() >= static_cast<int>(p.subgroups.size()))
        throw std::invalid_argument("intersection index out of range");
      p.intersections[idx] = {require_int(e, "order"), require_int(e, "genus")};
    }
  }
  return p;
}

split::KaniRosenInput kani_rosen_from_json(const Json& j) {
  split::KaniRosenInput in;
  in.gij = require(j, "g").get<std::vector<std::vector<std::int64_t>>>();
  in.nvec = require(j, "n").get<std::vector<std::int64_t>>();
  return in;
}

Json to_json(const split::KaniRosenVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["quadratic"] = v.quadratic;
  j["linear"] = v.linear;
  j["product_shape"] = v.product_shape;
  j["statement"] = v.statement ? Json(*v.statement) : Json(nullptr);
  return j;
}

Json to_json(const groups::GroupPresentation& p) {
  Json j;
  j["name"] = p.name();
  j["tag"] = groups::to_string(p.tag);
  j["n"] = p.n;
  j["m"] = p.m;
  j["l"] = p.l ? Json(*p.l) : Json(nullptr);
  j["generators"] = p.generators;
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(r.text);
  j["relations"] = rels;
  j["expected_order"] = p.expected_order.get_str();
  return j;
}

}  // namespace supersplit::io
