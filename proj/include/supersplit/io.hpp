#pragma once

// JSON and CSV forms of the domain types, and the s | m | r solution table.
// Big integers are written as decimal strings so no precision is lost.

#include "supersplit/arith.hpp"
#include "supersplit/curves.hpp"
#include "supersplit/family.hpp"
#include "supersplit/groups.hpp"
#include "supersplit/split.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace supersplit::io {

using Json = nlohmann::ordered_json;

/// "a", "-a" or "a/b" in decimal. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// {"n","m","delta","twisted","coeffs","genus","equation","formula_extended"};
/// coeffs are strings or null.
Json to_json(const curves::SuperellipticCurve& c);
/// Reads n, m, delta and the optional twisted/coeffs keys; derived keys are
/// ignored. Validates through curves::make_curve.
curves::SuperellipticCurve curve_from_json(const Json& j);

/// {"n","m","delta","lhs","rhs","splits","g","g1","g2","formula_extended"}.
Json to_json(const split::SplitCertificate& c);

/// {"n","factors":[{"p","e"}],"complete","cofactor"}.
Json to_json(const arith::FactorMap& f);
arith::FactorMap factor_map_from_json(const Json& j);
/// Inverse of FactorMap::to_string. Checks that every listed prime passes
/// the primality test; a bracketed term becomes the cofactor.
arith::FactorMap parse_factor_string(std::string_view text);

/// {"s","m","r","witnessX","status","factorization"}. m, r and witnessX are
/// null on unresolved rows.
Json to_json(const family::FamilySolution& s);
family::FamilySolution family_solution_from_json(const Json& j);

/// One row per solution; an unresolved report contributes a placeholder row
/// (m = r = witness_x = 0, status unresolved-factoring) carrying the partial
/// factorization. Exact reports without solutions contribute nothing.
std::vector<family::FamilySolution> table_rows(const std::vector<family::SolveReport>& reports);

/// Header "s | m | r", then "s | m | r" rows with values above 10^15 in
/// 5-digit scientific notation; unresolved rows read
/// "s | - | - | unresolved (factoring timeout)".
std::string render_table(const std::vector<family::FamilySolution>& rows);
Json rows_to_json(const std::vector<family::FamilySolution>& rows);
std::vector<family::FamilySolution> rows_from_json(const Json& j);

/// Header s,m,r,witnessX,status,factorization; empty cells for absent values.
std::string rows_to_csv(const std::vector<family::FamilySolution>& rows);
/// Throws std::invalid_argument on a malformed header or row.
std::vector<family::FamilySolution> rows_from_csv(std::string_view csv);

/// {"order","g","g0","subgroups":[{"order","genus"}],
///  "intersections":[{"indices":[...],"order","genus"}]}; indices are 0-based.
split::PartitionData partition_from_json(const Json& j);

/// {"g": square matrix, "n": vector}.
split::KaniRosenInput kani_rosen_from_json(const Json& j);
Json to_json(const split::KaniRosenVerdict& v);

/// {"name","tag","n","m","l","generators","relations","expected_order"}.
Json to_json(const groups::GroupPresentation& p);

}  // namespace supersplit::io
