#pragma once

/**
 * \file
 * JSON, CSV and plain-text renderings of centers, condition vectors,
 * verification reports and implication tables.
 *
 * JSON objects keep insertion order so output is byte-stable. Rationals are
 * written as {"num": "...", "den": "..."} with decimal strings.
 */

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lattice/analysis.hpp"
#include "lattice/conditions.hpp"
#include "lattice/triangle_centers.hpp"

namespace lattice {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const RationalPoint& p);
Json to_json(const LatticePoint& p);
Json to_json(const Triangle& t);
Json to_json(const RationalLine& line);
Json to_json(const ConditionVector& cv);

/// Throws nlohmann::json::exception or std::invalid_argument on malformed input.
Rational rational_from_json(const Json& j);
RationalPoint rational_point_from_json(const Json& j);

/// Every exact quantity of one triangle, as reported by `centers`.
struct CentersReport {
  Triangle triangle;
  RationalPoint circumcenter;
  RationalPoint centroid;
  RationalPoint orthocenter;
  Integer area_twice;
  Rational circumradius_squared;
  std::optional<Integer> circumradius;  // when R is an integer
  std::optional<RationalLine> euler_line;
  bool euler_line_has_lattice_point = false;
};

CentersReport compute_centers(const Triangle& t);

Json to_json(const CentersReport& r);
void write_text(std::ostream& os, const CentersReport& r);
void write_csv(std::ostream& os, const CentersReport& r);

Json classify_json(const Triangle& t);

/// `with_timing` adds elapsed_ms, which makes the output run-dependent.
Json to_json(const VerificationReport& r, bool with_timing = false);
Json to_json(const std::vector<VerificationReport>& reports, bool with_timing = false);
void write_text(std::ostream& os, const std::vector<VerificationReport>& reports, bool with_timing = false);
void write_csv(std::ostream& os, const std::vector<VerificationReport>& reports, bool with_timing = false);

Json to_json(const ImplicationTable& table);
/// 64 antecedent rows by 6 consequent columns: "✓" holds, "✗" refuted
/// (witness listed), "∅" vacuous, "·" consequent is in the antecedent.
void write_text(std::ostream& os, const ImplicationTable& table);
void write_csv(std::ostream& os, const ImplicationTable& table);

/// "O,(2,0),(2,3)" style when v3 is the origin, "(a,b),(c,d),(e,f)" otherwise.
std::string compact(const Triangle& t);

}  // namespace lattice
