#include "lattice/report_io.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace lattice {

namespace {

std::string antecedent_label(std::uint8_t mask) {
  std::string out = "{";
  bool first = true;
  for (Condition c : kAllConditions) {
    if (!(mask & bit(c))) continue;
    if (!first) out += ",";
    out += short_name(c);
    first = false;
  }
  return out + "}";
}

Json names_of(std::uint8_t mask) {
  Json arr = Json::array();
  for (Condition c : kAllConditions) {
    if (mask & bit(c)) arr.push_back(std::string(short_name(c)));
  }
  return arr;
}

std::string point_text(const LatticePoint& p) {
  return "(" + p.x.to_string() + "," + p.y.to_string() + ")";
}

// Code points, which is the terminal width for the glyphs used here.
std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char ch : s) {
    if ((ch & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace

std::string compact(const Triangle& t) {
  if (t.v3() == LatticePoint{}) return "O," + point_text(t.v1()) + "," + point_text(t.v2());
  return point_text(t.v1()) + "," + point_text(t.v2()) + "," + point_text(t.v3());
}

Json to_json(const Rational& r) { return Json{{"num", r.num().to_string()}, {"den", r.den().to_string()}}; }

Json to_json(const RationalPoint& p) { return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

Json to_json(const LatticePoint& p) { return Json::array({p.x.to_int64(), p.y.to_int64()}); }

Json to_json(const Triangle& t) { return Json::array({to_json(t.v1()), to_json(t.v2()), to_json(t.v3())}); }

Json to_json(const RationalLine& line) {
  return Json{{"a", line.a.to_int64()}, {"b", line.b.to_int64()}, {"c", line.c.to_int64()}};
}

Json to_json(const ConditionVector& cv) {
  Json j = Json::object();
  for (Condition c : kAllConditions) j[std::string(long_name(c))] = cv.get(c);
  return j;
}

Rational rational_from_json(const Json& j) {
  return Rational(Integer::parse(j.at("num").get<std::string>()), Integer::parse(j.at("den").get<std::string>()));
}

RationalPoint rational_point_from_json(const Json& j) {
  return {rational_from_json(j.at("x")), rational_from_json(j.at("y"))};
}

CentersReport compute_centers(const Triangle& t) {
  CentersReport r{t,
                  circumcenter(t),
                  centroid(t),
                  orthocenter(t),
                  area_twice(t),
                  circumradius_squared(t),
                  std::nullopt,
                  std::nullopt,
                  false};
  if (r.circumradius_squared.is_integer()) r.circumradius = int_sqrt_exact(r.circumradius_squared.num());
  if (!(r.circumcenter == r.centroid)) {
    r.euler_line = line_through(r.circumcenter, r.centroid);
    r.euler_line_has_lattice_point = lattice_point_on(*r.euler_line).has_value();
  }
  return r;
}

Json to_json(const CentersReport& r) {
  Json j;
  j["triangle"] = to_json(r.triangle);
  j["F"] = to_json(r.circumcenter);
  j["G"] = to_json(r.centroid);
  j["H"] = to_json(r.orthocenter);
  j["area2"] = r.area_twice.to_int64();
  j["area"] = to_json(Rational(r.area_twice, 2));
  j["R2"] = to_json(r.circumradius_squared);
  j["R"] = r.circumradius ? Json(r.circumradius->to_string()) : Json(nullptr);
  j["euler_line"] = r.euler_line ? to_json(*r.euler_line) : Json(nullptr);
  j["euler_line_lattice_point"] = r.euler_line_has_lattice_point;
  return j;
}

void write_text(std::ostream& os, const CentersReport& r) {
  os << "triangle " << compact(r.triangle) << '\n';
  os << "F = " << r.circumcenter.x << ',' << r.circumcenter.y << '\n';
  os << "G = " << r.centroid.x << ',' << r.centroid.y << '\n';
  os << "H = " << r.orthocenter.x << ',' << r.orthocenter.y << '\n';
  os << "area = " << Rational(r.area_twice, 2) << '\n';
  os << "R^2 = " << r.circumradius_squared << '\n';
  os << "R = " << (r.circumradius ? r.circumradius->to_string() : "not an integer") << '\n';
  if (r.euler_line) {
    const RationalLine& l = *r.euler_line;
    os << "euler line: ";
    if (!l.a.is_zero()) os << l.a << "x";
    if (!l.b.is_zero()) {
      if (!l.a.is_zero()) os << (l.b.sign() < 0 ? " - " : " + ") << abs(l.b) << "y";
      else os << l.b << "y";
    }
    os << " = " << l.c << (r.euler_line_has_lattice_point ? "" : " (contains no lattice points)") << '\n';
  } else {
    os << "euler line: undefined\n";
  }
}

void write_csv(std::ostream& os, const CentersReport& r) {
  os << "Fx,Fy,Gx,Gy,Hx,Hy,area2,R2,R,a,b,c\n";
  os << r.circumcenter.x << ',' << r.circumcenter.y << ',' << r.centroid.x << ',' << r.centroid.y << ','
     << r.orthocenter.x << ',' << r.orthocenter.y << ',' << r.area_twice << ',' << r.circumradius_squared << ','
     << (r.circumradius ? r.circumradius->to_string() : "") << ',';
  if (r.euler_line) {
    os << r.euler_line->a << ',' << r.euler_line->b << ',' << r.euler_line->c << '\n';
  } else {
    os << ",,\n";
  }
}

Json classify_json(const Triangle& t) {
  const ConditionVector cv = classify(t);
  Json j;
  j["triangle"] = to_json(t);
  j["bits"] = cv.to_bitstring();
  j["flags"] = to_json(cv);
  j["primitive_gcd"] = primitive_gcd(t).to_int64();
  return j;
}

Json to_json(const VerificationReport& r, bool with_timing) {
  Json j;
  j["theorem_id"] = std::string(to_string(r.theorem_id));
  j["statement"] = std::string(describe(r.theorem_id));
  j["bound"] = r.bound;
  j["triangles_checked"] = r.triangles_checked;
  j["antecedent_count"] = r.antecedent_count;
  j["status"] = r.holds() ? "PASS" : "FAIL";
  j["counterexample"] = r.counterexample ? to_json(*r.counterexample) : Json(nullptr);
  if (with_timing) {
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  }
  return j;
}

Json to_json(const std::vector<VerificationReport>& reports, bool with_timing) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, with_timing));
  return arr;
}

void write_text(std::ostream& os, const std::vector<VerificationReport>& reports, bool with_timing) {
  for (const auto& r : reports) {
    os << (r.holds() ? "PASS " : "FAIL ") << std::left << std::setw(12) << to_string(r.theorem_id)
       << std::right << "bound=" << r.bound << " checked=" << r.triangles_checked
       << " antecedent=" << r.antecedent_count;
    if (r.counterexample) os << " counterexample=" << compact(*r.counterexample);
    if (with_timing) {
      os << " elapsed_ms=" << std::fixed << std::setprecision(1)
         << std::chrono::duration<double, std::milli>(r.elapsed).count() << std::defaultfloat;
    }
    os << "  [" << describe(r.theorem_id) << "]\n";
  }
}

void write_csv(std::ostream& os, const std::vector<VerificationReport>& reports, bool with_timing) {
  os << "theorem_id,bound,triangles_checked,antecedent_count,status,counterexample";
  if (with_timing) os << ",elapsed_ms";
  os << '\n';
  for (const auto& r : reports) {
    os << to_string(r.theorem_id) << ',' << r.bound << ',' << r.triangles_checked << ',' << r.antecedent_count
       << ',' << (r.holds() ? "PASS" : "FAIL") << ",\""
       << (r.counterexample ? compact(*r.counterexample) : std::string()) << '"';
    if (with_timing) os << ',' << std::chrono::duration<double, std::milli>(r.elapsed).count();
    os << '\n';
  }
}

Json to_json(const ImplicationTable& table) {
  Json j;
  j["bound"] = table.bound();
  j["dedupe"] = table.dedupe();
  j["triangles_checked"] = table.triangles_checked();
  Json names = Json::array();
  for (Condition c : kAllConditions) names.push_back(std::string(short_name(c)));
  j["conditions"] = names;
  Json entries = Json::array();
  for (const auto& e : table.entries()) {
    Json row;
    row["antecedent"] = names_of(e.antecedent);
    row["antecedent_mask"] = mask_to_bitstring(e.antecedent);
    row["consequent"] = std::string(short_name(e.consequent));
    row["status"] = std::string(to_string(e.status));
    row["witness"] = e.witness ? to_json(*e.witness) : Json(nullptr);
    row["antecedent_satisfiable_count"] = e.antecedent_satisfiable_count;
    row["proved"] = e.proved;
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

void write_text(std::ostream& os, const ImplicationTable& table) {
  os << "implication table, bound " << table.bound() << (table.dedupe() ? " (orbit representatives)" : "")
     << ", " << table.triangles_checked() << " triangles\n";
  os << "rows: antecedent; columns: consequent.  ✓ holds up to bound, ✓* proved theorem, "
        "✗n refuted by witness n, ∅ antecedent never satisfied, · in antecedent\n\n";
  os << std::left << std::setw(24) << "antecedent";
  for (Condition c : kAllConditions) os << std::setw(7) << short_name(c);
  os << '\n';

  std::map<std::string, int> witness_ids;
  std::vector<std::string> witness_list;
  for (unsigned a = 0; a < ImplicationTable::kMaskCount; ++a) {
    const auto mask = static_cast<std::uint8_t>(a);
    os << std::setw(24) << antecedent_label(mask);
    for (Condition c : kAllConditions) {
      std::string cell;
      if (mask & bit(c)) {
        cell = "·";
      } else {
        const ImplicationEntry& e = table.entry(mask, c);
        switch (e.status) {
          case EntryStatus::kHoldsUpToBound: cell = e.proved ? "✓*" : "✓"; break;
          case EntryStatus::kVacuousUpToBound: cell = "∅"; break;
          case EntryStatus::kRefuted: {
            const std::string w = compact(*e.witness);
            auto [it, inserted] = witness_ids.try_emplace(w, static_cast<int>(witness_list.size()) + 1);
            if (inserted) witness_list.push_back(w);
            cell = "✗" + std::to_string(it->second);
            break;
          }
        }
      }
      os << cell << std::string(7 - display_width(cell), ' ');
    }
    os << '\n';
  }
  os << std::right << "\nwitnesses:\n";
  for (std::size_t i = 0; i < witness_list.size(); ++i) os << "  " << (i + 1) << ": " << witness_list[i] << '\n';
}

void write_csv(std::ostream& os, const ImplicationTable& table) {
  os << "antecedent,consequent,status,witness,antecedent_satisfiable_count,proved\n";
  for (const auto& e : table.entries()) {
    os << mask_to_bitstring(e.antecedent) << ',' << short_name(e.consequent) << ',' << to_string(e.status) << ",\""
       << (e.witness ? compact(*e.witness) : std::string()) << "\"," << e.antecedent_satisfiable_count << ','
       << (e.proved ? "true" : "false") << '\n';
  }
}

}  // namespace lattice
