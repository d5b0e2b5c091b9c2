#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lattice/analysis.hpp"
#include "lattice/cli.hpp"
#include "lattice/enumeration.hpp"
#include "lattice/figure.hpp"
#include "lattice/flag_expr.hpp"
#include "lattice/report_io.hpp"

namespace lattice::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { kText, kJson, kCsv };

struct Globals {
  Format format = Format::kText;
  std::string out;
  unsigned threads = 1;
  std::int64_t bound = 10;
  bool dedupe = false;
  bool primitive = false;
  bool timing = false;
};

Triangle parse_triangle(const std::vector<std::string>& coords) {
  if (coords.size() != 6) throw UsageError("expected six integers x1 y1 x2 y2 x3 y3");
  std::vector<Integer> v;
  for (const auto& c : coords) {
    try {
      v.push_back(Integer::parse(c));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return Triangle({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]});
}

void write_to(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write(file);
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

void print_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

int cmd_centers(const Globals& g, const std::vector<std::string>& coords, std::ostream& out) {
  const CentersReport r = compute_centers(parse_triangle(coords));
  write_to(g.out, out, [&](std::ostream& os) {
    switch (g.format) {
      case Format::kText: write_text(os, r); break;
      case Format::kJson: print_json(os, to_json(r)); break;
      case Format::kCsv: write_csv(os, r); break;
    }
  });
  return kOk;
}

int cmd_classify(const Globals& g, const std::vector<std::string>& coords, std::ostream& out) {
  const Triangle t = parse_triangle(coords);
  const ConditionVector cv = classify(t);
  write_to(g.out, out, [&](std::ostream& os) {
    switch (g.format) {
      case Format::kText:
        os << "triangle " << compact(t) << '\n';
        os << "bits (f g h r area even) = " << cv.to_bitstring() << '\n';
        for (Condition c : kAllConditions) {
          os << "  " << long_name(c) << " = " << (cv.get(c) ? "true" : "false") << '\n';
        }
        os << "primitive_gcd = " << primitive_gcd(t) << '\n';
        break;
      case Format::kJson: print_json(os, classify_json(t)); break;
      case Format::kCsv:
        os << "bits,f_lattice,g_lattice,h_lattice,circumradius_integer,area_integer,even_side_sums,primitive_gcd\n";
        os << cv.to_bitstring();
        for (Condition c : kAllConditions) os << ',' << (cv.get(c) ? 1 : 0);
        os << ',' << primitive_gcd(t) << '\n';
        break;
    }
  });
  return kOk;
}

int cmd_scan(const Globals& g, const std::string& where, std::size_t limit, std::ostream& out) {
  const FlagFilter filter = FlagFilter::parse(where);
  const EnumSpec spec{g.bound, g.primitive, g.dedupe};
  write_to(g.out, out, [&](std::ostream& os) {
    Json rows = Json::array();
    if (g.format == Format::kCsv) os << "x1,y1,x2,y2,x3,y3,bits\n";
    std::size_t found = 0;
    enumerate(spec, [&](const Triangle& t) {
      const ConditionVector cv = classify(t);
      if (!filter.matches(cv)) return true;
      ++found;
      switch (g.format) {
        case Format::kText: os << compact(t) << "  " << cv.to_bitstring() << '\n'; break;
        case Format::kJson: rows.push_back(Json{{"triangle", to_json(t)}, {"bits", cv.to_bitstring()}}); break;
        case Format::kCsv:
          for (const auto& v : t.vertices()) os << v.x << ',' << v.y << ',';
          os << cv.to_bitstring() << '\n';
          break;
      }
      return limit == 0 || found < limit;
    });
    if (g.format == Format::kJson) print_json(os, rows);
  });
  return kOk;
}

int cmd_verify(const Globals& g, std::ostream& out) {
  const auto reports = verify_all(g.bound, {g.threads, g.dedupe, g.primitive});
  write_to(g.out, out, [&](std::ostream& os) {
    switch (g.format) {
      case Format::kText: write_text(os, reports, g.timing); break;
      case Format::kJson: print_json(os, to_json(reports, g.timing)); break;
      case Format::kCsv: write_csv(os, reports, g.timing); break;
    }
  });
  for (const auto& r : reports) {
    if (!r.holds()) return kCounterexample;
  }
  return kOk;
}

int cmd_implications(const Globals& g, std::ostream& out) {
  const ImplicationTable table = mine_implications(g.bound, {g.threads, g.dedupe, g.primitive});
  write_to(g.out, out, [&](std::ostream& os) {
    switch (g.format) {
      case Format::kText: write_text(os, table); break;
      case Format::kJson: print_json(os, to_json(table)); break;
      case Format::kCsv: write_csv(os, table); break;
    }
  });
  return kOk;
}

int cmd_figure(const Globals& g, int preset, const std::vector<std::string>& coords, const std::string& show,
               double width, double height, std::ostream& out) {
  std::optional<Triangle> t;
  if (preset != 0) {
    if (!coords.empty()) throw UsageError("give either --fig or six coordinates, not both");
    t = preset_figure(preset);
    if (!t) throw UsageError("--fig must be 1, 2, 3 or 4");
  } else {
    t = parse_triangle(coords);
  }
  FigureSpec spec{*t, parse_layers(show), width, height};
  const std::string svg = render_svg(spec);
  write_to(g.out, out, [&](std::ostream& os) { os << svg; });
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact centers, conditions and implication mining for lattice triangles", "lattri"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  app.add_option("--format", g.format, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->type_name("text|json|csv");
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--threads", g.threads, "Worker threads for verify/implications")->check(CLI::Range(1u, 1024u));
  app.add_option("--bound", g.bound, "Coordinate bound B: v1, v2 range over [-B,B]^2")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000}));
  app.add_flag("--dedupe", g.dedupe, "Only one representative per symmetry orbit");
  app.add_flag("--primitive", g.primitive, "Only triangles whose side-vector coordinates have gcd 1");
  app.add_flag("--timing", g.timing, "Include elapsed times in verify output");

  std::vector<std::string> coords;
  auto* centers = app.add_subcommand("centers", "Exact F, G, H, area, circumradius and Euler line");
  centers->add_option("coords", coords, "x1 y1 x2 y2 x3 y3")->required();

  auto* classify_cmd = app.add_subcommand("classify", "The six conditions and primitive gcd");
  classify_cmd->add_option("coords", coords, "x1 y1 x2 y2 x3 y3")->required();

  std::string where = "true";
  std::size_t limit = 0;
  auto* scan = app.add_subcommand("scan", "Stream enumerated triangles matching a flag expression");
  scan->add_option("--where", where, "Expression over f, g, h, r, area, even with &, |, ! and parentheses");
  scan->add_option("--limit", limit, "Stop after this many matches (0: no limit)");

  auto* verify_cmd = app.add_subcommand("verify", "Check the five proved implications up to the bound");
  auto* implications = app.add_subcommand("implications", "Mine the 192-entry implication table");

  int preset = 0;
  std::string show = "all";
  double width = 480.0;
  double height = 480.0;
  auto* figure = app.add_subcommand("figure", "Emit an SVG drawing of a triangle and its Euler line");
  figure->add_option("coords", coords, "x1 y1 x2 y2 x3 y3");
  figure->add_option("--fig", preset, "One of the reference drawings 1-4");
  figure->add_option("--show", show, "Layers: circumcircle,euler_line,centers,grid,labels or all");
  figure->add_option("--width", width, "Canvas width")->check(CLI::PositiveNumber);
  figure->add_option("--height", height, "Canvas height")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*centers) return cmd_centers(g, coords, out);
    if (*classify_cmd) return cmd_classify(g, coords, out);
    if (*scan) return cmd_scan(g, where, limit, out);
    if (*verify_cmd) return cmd_verify(g, out);
    if (*implications) return cmd_implications(g, out);
    if (*figure) return cmd_figure(g, preset, coords, show, width, height, out);
  } catch (const DegenerateTriangleError& e) {
    err << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const OverflowError& e) {
    err << "error: arithmetic overflow: " << e.what() << '\n';
    return kOverflow;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace lattice::cli
