#include "lattice/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace lattice {

namespace {

Integer floor_of(const Rational& r) { return floor_div(r.num(), r.den()); }
Integer ceil_of(const Rational& r) { return -floor_div(-r.num(), r.den()); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct View {
  Integer xmin, xmax, ymin, ymax;
  double scale = 1.0;
  double ox = 0.0;
  double oy = 0.0;

  double px(const Rational& v) const { return ox + scale * (v - Rational(xmin)).to_double(); }
  double py(const Rational& v) const { return oy + scale * (Rational(ymax) - v).to_double(); }
  std::string x(const Rational& v) const { return fmt(px(v)); }
  std::string y(const Rational& v) const { return fmt(py(v)); }
};

// Clips a*x + b*y = c to the view rectangle, exactly.
std::optional<std::pair<RationalPoint, RationalPoint>> clip(const RationalLine& line, const View& v) {
  std::vector<RationalPoint> hits;
  auto in_x = [&](const Rational& x) { return Rational(v.xmin) <= x && x <= Rational(v.xmax); };
  auto in_y = [&](const Rational& y) { return Rational(v.ymin) <= y && y <= Rational(v.ymax); };
  if (!line.b.is_zero()) {
    for (Integer x : {v.xmin, v.xmax}) {
      Rational y(line.c - line.a * x, line.b);
      if (in_y(y)) hits.push_back({Rational(x), y});
    }
  }
  if (!line.a.is_zero()) {
    for (Integer y : {v.ymin, v.ymax}) {
      Rational x(line.c - line.b * y, line.a);
      if (in_x(x)) hits.push_back({x, Rational(y)});
    }
  }
  if (hits.size() < 2) return std::nullopt;
  auto less = [](const RationalPoint& p, const RationalPoint& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  };
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(), less);
  if (*lo == *hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

std::string vertex_label(const LatticePoint& p, int index) {
  if (p == LatticePoint{}) return "O";
  return "v" + std::to_string(index);
}

}  // namespace

unsigned parse_layers(std::string_view list) {
  unsigned layers = 0;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view name = list.substr(start, end - start);
    if (name == "all") {
      layers |= kLayerAll;
    } else if (name == "circumcircle") {
      layers |= kLayerCircumcircle;
    } else if (name == "euler_line") {
      layers |= kLayerEulerLine;
    } else if (name == "centers") {
      layers |= kLayerCenters;
    } else if (name == "grid") {
      layers |= kLayerGrid;
    } else if (name == "labels") {
      layers |= kLayerLabels;
    } else if (!name.empty()) {
      throw std::invalid_argument("unknown figure layer '" + std::string(name) + "'");
    }
    start = end + 1;
  }
  return layers;
}

std::optional<Triangle> preset_figure(int number) {
  switch (number) {
    case 1: return Triangle::at_origin({2, 0}, {2, 3});
    case 2: return Triangle::at_origin({12, 0}, {12, 18});
    case 3: return Triangle::at_origin({4, 2}, {1, 5});
    case 4: return Triangle::at_origin({6, 0}, {8, 4});
    default: return std::nullopt;
  }
}

std::string render_svg(const FigureSpec& spec) {
  if (!(spec.width > 0.0) || !(spec.height > 0.0)) throw std::invalid_argument("figure canvas must be positive");
  const Triangle& t = spec.triangle;
  const RationalPoint f = circumcenter(t);
  const RationalPoint g = centroid(t);
  const RationalPoint h = orthocenter(t);
  const Rational r2 = circumradius_squared(t);

  std::vector<RationalPoint> extent;
  for (const auto& v : t.vertices()) extent.push_back(to_rational(v));
  if (spec.show & kLayerCenters) extent.insert(extent.end(), {f, g, h});
  if (spec.show & kLayerCircumcircle) {
    // Integer upper bound on R keeps the box exact.
    const Integer r_up = int_sqrt_floor(ceil_of(r2)) + Integer(1);
    extent.push_back({f.x - Rational(r_up), f.y - Rational(r_up)});
    extent.push_back({f.x + Rational(r_up), f.y + Rational(r_up)});
  }

  View view;
  view.xmin = view.xmax = floor_of(extent.front().x);
  view.ymin = view.ymax = floor_of(extent.front().y);
  for (const auto& p : extent) {
    view.xmin = std::min(view.xmin, floor_of(p.x));
    view.xmax = std::max(view.xmax, ceil_of(p.x));
    view.ymin = std::min(view.ymin, floor_of(p.y));
    view.ymax = std::max(view.ymax, ceil_of(p.y));
  }
  view.xmin -= Integer(1);
  view.ymin -= Integer(1);
  view.xmax += Integer(1);
  view.ymax += Integer(1);
  const double span_x = (view.xmax - view.xmin).to_double();
  const double span_y = (view.ymax - view.ymin).to_double();
  view.scale = std::min(spec.width / span_x, spec.height / span_y);
  view.ox = (spec.width - view.scale * span_x) / 2.0;
  view.oy = (spec.height - view.scale * span_y) / 2.0;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(spec.width)
      << "\" height=\"" << fmt(spec.height) << "\" viewBox=\"0 0 " << fmt(spec.width) << ' ' << fmt(spec.height)
      << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << fmt(spec.width) << "\" height=\"" << fmt(spec.height)
      << "\" fill=\"white\"/>\n";

  const Rational x0(view.xmin), x1(view.xmax), y0(view.ymin), y1(view.ymax);
  if (spec.show & kLayerGrid) {
    svg << "<g stroke=\"#888888\" stroke-width=\"0.8\" stroke-dasharray=\"1,3\">\n";
    for (Integer i = view.xmin; i <= view.xmax; i += Integer(1)) {
      svg << "<line x1=\"" << view.x(i) << "\" y1=\"" << view.y(y0) << "\" x2=\"" << view.x(i) << "\" y2=\""
          << view.y(y1) << "\"/>\n";
    }
    for (Integer j = view.ymin; j <= view.ymax; j += Integer(1)) {
      svg << "<line x1=\"" << view.x(x0) << "\" y1=\"" << view.y(j) << "\" x2=\"" << view.x(x1) << "\" y2=\""
          << view.y(j) << "\"/>\n";
    }
    svg << "</g>\n";
  }

  // Axes through the origin.
  svg << "<g stroke=\"black\" stroke-width=\"1.2\">\n";
  svg << "<line x1=\"" << view.x(x0) << "\" y1=\"" << view.y(0) << "\" x2=\"" << view.x(x1) << "\" y2=\""
      << view.y(0) << "\"/>\n";
  svg << "<line x1=\"" << view.x(0) << "\" y1=\"" << view.y(y0) << "\" x2=\"" << view.x(0) << "\" y2=\""
      << view.y(y1) << "\"/>\n";
  svg << "</g>\n";

  svg << "<polygon points=\"";
  for (std::size_t i = 0; i < 3; ++i) {
    const RationalPoint p = to_rational(t.vertices()[i]);
    svg << (i ? " " : "") << view.x(p.x) << ',' << view.y(p.y);
  }
  svg << "\" fill=\"#cfdcff\" stroke=\"#1f3fbf\" stroke-width=\"1.5\"/>\n";

  if (spec.show & kLayerCircumcircle) {
    // The radius is the only irrational quantity; it is rounded here for display.
    svg << "<circle cx=\"" << view.x(f.x) << "\" cy=\"" << view.y(f.y) << "\" r=\""
        << fmt(view.scale * std::sqrt(r2.to_double())) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
  }

  if ((spec.show & kLayerEulerLine) && !(f == g)) {
    if (auto seg = clip(line_through(f, g), view)) {
      svg << "<line x1=\"" << view.x(seg->first.x) << "\" y1=\"" << view.y(seg->first.y) << "\" x2=\""
          << view.x(seg->second.x) << "\" y2=\"" << view.y(seg->second.y)
          << "\" stroke=\"#1f3fbf\" stroke-width=\"2\"/>\n";
    }
  }

  svg << "<g fill=\"black\">\n";
  for (const auto& v : t.vertices()) {
    const RationalPoint p = to_rational(v);
    svg << "<circle cx=\"" << view.x(p.x) << "\" cy=\"" << view.y(p.y) << "\" r=\"3.000000\"/>\n";
  }
  if (spec.show & kLayerCenters) {
    for (const RationalPoint* p : {&f, &g, &h}) {
      svg << "<circle cx=\"" << view.x(p->x) << "\" cy=\"" << view.y(p->y) << "\" r=\"3.000000\"/>\n";
    }
  }
  svg << "</g>\n";

  if (spec.show & kLayerLabels) {
    svg << "<g font-family=\"serif\" font-size=\"14\" font-style=\"italic\">\n";
    auto label = [&](const RationalPoint& p, const std::string& text) {
      svg << "<text x=\"" << fmt(view.px(p.x) + 6.0) << "\" y=\"" << fmt(view.py(p.y) - 6.0)
          << "\">" << text << "</text>\n";
    };
    for (int i = 0; i < 3; ++i) label(to_rational(t.vertices()[i]), vertex_label(t.vertices()[i], i + 1));
    if (spec.show & kLayerCenters) {
      label(f, "F");
      label(g, "G");
      label(h, "H");
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lattice
