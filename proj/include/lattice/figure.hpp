#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lattice/triangle_centers.hpp"

namespace lattice {

enum FigureLayer : unsigned {
  kLayerCircumcircle = 1u << 0,
  kLayerEulerLine = 1u << 1,
  kLayerCenters = 1u << 2,
  kLayerGrid = 1u << 3,
  kLayerLabels = 1u << 4,
  kLayerAll = (1u << 5) - 1,
};

struct FigureSpec {
  Triangle triangle;
  unsigned show = kLayerAll;
  // Canvas size in SVG user units.
  double width = 480.0;
  double height = 480.0;
};

/// Comma-separated subset of circumcircle, euler_line, centers, grid, labels
/// (or "all"). Throws std::invalid_argument on unknown names.
unsigned parse_layers(std::string_view list);

/// Triangles of the four reference drawings, numbered 1 to 4.
std::optional<Triangle> preset_figure(int number);

/// Deterministic SVG 1.1 document. Geometry is exact up to the final
/// coordinate emission, which uses fixed 6-decimal formatting.
/// Throws std::invalid_argument for a non-positive canvas.
std::string render_svg(const FigureSpec& spec);

}  // namespace lattice
