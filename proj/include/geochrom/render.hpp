#pragma once

#include <string>

#include "geochrom/graph.hpp"

namespace geochrom::render {

/// "#rrggbb" for a 1-based color index; golden-angle hue steps keep
/// neighbouring indices apart.
std::string palette(int color);

/// SVG 1.1 drawing: one <line> per colored edge, one labelled circle per
/// vertex. Throws MalformedColoring for an empty or inconsistent coloring.
std::string render_svg(const PointSet& s, const Coloring& c);

}  // namespace geochrom::render
