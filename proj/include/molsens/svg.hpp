#pragma once

#include <filesystem>
#include <string>

#include "molsens/cone.hpp"
#include "molsens/polytope.hpp"

namespace molsens {

// SVG 1.1 sketch: polygon outline, highlighted chain (a dot for a
// singleton), the two cone generators as arrows from the centroid, and
// vertex labels v1 .. vn. Coordinates are printed with three decimals, so
// equal inputs give byte-identical documents.
std::string render_svg(const Polygon& polygon, const GradientCone& cone, const Chain& chain);

// Throws FileWriteError.
void emit_svg(const Polygon& polygon, const GradientCone& cone, const Chain& chain,
              const std::filesystem::path& path);

}  // namespace molsens
