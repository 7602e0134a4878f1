#pragma once

#include <string>

#include "gaw/geometry.hpp"

// SVG 1.1 emission: black strokes, no fill, stroke order preserved.
// Coordinates are printed with exactly 4 decimal places so identical scenes
// serialize to identical bytes. Closed polylines are emitted with the first
// point duplicated at the end.

namespace gaw::svg {

std::string to_svg(const geom::Scene& scene);

void write_svg_file(const geom::Scene& scene, const std::string& path);

} // namespace gaw::svg
