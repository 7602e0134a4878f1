#pragma once

#include <vector>

#include "gaw/error.hpp"
#include "gaw/measures.hpp"

// Vector-scene model: ordered polylines in abstract page coordinates
// (conventionally millimetres, y growing downward as in SVG).

namespace gaw::geom {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  bool contains(const Point& p) const {
    return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
  }
};

// Throws invalid_argument unless x1 > x0 and y1 > y0 and all finite.
void validate_rect(const Rect& r, const char* what);

struct Polyline {
  std::vector<Point> points;
  bool closed = false; // emitters duplicate the first point at the end
};

struct Scene {
  double width = 0.0;
  double height = 0.0;
  double stroke_width = 0.5;
  std::vector<Polyline> strokes;

  Rect page() const { return Rect{0.0, 0.0, width, height}; }
};

// Clips one segment to a rectangle (Liang-Barsky). Returns false when the
// segment lies entirely outside.
bool clip_segment(const Rect& r, Point& a, Point& b);

// Clips a polyline to a rectangle. May split it into several open pieces;
// a closed polyline that survives untouched stays closed.
std::vector<Polyline> clip_polyline(const Polyline& pl, const Rect& r);

// Clips every stroke to the page rectangle, in place.
void clip_scene_to_page(Scene& scene);

// Editorial crop: strokes fully outside are dropped, the rest clipped; the
// crop rectangle becomes the new page with coordinates shifted to its origin.
Scene crop_scene(const Scene& scene, const Rect& crop);

// Coverage raster of the scene: cells crossed by any stroke get symbol 1,
// the rest 0 (alphabet 2). Segments are sampled at sub-cell steps.
measures::SymbolGrid rasterize(const Scene& scene, int cols, int rows);

} // namespace gaw::geom
