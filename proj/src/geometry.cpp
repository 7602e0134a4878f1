#include "gaw/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace gaw::geom {

void validate_rect(const Rect& r, const char* what) {
  if (!(std::isfinite(r.x0) && std::isfinite(r.y0) && std::isfinite(r.x1) && std::isfinite(r.y1)))
    fail(ErrorCode::invalid_argument, std::string(what) + ": non-finite rectangle");
  if (!(r.x1 > r.x0) || !(r.y1 > r.y0))
    fail(ErrorCode::invalid_argument, std::string(what) + ": degenerate rectangle");
}

bool clip_segment(const Rect& r, Point& a, Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  double t0 = 0.0, t1 = 1.0;

  // Each page edge contributes a constraint numer + t*denom <= 0.
  auto clip_edge = [&](double denom, double numer) {
    if (denom == 0.0) return numer <= 0.0; // parallel: inside iff numer <= 0
    const double t = -numer / denom;
    if (denom < 0.0) { // entering
      if (t > t1) return false;
      if (t > t0) t0 = t;
    } else { // leaving
      if (t < t0) return false;
      if (t < t1) t1 = t;
    }
    return true;
  };

  if (!clip_edge(-dx, r.x0 - a.x)) return false;
  if (!clip_edge(dx, a.x - r.x1)) return false;
  if (!clip_edge(-dy, r.y0 - a.y)) return false;
  if (!clip_edge(dy, a.y - r.y1)) return false;

  const Point pa{a.x + t0 * dx, a.y + t0 * dy};
  const Point pb{a.x + t1 * dx, a.y + t1 * dy};
  a = pa;
  b = pb;
  return true;
}

std::vector<Polyline> clip_polyline(const Polyline& pl, const Rect& r) {
  if (pl.points.size() < 2) return {};

  bool all_inside = true;
  for (const Point& p : pl.points)
    if (!r.contains(p)) { all_inside = false; break; }
  if (all_inside) return {pl};

  // Walk the segment chain (including the closing segment when closed) and
  // stitch surviving clipped pieces back into runs.
  std::vector<Polyline> out;
  Polyline run;
  const std::size_t nseg = pl.points.size() - (pl.closed ? 0 : 1);
  for (std::size_t i = 0; i < nseg; ++i) {
    Point a = pl.points[i];
    Point b = pl.points[(i + 1) % pl.points.size()];
    if (!clip_segment(r, a, b)) {
      if (run.points.size() >= 2) out.push_back(std::move(run));
      run = Polyline{};
      continue;
    }
    if (!run.points.empty() &&
        run.points.back().x == a.x && run.points.back().y == a.y) {
      run.points.push_back(b);
    } else {
      if (run.points.size() >= 2) out.push_back(std::move(run));
      run = Polyline{{a, b}, false};
    }
  }
  if (run.points.size() >= 2) out.push_back(std::move(run));

  // a clipped ring is ink-continuous across vertex 0; merge the wrap-around
  if (pl.closed && out.size() >= 2) {
    Polyline& first = out.front();
    Polyline& last = out.back();
    const Point& seam_end = last.points.back();
    const Point& seam_start = first.points.front();
    if (seam_end.x == seam_start.x && seam_end.y == seam_start.y) {
      last.points.insert(last.points.end(), first.points.begin() + 1, first.points.end());
      first = std::move(last);
      out.pop_back();
    }
  }
  return out;
}

void clip_scene_to_page(Scene& scene) {
  validate_rect(scene.page(), "page");
  std::vector<Polyline> clipped;
  clipped.reserve(scene.strokes.size());
  for (const Polyline& pl : scene.strokes)
    for (Polyline& piece : clip_polyline(pl, scene.page()))
      clipped.push_back(std::move(piece));
  scene.strokes = std::move(clipped);
}

Scene crop_scene(const Scene& scene, const Rect& crop) {
  validate_rect(crop, "crop");
  Scene out;
  out.width = crop.width();
  out.height = crop.height();
  out.stroke_width = scene.stroke_width;
  for (const Polyline& pl : scene.strokes) {
    for (Polyline piece : clip_polyline(pl, crop)) {
      for (Point& p : piece.points) {
        p.x -= crop.x0;
        p.y -= crop.y0;
      }
      out.strokes.push_back(std::move(piece));
    }
  }
  return out;
}

measures::SymbolGrid rasterize(const Scene& scene, int cols, int rows) {
  if (cols < 1 || rows < 1)
    fail(ErrorCode::invalid_argument, "raster dimensions must be positive");
  validate_rect(scene.page(), "page");

  measures::SymbolGrid g;
  g.width = cols;
  g.height = rows;
  g.alphabet = 2;
  g.cells.assign(static_cast<std::size_t>(cols) * rows, 0);

  const double cw = scene.width / cols;
  const double ch = scene.height / rows;
  const double step = 0.5 * std::min(cw, ch);

  auto mark = [&](double x, double y) {
    int cx = static_cast<int>(x / cw);
    int cy = static_cast<int>(y / ch);
    cx = std::clamp(cx, 0, cols - 1);
    cy = std::clamp(cy, 0, rows - 1);
    g.cells[static_cast<std::size_t>(cy) * cols + cx] = 1;
  };

  for (const Polyline& pl : scene.strokes) {
    if (pl.points.size() < 2) continue;
    const std::size_t nseg = pl.points.size() - (pl.closed ? 0 : 1);
    for (std::size_t i = 0; i < nseg; ++i) {
      const Point& a = pl.points[i];
      const Point& b = pl.points[(i + 1) % pl.points.size()];
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      const int samples = std::max(1, static_cast<int>(std::ceil(len / step)));
      for (int s = 0; s <= samples; ++s) {
        const double t = static_cast<double>(s) / samples;
        mark(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
      }
    }
  }
  return g;
}

} // namespace gaw::geom
