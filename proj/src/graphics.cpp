#include "gaw/graphics.hpp"

#include <algorithm>
#include <cmath>

namespace gaw::graphics {

namespace {
constexpr double kPi = 3.14159265358979323846;

double uniform_in(rng::State& rng, double lo, double hi) {
  return lo + rng::next_unit(rng) * (hi - lo);
}
} // namespace

void validate_page(const PageSpec& page) {
  if (!(page.stroke_width > 0.0))
    fail(ErrorCode::invalid_argument, "stroke width must be positive");
  if (page.margin < 0.0)
    fail(ErrorCode::invalid_argument, "margin must be non-negative");
  geom::validate_rect(page.frame(), "page frame");
}

geom::Polyline ncorner(int n, const geom::Rect& frame, rng::State& rng) {
  if (n < 3)
    fail(ErrorCode::invalid_argument,
         "n-corner needs n >= 3, got " + std::to_string(n));
  geom::validate_rect(frame, "n-corner frame");
  geom::Polyline pl;
  pl.closed = true;
  pl.points.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = uniform_in(rng, frame.x0, frame.x1);
    const double y = uniform_in(rng, frame.y0, frame.y1);
    pl.points.push_back({x, y});
  }
  return pl;
}

geom::Scene ncorner_scene(int n, const PageSpec& page, rng::State& rng) {
  validate_page(page);
  geom::Scene scene{page.width, page.height, page.stroke_width, {}};
  scene.strokes.push_back(ncorner(n, page.frame(), rng));
  geom::clip_scene_to_page(scene);
  return scene;
}

geom::Scene motif_grid(int rows, int cols, const MotifRule& rule,
                       const PageSpec& page, rng::State& rng) {
  if (rows < 1 || cols < 1)
    fail(ErrorCode::invalid_argument, "motif grid needs rows, cols >= 1");
  if (rule.id != "ncorner")
    fail(ErrorCode::unknown_rule, "unknown cell rule '" + rule.id + "'");
  validate_page(page);

  const geom::Rect frame = page.frame();
  const double cw = frame.width() / cols;
  const double ch = frame.height() / rows;
  const double pad = 0.1 * std::min(cw, ch);

  geom::Scene scene{page.width, page.height, page.stroke_width, {}};
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const geom::Rect cell{frame.x0 + c * cw + pad, frame.y0 + r * ch + pad,
                            frame.x0 + (c + 1) * cw - pad, frame.y0 + (r + 1) * ch - pad};
      scene.strokes.push_back(ncorner(rule.corners, cell, rng));
    }
  }
  geom::clip_scene_to_page(scene);
  return scene;
}

namespace {

double density_value(const std::string& id, double x, double y) {
  if (id == "uniform") return 1.0;
  if (id == "ramp-x") return x;
  if (id == "ramp-y") return y;
  if (id == "radial") {
    const double r = std::hypot(x - 0.5, y - 0.5) / std::hypot(0.5, 0.5);
    return std::max(0.0, 1.0 - r);
  }
  fail(ErrorCode::unknown_rule, "unknown density map '" + id + "'");
}

} // namespace

geom::Scene density_field(int count, const std::vector<Orientation>& orientations,
                          const std::string& density_id, double segment_length,
                          const PageSpec& page, rng::State& rng) {
  if (count < 0)
    fail(ErrorCode::invalid_argument, "segment count must be >= 0");
  if (!(segment_length > 0.0))
    fail(ErrorCode::invalid_argument, "segment length must be positive");
  validate_page(page);

  // canonical orientation order: horizontal < vertical < oblique, deduplicated
  std::vector<Orientation> allowed;
  for (Orientation o : {Orientation::horizontal, Orientation::vertical, Orientation::oblique})
    if (std::find(orientations.begin(), orientations.end(), o) != orientations.end())
      allowed.push_back(o);
  if (allowed.empty())
    fail(ErrorCode::invalid_argument, "orientation set must not be empty");

  density_value(density_id, 0.0, 0.0); // reject unknown ids before drawing

  const geom::Rect frame = page.frame();
  geom::Scene scene{page.width, page.height, page.stroke_width, {}};

  long attempts = 0;
  const long max_attempts = 1000L * count + 1000L;
  while (static_cast<int>(scene.strokes.size()) < count && attempts < max_attempts) {
    ++attempts;
    const double x = uniform_in(rng, frame.x0, frame.x1);
    const double y = uniform_in(rng, frame.y0, frame.y1);
    const double u = rng::next_unit(rng);
    const double d = density_value(density_id, (x - frame.x0) / frame.width(),
                                   (y - frame.y0) / frame.height());
    if (!(u < d)) continue;

    const auto pick = rng::next_int(rng, 0, static_cast<std::int64_t>(allowed.size()) - 1);
    double angle = 0.0;
    switch (allowed[static_cast<std::size_t>(pick)]) {
      case Orientation::horizontal: angle = 0.0; break;
      case Orientation::vertical: angle = kPi / 2.0; break;
      case Orientation::oblique: {
        double a = rng::next_unit(rng);
        while (a == 0.0) a = rng::next_unit(rng); // keep the angle off-axis
        angle = a * kPi / 2.0;
        break;
      }
    }
    const double hx = 0.5 * segment_length * std::cos(angle);
    const double hy = 0.5 * segment_length * std::sin(angle);
    scene.strokes.push_back(geom::Polyline{{{x - hx, y - hy}, {x + hx, y + hy}}, false});
  }
  geom::clip_scene_to_page(scene);
  return scene;
}

geom::Scene hommage_klee(const HommageParams& params, const PageSpec& page,
                         rng::State& rng) {
  if (params.rows < 1 || params.cols < 1)
    fail(ErrorCode::invalid_argument, "mesh needs rows, cols >= 1");
  if (!(params.jitter >= 0.0 && params.jitter < 0.5))
    fail(ErrorCode::invalid_argument, "jitter must lie in [0, 0.5)");
  if (params.hatch_min < 1 || params.hatch_min > params.hatch_max)
    fail(ErrorCode::invalid_argument, "hatch density range must satisfy 1 <= min <= max");
  {
    measures::Distribution w(params.state_weights.begin(), params.state_weights.end());
    measures::validate_distribution(w);
  }
  validate_page(page);

  const geom::Rect frame = page.frame();
  const int vr = params.rows + 1; // lattice vertex rows
  const int vc = params.cols + 1;
  const double cw = frame.width() / params.cols;
  const double ch = frame.height() / params.rows;

  // level 1: jittered lattice, row-major, dx then dy per vertex
  std::vector<geom::Point> lattice(static_cast<std::size_t>(vr) * vc);
  for (int r = 0; r < vr; ++r) {
    for (int c = 0; c < vc; ++c) {
      const double dx = (2.0 * rng::next_unit(rng) - 1.0) * params.jitter * cw;
      const double dy = (2.0 * rng::next_unit(rng) - 1.0) * params.jitter * ch;
      lattice[static_cast<std::size_t>(r) * vc + c] =
          geom::Point{frame.x0 + c * cw + dx, frame.y0 + r * ch + dy};
    }
  }
  auto vertex = [&](int r, int c) -> const geom::Point& {
    return lattice[static_cast<std::size_t>(r) * vc + c];
  };

  geom::Scene scene{page.width, page.height, page.stroke_width, {}};

  // mesh strokes: horizontals top to bottom, then verticals left to right
  for (int r = 0; r < vr; ++r) {
    geom::Polyline pl;
    for (int c = 0; c < vc; ++c) pl.points.push_back(vertex(r, c));
    scene.strokes.push_back(std::move(pl));
  }
  for (int c = 0; c < vc; ++c) {
    geom::Polyline pl;
    for (int r = 0; r < vr; ++r) pl.points.push_back(vertex(r, c));
    scene.strokes.push_back(std::move(pl));
  }

  auto lerp = [](const geom::Point& a, const geom::Point& b, double t) {
    return geom::Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
  };

  // level 2: per-cell state, row-major; one unit draw per cell plus one
  // integer draw for hatched cells
  for (int r = 0; r < params.rows; ++r) {
    for (int c = 0; c < params.cols; ++c) {
      const double u = rng::next_unit(rng);
      CellState state = CellState::diagonal;
      double cum = 0.0;
      for (int s = 0; s < 4; ++s) {
        cum += params.state_weights[static_cast<std::size_t>(s)];
        if (u < cum) { state = static_cast<CellState>(s); break; }
      }

      const geom::Point& tl = vertex(r, c);
      const geom::Point& tr = vertex(r, c + 1);
      const geom::Point& bl = vertex(r + 1, c);
      const geom::Point& br = vertex(r + 1, c + 1);

      switch (state) {
        case CellState::empty:
          break;
        case CellState::diagonal:
          scene.strokes.push_back(geom::Polyline{{tl, br}, false});
          break;
        case CellState::h_hatch:
        case CellState::v_hatch: {
          const auto n = rng::next_int(rng, params.hatch_min, params.hatch_max);
          for (std::int64_t m = 1; m <= n; ++m) {
            const double t = static_cast<double>(m) / static_cast<double>(n + 1);
            if (state == CellState::h_hatch)
              scene.strokes.push_back(
                  geom::Polyline{{lerp(tl, bl, t), lerp(tr, br, t)}, false});
            else
              scene.strokes.push_back(
                  geom::Polyline{{lerp(tl, tr, t), lerp(bl, br, t)}, false});
          }
          break;
        }
      }
    }
  }
  geom::clip_scene_to_page(scene);
  return scene;
}

geom::Scene iid_segments(int count, double segment_length, const PageSpec& page,
                         rng::State& rng) {
  if (count < 0)
    fail(ErrorCode::invalid_argument, "segment count must be >= 0");
  if (!(segment_length > 0.0))
    fail(ErrorCode::invalid_argument, "segment length must be positive");
  validate_page(page);
  const geom::Rect frame = page.frame();
  geom::Scene scene{page.width, page.height, page.stroke_width, {}};
  for (int i = 0; i < count; ++i) {
    const double x = uniform_in(rng, frame.x0, frame.x1);
    const double y = uniform_in(rng, frame.y0, frame.y1);
    const double angle = rng::next_unit(rng) * kPi;
    const double hx = 0.5 * segment_length * std::cos(angle);
    const double hy = 0.5 * segment_length * std::sin(angle);
    scene.strokes.push_back(geom::Polyline{{{x - hx, y - hy}, {x + hx, y + hy}}, false});
  }
  geom::clip_scene_to_page(scene);
  return scene;
}

} // namespace gaw::graphics
