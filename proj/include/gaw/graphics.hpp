#pragma once

#include <array>
#include <string>
#include <vector>

#include "gaw/geometry.hpp"
#include "gaw/rng.hpp"

// Stochastic graphic generators. Every generator is a pure function of its
// parameters and the rng state it receives; draw order is part of the
// contract so outputs are seed-stable. All returned scenes are already
// clipped to the page rectangle.

namespace gaw::graphics {

struct PageSpec {
  double width = 200.0;  // page units (mm by convention)
  double height = 200.0;
  double margin = 10.0;  // inset of the drawing frame on all sides
  double stroke_width = 0.5;

  geom::Rect frame() const {
    return geom::Rect{margin, margin, width - margin, height - margin};
  }
};

// Throws invalid_argument on a non-drawable page (frame degenerate, bad stroke width).
void validate_page(const PageSpec& page);

// Closed polygon of exactly n vertices drawn uniformly inside the frame, in
// draw order (the self-intersecting scribble of the originals). Two unit
// draws per vertex: x then y. n >= 3.
geom::Polyline ncorner(int n, const geom::Rect& frame, rng::State& rng);

// Single n-corner centered on the page frame.
geom::Scene ncorner_scene(int n, const PageSpec& page, rng::State& rng);

// A rows x cols grid of independently drawn motifs, one per cell, traversed
// row-major. Each motif lives in its cell frame inset by 10% of the shorter
// cell edge. The only registered rule is "ncorner" (parameter: corner count).
struct MotifRule {
  std::string id = "ncorner";
  int corners = 8;
};

geom::Scene motif_grid(int rows, int cols, const MotifRule& rule,
                       const PageSpec& page, rng::State& rng);

enum class Orientation { horizontal, vertical, oblique };

// Up to `count` straight segments placed by rejection sampling against a
// named density map over the frame (normalized [0,1]^2 coordinates):
//   uniform  — 1 everywhere (no rejection)
//   ramp-x   — d = x     (densest at the right edge)
//   ramp-y   — d = y     (densest at the bottom edge)
//   radial   — 1 at the center falling to 0 at the corners
// Per attempt the draws are x, y, accept; per accepted segment orientation
// (one integer draw) and, for oblique, an angle uniform in (0, 90) degrees.
// Attempts are capped at 1000 * count + 1000, so sparse maps may yield fewer
// than `count` segments.
geom::Scene density_field(int count, const std::vector<Orientation>& orientations,
                          const std::string& density_id, double segment_length,
                          const PageSpec& page, rng::State& rng);

// Per-cell visual states of the two-level mesh process, in sampling order.
enum class CellState { h_hatch, v_hatch, empty, diagonal };

struct HommageParams {
  int rows = 10;
  int cols = 10;
  double jitter = 0.2; // in [0, 0.5): vertex offset as a fraction of cell size
  // weights over {h-hatch, v-hatch, empty, diagonal}; must sum to 1
  std::array<double, 4> state_weights{0.25, 0.25, 0.25, 0.25};
  int hatch_min = 3; // inclusive chord-count range for hatched cells
  int hatch_max = 8;
};

// Two-level process: level 1 perturbs an (rows+1) x (cols+1) vertex lattice
// by jitter * cell-size in both axes (row-major, dx then dy); level 2 assigns
// each cell a state sampled from state_weights (row-major), hatched cells
// receiving n parallel chords (n uniform in [hatch_min, hatch_max])
// interpolated across the quad. Mesh strokes come first: horizontal
// polylines top to bottom, then vertical ones left to right, then cell fills.
geom::Scene hommage_klee(const HommageParams& params, const PageSpec& page,
                         rng::State& rng);

// `count` segments of fixed length with i.i.d. uniform midpoints and angles
// (uniform in [0, pi)); the disorder endpoint of the order/disorder
// comparison: the mesh's strokes with all spatial coherence removed.
geom::Scene iid_segments(int count, double segment_length, const PageSpec& page,
                         rng::State& rng);

} // namespace gaw::graphics
