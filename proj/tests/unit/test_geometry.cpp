#include <doctest.h>

#include "gaw/geometry.hpp"
#include "gaw/svg.hpp"

using namespace gaw;
using geom::Point;
using geom::Polyline;
using geom::Rect;

TEST_CASE("segment clipping against a rectangle") {
  const Rect r{0, 0, 10, 10};

  Point a{-1, 5}, b{11, 5};
  REQUIRE(geom::clip_segment(r, a, b));
  CHECK(a.x == doctest::Approx(0.0));
  CHECK(b.x == doctest::Approx(10.0));
  CHECK(a.y == 5.0);

  Point c{2, 2}, d{3, 3}; // fully inside
  REQUIRE(geom::clip_segment(r, c, d));
  CHECK(c.x == 2.0);
  CHECK(d.y == 3.0);

  Point e{-5, -5}, f{-1, -1}; // fully outside
  CHECK_FALSE(geom::clip_segment(r, e, f));

  Point g{-2, 20}, h{20, 20}; // parallel to an edge, outside
  CHECK_FALSE(geom::clip_segment(r, g, h));
}

TEST_CASE("polyline clipping splits into pieces") {
  const Rect r{0, 0, 10, 10};
  // zig-zags out of the right edge and back in
  Polyline pl{{{1, 1}, {15, 1}, {15, 9}, {1, 9}}, false};
  const auto pieces = geom::clip_polyline(pl, r);
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].points.front().x == 1.0);
  CHECK(pieces[0].points.back().x == doctest::Approx(10.0));
  CHECK(pieces[1].points.front().x == doctest::Approx(10.0));
  CHECK(pieces[1].points.back().x == 1.0);
}

TEST_CASE("clipped ring stays continuous across the starting vertex") {
  const Rect r{0, 0, 10, 10};
  // square ring whose right side pokes out of the page: the surviving ink is
  // one connected path through the start vertex (2,2), not two strokes
  Polyline ring{{{2, 2}, {15, 2}, {15, 8}, {2, 8}}, true};
  const auto pieces = geom::clip_polyline(ring, r);
  REQUIRE(pieces.size() == 1);
  const auto& pts = pieces[0].points;
  REQUIRE(pts.size() == 4);
  CHECK(pts.front().x == doctest::Approx(10.0)); // enters at the right edge
  CHECK(pts.back().x == doctest::Approx(10.0));  // leaves at the right edge
  CHECK(pts[2].x == 2.0);                        // passes through (2,2) mid-path
  CHECK(pts[2].y == 2.0);
  CHECK_FALSE(pieces[0].closed);
}

TEST_CASE("fully inside polyline is returned unchanged and keeps closure") {
  const Rect r{0, 0, 10, 10};
  Polyline pl{{{1, 1}, {9, 1}, {5, 9}}, true};
  const auto pieces = geom::clip_polyline(pl, r);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].closed);
  CHECK(pieces[0].points.size() == 3);
}

TEST_CASE("crop drops outside strokes, clips the rest, and shifts the page") {
  geom::Scene scene{100, 100, 0.5, {}};
  scene.strokes.push_back(Polyline{{{10, 10}, {20, 10}}, false});   // inside crop
  scene.strokes.push_back(Polyline{{{80, 80}, {90, 90}}, false});   // fully outside
  scene.strokes.push_back(Polyline{{{10, 20}, {60, 20}}, false});   // straddles
  const geom::Scene cropped = geom::crop_scene(scene, Rect{5, 5, 50, 50});
  CHECK(cropped.width == 45.0);
  CHECK(cropped.height == 45.0);
  REQUIRE(cropped.strokes.size() == 2);
  CHECK(cropped.strokes[0].points[0].x == doctest::Approx(5.0));  // 10 - 5
  CHECK(cropped.strokes[1].points.back().x == doctest::Approx(45.0)); // clipped at 50, shifted
}

TEST_CASE("rasterize marks crossed cells only") {
  geom::Scene scene{100, 100, 0.5, {}};
  scene.strokes.push_back(Polyline{{{0, 50}, {100, 50}}, false}); // horizontal mid line
  const auto g = geom::rasterize(scene, 10, 10);
  CHECK(g.alphabet == 2);
  int marked = 0;
  for (int v : g.cells) marked += v;
  CHECK(marked == 10); // one full row
  CHECK(g.at(5, 0) == 1);
  CHECK(g.at(0, 0) == 0);
}

TEST_CASE("svg output has fixed 4-decimal formatting and closes polygons") {
  geom::Scene scene{10, 10, 0.5, {}};
  scene.strokes.push_back(Polyline{{{1, 2}, {3, 4}, {5, 1}}, true});
  const std::string svg = svg::to_svg(scene);
  CHECK(svg.find("viewBox=\"0 0 10.0000 10.0000\"") != std::string::npos);
  CHECK(svg.find("stroke-width=\"0.5000\"") != std::string::npos);
  // closed: first point duplicated as last on emission
  CHECK(svg.find("points=\"1.0000,2.0000 3.0000,4.0000 5.0000,1.0000 1.0000,2.0000\"") !=
        std::string::npos);
}

TEST_CASE("identical scenes serialize to identical bytes") {
  geom::Scene scene{10, 10, 0.5, {}};
  scene.strokes.push_back(Polyline{{{1.23456, 2.34567}, {3, 4}}, false});
  CHECK(svg::to_svg(scene) == svg::to_svg(scene));
}
