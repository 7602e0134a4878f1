#include "gaw/svg.hpp"

#include <fstream>
#include <sstream>

#include "gaw/numfmt.hpp"

namespace gaw::svg {

namespace {
std::string num(double v) { return numfmt::fixed(v, 4); }
} // namespace

std::string to_svg(const geom::Scene& scene) {
  geom::validate_rect(scene.page(), "page");
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(scene.width)
      << "mm\" height=\"" << num(scene.height) << "mm\" viewBox=\"0 0 "
      << num(scene.width) << " " << num(scene.height) << "\">\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << num(scene.stroke_width)
      << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";
  for (const geom::Polyline& pl : scene.strokes) {
    if (pl.points.size() < 2) continue;
    out << "<polyline points=\"";
    bool first = true;
    for (const geom::Point& p : pl.points) {
      if (!first) out << " ";
      out << num(p.x) << "," << num(p.y);
      first = false;
    }
    if (pl.closed)
      out << " " << num(pl.points.front().x) << "," << num(pl.points.front().y);
    out << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

void write_svg_file(const geom::Scene& scene, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(ErrorCode::io, "cannot write '" + path + "'");
  out << to_svg(scene);
  if (!out)
    fail(ErrorCode::io, "error writing '" + path + "'");
}

} // namespace gaw::svg
