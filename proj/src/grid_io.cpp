#include "gaw/grid_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace gaw::grid_io {

namespace {

// Reads the next PGM header token, skipping whitespace and '#' comments.
std::string next_header_token(std::istream& in, const std::string& name) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {}
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok += static_cast<char>(c);
  }
  if (tok.empty())
    fail(ErrorCode::parse, name + ": truncated PGM header");
  return tok;
}

int parse_header_int(std::istream& in, const std::string& name, const char* what) {
  const std::string tok = next_header_token(in, name);
  try {
    std::size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::parse, name + ": bad PGM " + what + " '" + tok + "'");
  }
}

} // namespace

Raster read_pgm(std::istream& in, const std::string& name) {
  const std::string magic = next_header_token(in, name);
  if (magic != "P2" && magic != "P5")
    fail(ErrorCode::parse, name + ": not a P2/P5 PGM (magic '" + magic + "')");

  Raster r;
  r.width = parse_header_int(in, name, "width");
  r.height = parse_header_int(in, name, "height");
  r.maxval = parse_header_int(in, name, "maxval");
  if (r.width < 1 || r.height < 1)
    fail(ErrorCode::parse, name + ": non-positive PGM dimensions");
  if (r.maxval < 1 || r.maxval > 65535)
    fail(ErrorCode::parse, name + ": PGM maxval out of range");

  const std::size_t n = static_cast<std::size_t>(r.width) * r.height;
  r.pixels.resize(n);
  if (magic == "P2") {
    for (std::size_t i = 0; i < n; ++i) {
      long v;
      if (!(in >> v))
        fail(ErrorCode::parse, name + ": PGM truncated at sample " + std::to_string(i));
      if (v < 0 || v > r.maxval)
        fail(ErrorCode::parse, name + ": PGM sample " + std::to_string(i) +
                                   " value " + std::to_string(v) + " exceeds maxval");
      r.pixels[i] = static_cast<std::uint16_t>(v);
    }
  } else {
    // single whitespace byte separates maxval from binary data
    const int bytes = r.maxval > 255 ? 2 : 1;
    for (std::size_t i = 0; i < n; ++i) {
      int hi = in.get();
      int lo = bytes == 2 ? in.get() : 0;
      if (hi == EOF || (bytes == 2 && lo == EOF))
        fail(ErrorCode::parse, name + ": PGM truncated at sample " + std::to_string(i));
      const int v = bytes == 2 ? (hi << 8) | lo : hi;
      if (v > r.maxval)
        fail(ErrorCode::parse, name + ": PGM sample " + std::to_string(i) + " exceeds maxval");
      r.pixels[i] = static_cast<std::uint16_t>(v);
    }
  }
  return r;
}

Raster read_pgm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::io, "cannot open '" + path + "'");
  return read_pgm(in, path);
}

measures::SymbolGrid quantize(const Raster& r, int bins) {
  if (bins < 1)
    fail(ErrorCode::invalid_argument, "quantization needs at least 1 bin");
  measures::SymbolGrid g;
  g.width = r.width;
  g.height = r.height;
  g.alphabet = bins;
  g.cells.reserve(r.pixels.size());
  const long levels = static_cast<long>(r.maxval) + 1;
  for (std::uint16_t px : r.pixels) {
    long bin = static_cast<long>(px) * bins / levels;
    if (bin >= bins) bin = bins - 1;
    g.cells.push_back(static_cast<int>(bin));
  }
  measures::validate_grid(g);
  return g;
}

measures::SymbolGrid read_csv_grid(std::istream& in, const std::string& name) {
  measures::SymbolGrid g;
  std::string line;
  int row = 0;
  int max_symbol = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream cells(line);
    std::string cell;
    int cols = 0;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t pos = 0;
        const int v = std::stoi(cell, &pos);
        while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
        if (pos != cell.size()) throw std::invalid_argument(cell);
        if (v < 0)
          fail(ErrorCode::parse, name + ": negative symbol id at row " + std::to_string(row));
        g.cells.push_back(v);
        max_symbol = std::max(max_symbol, v);
        ++cols;
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        fail(ErrorCode::parse, name + ": bad cell '" + cell + "' at row " + std::to_string(row));
      }
    }
    if (g.width == 0) {
      g.width = cols;
    } else if (cols != g.width) {
      fail(ErrorCode::parse, name + ": row " + std::to_string(row) + " has " +
                                 std::to_string(cols) + " cells, expected " +
                                 std::to_string(g.width));
    }
    ++g.height;
  }
  if (g.cells.empty())
    fail(ErrorCode::parse, name + ": empty grid");
  g.alphabet = max_symbol + 1;
  measures::validate_grid(g);
  return g;
}

measures::SymbolGrid read_csv_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::io, "cannot open '" + path + "'");
  return read_csv_grid(in, path);
}

measures::SymbolGrid load_grid(const std::string& path, int bins) {
  const auto dot = path.find_last_of('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == "pgm") return quantize(read_pgm_file(path), bins);
  return read_csv_grid_file(path);
}

} // namespace gaw::grid_io
