#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gaw/measures.hpp"

// Ingestion of external rasters and symbol grids for measurement.
//
//   .pgm  — P2 (ASCII) or P5 (binary) grayscale, maxval up to 65535;
//           gray levels are quantized into k uniform bins
//   .csv  — rows of comma-separated symbol ids; alphabet = max id + 1

namespace gaw::grid_io {

struct Raster {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<std::uint16_t> pixels; // row-major
};

Raster read_pgm(std::istream& in, const std::string& name);
Raster read_pgm_file(const std::string& path);

// bin = floor(gray * k / (maxval + 1)), clamped to k-1.
measures::SymbolGrid quantize(const Raster& r, int bins);

measures::SymbolGrid read_csv_grid(std::istream& in, const std::string& name);
measures::SymbolGrid read_csv_grid_file(const std::string& path);

// Dispatches on extension: .pgm -> quantize(read_pgm, bins), otherwise CSV.
measures::SymbolGrid load_grid(const std::string& path, int bins);

} // namespace gaw::grid_io
