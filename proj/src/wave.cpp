#include "gaw/wave.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "gaw/numfmt.hpp"
#include "gaw/parse.hpp"

namespace gaw::wave {

double DirectionalSpectrum::m0() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < freqs.size(); ++i)
    for (std::size_t j = 0; j < dirs.size(); ++j)
      sum += at(i, j) * df[i] * dtheta[j];
  return sum;
}

void validate_spectrum(const DirectionalSpectrum& s) {
  if (s.freqs.empty() || s.dirs.empty())
    fail(ErrorCode::validation, "spectrum lattice is empty");
  if (s.df.size() != s.freqs.size() || s.dtheta.size() != s.dirs.size() ||
      s.values.size() != s.freqs.size() * s.dirs.size())
    fail(ErrorCode::validation, "spectrum dimensions are inconsistent");
  for (std::size_t i = 0; i < s.freqs.size(); ++i) {
    if (!(s.freqs[i] > 0.0))
      fail(ErrorCode::validation, "frequency " + std::to_string(i) + " must be positive");
    if (i > 0 && !(s.freqs[i] > s.freqs[i - 1]))
      fail(ErrorCode::validation, "frequencies must be strictly increasing");
    if (!(s.df[i] > 0.0))
      fail(ErrorCode::validation, "frequency bin width " + std::to_string(i) + " must be positive");
  }
  for (std::size_t j = 0; j < s.dirs.size(); ++j) {
    if (!(s.dirs[j] >= 0.0 && s.dirs[j] < kTwoPi))
      fail(ErrorCode::validation, "direction " + std::to_string(j) + " must lie in [0, 2*pi)");
    if (!(s.dtheta[j] > 0.0))
      fail(ErrorCode::validation, "direction bin width " + std::to_string(j) + " must be positive");
  }
  for (std::size_t i = 0; i < s.freqs.size(); ++i)
    for (std::size_t j = 0; j < s.dirs.size(); ++j)
      if (!(s.at(i, j) >= 0.0))
        fail(ErrorCode::validation, "S at frequency bin " + std::to_string(i) +
                                        ", direction bin " + std::to_string(j) +
                                        " is negative or NaN");
}

namespace {

struct SpectrumRow {
  double f = 0.0, theta = 0.0, s = 0.0;
  double df = -1.0, dtheta = -1.0; // -1 marks an empty width cell
  int line = 0;
};

double parse_cell(const std::string& cell, const std::string& name, int line, const char* col) {
  double v = 0.0;
  if (!parse::to_double(cell, v))
    fail(ErrorCode::parse, name + ": row " + std::to_string(line) + ": bad " + col +
                               " value '" + cell + "'");
  return v;
}

// Midpoint-difference widths for bin centers when the CSV leaves them empty.
std::vector<double> infer_widths(const std::vector<double>& centers, const std::string& name,
                                 const char* what) {
  const std::size_t n = centers.size();
  if (n == 1)
    fail(ErrorCode::validation,
         name + ": cannot infer " + std::string(what) + " width from a single bin");
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0)
      w[i] = centers[1] - centers[0];
    else if (i + 1 == n)
      w[i] = centers[n - 1] - centers[n - 2];
    else
      w[i] = (centers[i + 1] - centers[i - 1]) / 2.0;
  }
  return w;
}

} // namespace

DirectionalSpectrum load_spectrum_csv(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line))
    fail(ErrorCode::parse, name + ": empty spectrum file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "f_hz,df_hz,theta_rad,dtheta_rad,s_m2_per_hz_rad")
    fail(ErrorCode::parse, name + ": bad header '" + line + "'");

  std::vector<SpectrumRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.push_back("");
    if (cells.size() != 5)
      fail(ErrorCode::parse, name + ": row " + std::to_string(lineno) + " has " +
                                 std::to_string(cells.size()) + " columns, expected 5");
    SpectrumRow row;
    row.line = lineno;
    row.f = parse_cell(cells[0], name, lineno, "f_hz");
    if (!cells[1].empty()) row.df = parse_cell(cells[1], name, lineno, "df_hz");
    row.theta = parse_cell(cells[2], name, lineno, "theta_rad");
    if (!cells[3].empty()) row.dtheta = parse_cell(cells[3], name, lineno, "dtheta_rad");
    row.s = parse_cell(cells[4], name, lineno, "s_m2_per_hz_rad");
    if (row.s < 0.0)
      fail(ErrorCode::validation,
           name + ": row " + std::to_string(lineno) + ": negative S value");
    rows.push_back(row);
  }
  if (rows.empty())
    fail(ErrorCode::parse, name + ": spectrum file has no data rows");

  // collect axes in file order; frequencies must arrive strictly increasing
  DirectionalSpectrum s;
  std::map<double, std::size_t> f_index, th_index;
  for (const SpectrumRow& row : rows) {
    if (f_index.emplace(row.f, s.freqs.size()).second) {
      if (!s.freqs.empty() && row.f <= s.freqs.back())
        fail(ErrorCode::validation, name + ": row " + std::to_string(row.line) +
                                        ": frequencies must be strictly increasing");
      s.freqs.push_back(row.f);
      s.df.push_back(row.df);
    }
    if (th_index.emplace(row.theta, s.dirs.size()).second) {
      s.dirs.push_back(row.theta);
      s.dtheta.push_back(row.dtheta);
    }
  }

  const std::size_t nf = s.freqs.size();
  const std::size_t nth = s.dirs.size();
  if (rows.size() != nf * nth)
    fail(ErrorCode::validation,
         name + ": incomplete lattice: " + std::to_string(rows.size()) + " rows for " +
             std::to_string(nf) + " frequencies x " + std::to_string(nth) + " directions");

  s.values.assign(nf * nth, -1.0);
  for (const SpectrumRow& row : rows) {
    const std::size_t i = f_index.at(row.f);
    const std::size_t j = th_index.at(row.theta);
    if (s.values[i * nth + j] >= 0.0)
      fail(ErrorCode::validation, name + ": row " + std::to_string(row.line) +
                                      ": duplicate (f, theta) bin");
    s.values[i * nth + j] = row.s;
    // width cells must agree across the lattice for a shared bin center
    auto check_width = [&](double stored, double seen, const char* what) {
      if (seen >= 0.0 && stored >= 0.0 && stored != seen)
        fail(ErrorCode::validation, name + ": row " + std::to_string(row.line) +
                                        ": conflicting " + what + " for the same bin center");
    };
    check_width(s.df[i], row.df, "df_hz");
    check_width(s.dtheta[j], row.dtheta, "dtheta_rad");
    if (s.df[i] < 0.0 && row.df >= 0.0) s.df[i] = row.df;
    if (s.dtheta[j] < 0.0 && row.dtheta >= 0.0) s.dtheta[j] = row.dtheta;
  }

  if (std::any_of(s.df.begin(), s.df.end(), [](double v) { return v < 0.0; })) {
    if (std::all_of(s.df.begin(), s.df.end(), [](double v) { return v < 0.0; }))
      s.df = infer_widths(s.freqs, name, "frequency");
    else
      fail(ErrorCode::validation, name + ": df_hz must be given for all bins or none");
  }
  if (std::any_of(s.dtheta.begin(), s.dtheta.end(), [](double v) { return v < 0.0; })) {
    if (std::all_of(s.dtheta.begin(), s.dtheta.end(), [](double v) { return v < 0.0; })) {
      std::vector<double> sorted_dirs = s.dirs;
      std::sort(sorted_dirs.begin(), sorted_dirs.end());
      const std::vector<double> w = infer_widths(sorted_dirs, name, "direction");
      for (std::size_t j = 0; j < s.dirs.size(); ++j) {
        const auto it = std::lower_bound(sorted_dirs.begin(), sorted_dirs.end(), s.dirs[j]);
        s.dtheta[j] = w[static_cast<std::size_t>(it - sorted_dirs.begin())];
      }
    } else {
      fail(ErrorCode::validation, name + ": dtheta_rad must be given for all bins or none");
    }
  }

  validate_spectrum(s);
  return s;
}

DirectionalSpectrum load_spectrum_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::io, "cannot open '" + path + "'");
  return load_spectrum_csv(in, path);
}

double significant_wave_height(const DirectionalSpectrum& s) {
  validate_spectrum(s);
  return 4.0 * std::sqrt(s.m0());
}

std::vector<WaveComponent> draw_components(const DirectionalSpectrum& s,
                                           rng::State& rng, double gravity) {
  validate_spectrum(s);
  if (!(gravity > 0.0))
    fail(ErrorCode::invalid_argument, "gravity must be positive");
  std::vector<WaveComponent> components;
  for (std::size_t i = 0; i < s.freqs.size(); ++i) {
    for (std::size_t j = 0; j < s.dirs.size(); ++j) {
      const double energy = s.at(i, j) * s.df[i] * s.dtheta[j];
      if (energy <= 0.0) continue;
      WaveComponent c;
      c.amplitude = std::sqrt(2.0 * energy);
      c.omega = kTwoPi * s.freqs[i];
      c.wavenumber = c.omega * c.omega / gravity; // deep water: omega^2 = g k
      c.direction = s.dirs[j];
      c.phase = kTwoPi * rng::next_unit(rng);
      components.push_back(c);
    }
  }
  return components;
}

WaveField synthesize_field(const std::vector<WaveComponent>& components,
                           int nx, int ny, double dx, double dy, double t,
                           double origin_x, double origin_y) {
  if (nx < 1 || ny < 1)
    fail(ErrorCode::invalid_argument, "grid dimensions must be at least 1x1");
  if (!(dx > 0.0) || !(dy > 0.0))
    fail(ErrorCode::invalid_argument, "grid spacing must be positive");

  WaveField field;
  field.nx = nx;
  field.ny = ny;
  field.dx = dx;
  field.dy = dy;
  field.t = t;
  field.origin_x = origin_x;
  field.origin_y = origin_y;
  field.components = components;
  field.heights.assign(static_cast<std::size_t>(nx) * ny, 0.0);

  struct Term {
    double kx, ky, amp, shift;
  };
  std::vector<Term> terms;
  terms.reserve(components.size());
  for (const WaveComponent& c : components)
    terms.push_back({c.wavenumber * std::cos(c.direction),
                     c.wavenumber * std::sin(c.direction), c.amplitude,
                     c.phase - c.omega * t});

  for (int iy = 0; iy < ny; ++iy) {
    const double y = origin_y + iy * dy;
    for (int ix = 0; ix < nx; ++ix) {
      const double x = origin_x + ix * dx;
      double eta = 0.0;
      for (const Term& term : terms)
        eta += term.amp * std::cos(term.kx * x + term.ky * y + term.shift);
      field.heights[static_cast<std::size_t>(iy) * nx + ix] = eta;
    }
  }
  return field;
}

double field_variance(const WaveField& field) {
  const std::size_t n = field.heights.size();
  if (n < 2)
    fail(ErrorCode::validation, "variance needs at least 2 grid nodes");
  double mean = 0.0;
  for (double h : field.heights) mean += h;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double h : field.heights) var += (h - mean) * (h - mean);
  return var / static_cast<double>(n);
}

FieldStats field_stats(const WaveField& field) {
  if (field.heights.empty())
    fail(ErrorCode::validation, "empty field");
  FieldStats st;
  st.min = field.heights.front();
  st.max = field.heights.front();
  double sum = 0.0;
  for (double h : field.heights) {
    st.min = std::min(st.min, h);
    st.max = std::max(st.max, h);
    sum += h;
  }
  st.mean = sum / static_cast<double>(field.heights.size());
  return st;
}

void write_field_csv(const WaveField& field, std::ostream& out) {
  for (int iy = 0; iy < field.ny; ++iy) {
    for (int ix = 0; ix < field.nx; ++ix) {
      if (ix) out << ",";
      out << numfmt::scientific(field.at(ix, iy), 9);
    }
    out << "\n";
  }
}

void write_field_csv_file(const WaveField& field, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(ErrorCode::io, "cannot write '" + path + "'");
  write_field_csv(field, out);
  if (!out)
    fail(ErrorCode::io, "error writing '" + path + "'");
}

namespace {

void write_pgm_p2(const std::vector<int>& levels, int width, int height,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(ErrorCode::io, "cannot write '" + path + "'");
  out << "P2\n" << width << " " << height << "\n255\n";
  for (int row = 0; row < height; ++row) {
    for (int col = 0; col < width; ++col) {
      if (col) out << " ";
      out << levels[static_cast<std::size_t>(row) * width + col];
    }
    out << "\n";
  }
  if (!out)
    fail(ErrorCode::io, "error writing '" + path + "'");
}

} // namespace

FieldStats write_field_pgm_file(const WaveField& field, const std::string& path) {
  const FieldStats st = field_stats(field);
  const double span = st.max - st.min;
  std::vector<int> levels(field.heights.size(), 0);
  if (span > 0.0)
    for (std::size_t i = 0; i < field.heights.size(); ++i)
      levels[i] = static_cast<int>(std::lround((field.heights[i] - st.min) / span * 255.0));
  write_pgm_p2(levels, field.nx, field.ny, path);
  return st;
}

double write_spectrum_heatmap_pgm_file(const DirectionalSpectrum& s, const std::string& path) {
  validate_spectrum(s);
  const double smax = *std::max_element(s.values.begin(), s.values.end());
  std::vector<int> levels(s.values.size(), 0);
  if (smax > 0.0)
    for (std::size_t i = 0; i < s.values.size(); ++i)
      levels[i] = static_cast<int>(std::lround(s.values[i] / smax * 255.0));
  write_pgm_p2(levels, static_cast<int>(s.dirs.size()), static_cast<int>(s.freqs.size()), path);
  return smax;
}

} // namespace gaw::wave
