#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gaw/rng.hpp"

// Random-phase reconstruction of sea-surface height fields from a
// directional wave spectrum S(f, theta).
//
// Conventions fixed here (declared, not recovered from any buoy format):
//   - spectrum values in m^2 / (Hz * rad) on a frequency x direction lattice
//   - deep-water linear dispersion omega^2 = g * k, g = 9.81 m/s^2 by default
//   - one component per spectral bin with deterministic amplitude
//     a = sqrt(2 * S * df * dtheta) and a uniformly random phase in [0, 2*pi)
//     (randomness enters through the phase only)

namespace gaw::wave {

inline constexpr double kGravity = 9.81; // m/s^2
inline constexpr double kTwoPi = 6.28318530717958647692;

struct DirectionalSpectrum {
  std::vector<double> freqs;  // bin-center frequencies, Hz, strictly increasing, > 0
  std::vector<double> dirs;   // bin-center directions, rad in [0, 2*pi)
  std::vector<double> df;     // bin widths, Hz, > 0
  std::vector<double> dtheta; // bin widths, rad, > 0
  std::vector<double> values; // S[i][j], freq-major, m^2/(Hz*rad), >= 0

  double at(std::size_t i, std::size_t j) const { return values[i * dirs.size() + j]; }

  // zeroth spectral moment m0 = sum S * df * dtheta (the field variance), m^2
  double m0() const;
};

void validate_spectrum(const DirectionalSpectrum& s);

// CSV with header `f_hz,df_hz,theta_rad,dtheta_rad,s_m2_per_hz_rad`, one row
// per (f, theta) bin; the lattice must be complete. Width cells left empty
// are inferred from midpoint differences of the bin centers.
DirectionalSpectrum load_spectrum_csv(std::istream& in, const std::string& name);
DirectionalSpectrum load_spectrum_csv_file(const std::string& path);

// Hs = 4 * sqrt(m0), meters.
double significant_wave_height(const DirectionalSpectrum& s);

struct WaveComponent {
  double amplitude = 0.0;  // a, m
  double wavenumber = 0.0; // k, rad/m
  double direction = 0.0;  // theta, rad
  double omega = 0.0;      // angular frequency, rad/s
  double phase = 0.0;      // phi, rad in [0, 2*pi)
};

// One component per bin with S > 0, traversed freq-major; phases consume one
// unit draw per emitted component.
std::vector<WaveComponent> draw_components(const DirectionalSpectrum& s,
                                           rng::State& rng,
                                           double gravity = kGravity);

struct WaveField {
  int nx = 0, ny = 0;
  double dx = 0.0, dy = 0.0; // meters
  double origin_x = 0.0, origin_y = 0.0;
  double t = 0.0; // seconds
  std::vector<double> heights; // eta, row-major [iy * nx + ix], meters
  std::vector<WaveComponent> components;

  double at(int ix, int iy) const { return heights[static_cast<std::size_t>(iy) * nx + ix]; }
};

// eta(x, y, t) = sum a * cos(k * (x cos theta + y sin theta) - omega t + phi)
// evaluated at grid nodes x = origin_x + ix*dx, y = origin_y + iy*dy.
WaveField synthesize_field(const std::vector<WaveComponent>& components,
                           int nx, int ny, double dx, double dy, double t,
                           double origin_x = 0.0, double origin_y = 0.0);

// Population variance of eta over all grid nodes; needs nx*ny >= 2.
double field_variance(const WaveField& field);

struct FieldStats {
  double min = 0.0, max = 0.0, mean = 0.0;
};
FieldStats field_stats(const WaveField& field);

// Raw CSV of meters: ny rows of nx scientific-notation values.
void write_field_csv(const WaveField& field, std::ostream& out);
void write_field_csv_file(const WaveField& field, const std::string& path);

// P2 PGM normalized to [0, 255] over [min, max]; returns the stats so the
// caller can record min/max in the run manifest.
FieldStats write_field_pgm_file(const WaveField& field, const std::string& path);

// P2 PGM of S over the f x theta lattice (rows = frequencies, columns =
// directions), normalized to the spectrum maximum. Returns that maximum.
double write_spectrum_heatmap_pgm_file(const DirectionalSpectrum& s, const std::string& path);

} // namespace gaw::wave
