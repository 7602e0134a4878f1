/* gaw — generative aesthetics workbench.
 *
 * C API of the shared library. All engine functionality is reachable through
 * this header: deterministic rng, aesthetic measures over symbol grids,
 * stochastic vector-graphic and text generators, directional-spectrum wave
 * synthesis, and manifest-based run/replay.
 *
 * Conventions:
 *   - functions return gaw_status (GAW_OK == 0); gaw_last_error() holds a
 *     thread-local message for the most recent failure on this thread
 *   - objects are opaque handles created by gaw_*_new/load and released by
 *     the matching gaw_*_free (free functions accept NULL)
 *   - strings returned through callbacks are only valid during the callback
 */

#ifndef GAW_H
#define GAW_H

#include <stddef.h>
#include <stdint.h>

#ifndef GAW_API
#  if defined(_WIN32)
#    define GAW_API __declspec(dllexport)
#  elif defined(__GNUC__)
#    define GAW_API __attribute__((visibility("default")))
#  else
#    define GAW_API
#  endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gaw_status {
  GAW_OK = 0,
  GAW_ERR_INVALID_ARGUMENT = 1,
  GAW_ERR_VALIDATION = 2,
  GAW_ERR_PARSE = 3,
  GAW_ERR_IO = 4,
  GAW_ERR_UNKNOWN_RULE = 5,
  GAW_ERR_VERSION_MISMATCH = 6,
  GAW_ERR_CHECKSUM_MISMATCH = 7,
  GAW_ERR_INTERNAL = 8
} gaw_status;

/* Engine version string, e.g. "0.1.0" (also recorded in every manifest). */
GAW_API const char* gaw_version(void);

/* Static name of a status code, e.g. "invalid-argument". */
GAW_API const char* gaw_status_name(gaw_status status);

/* Message of the most recent error on the calling thread ("" if none). */
GAW_API const char* gaw_last_error(void);

typedef void (*gaw_line_callback)(const char* line, void* user);

/* ------------------------------------------------------------------ rng */

typedef struct gaw_rng gaw_rng;

/* Seed 0 is remapped to a fixed nonzero constant. */
GAW_API gaw_rng* gaw_rng_new(uint64_t seed);
/* Independent stream: seed XOR (stream index * fixed salt); stream 0 is the
 * base sequence. */
GAW_API gaw_rng* gaw_rng_new_stream(uint64_t seed, uint64_t stream);
GAW_API void gaw_rng_free(gaw_rng* rng);

/* Uniform in [0,1), 53-bit resolution, bit-reproducible across platforms. */
GAW_API double gaw_rng_next_unit(gaw_rng* rng);
/* Uniform over the inclusive range [lo, hi]. */
GAW_API gaw_status gaw_rng_next_int(gaw_rng* rng, int64_t lo, int64_t hi, int64_t* out);

/* ------------------------------------------------------------- measures */

/* Shannon entropy in bits of a probability vector (sum 1 within 1e-9). */
GAW_API gaw_status gaw_entropy(const double* p, size_t n, double* out);
/* Redundancy 1 - H/log2(n); needs n >= 2. */
GAW_API gaw_status gaw_redundancy(const double* p, size_t n, double* out);

typedef struct gaw_grid gaw_grid;

/* Row-major symbol grid; every cell must lie in [0, alphabet). */
GAW_API gaw_status gaw_grid_new(int width, int height, int alphabet, const int* cells,
                        gaw_grid** out);
/* Loads .pgm (P2/P5, quantized into `bins` gray bins) or CSV of symbol ids. */
GAW_API gaw_status gaw_grid_load(const char* path, int bins, gaw_grid** out);
GAW_API void gaw_grid_free(gaw_grid* grid);

GAW_API gaw_status gaw_grid_size(const gaw_grid* grid, int* width, int* height, int* alphabet);
/* Writes alphabet-many probabilities into probs (capacity cap). */
GAW_API gaw_status gaw_grid_distribution(const gaw_grid* grid, double* probs, size_t cap,
                                 size_t* out_len);
/* Entropy over distinct block contents, non-overlapping tiling; block dims
 * must divide the grid dims. */
GAW_API gaw_status gaw_grid_block_entropy(const gaw_grid* grid, int block_w, int block_h,
                                  double* out);
/* CSV measurement report (same bytes as the CLI `measure` subcommand).
 * block_edges is a comma-separated list such as "1,2,4"; NULL means the
 * default "1,2,4". Edges that do not divide the grid are skipped. */
GAW_API gaw_status gaw_grid_report(const gaw_grid* grid, const char* block_edges,
                           gaw_line_callback emit, void* user);

/* All 2^n conjunctions over n (term, antonym) property pairs, emitted in
 * lexicographic order of the (term=0, antonym=1) bit patterns. n <= 20. */
GAW_API gaw_status gaw_semantic_space_enumerate(const char* const* terms,
                                        const char* const* antonyms, size_t n,
                                        uint64_t* out_q,
                                        gaw_line_callback emit, void* user);

/* ------------------------------------------------------------- graphics */

typedef struct gaw_scene gaw_scene;

/* Closed random polygon of exactly n >= 3 vertices uniform in the page
 * frame (page inset by margin on all sides). */
GAW_API gaw_status gaw_gen_ncorner(int n, double page_w, double page_h, double margin,
                           double stroke_width, uint64_t seed, gaw_scene** out);
/* rows x cols grid of motifs; cell_rule must be "ncorner". */
GAW_API gaw_status gaw_gen_motif_grid(int rows, int cols, const char* cell_rule, int cell_n,
                              double page_w, double page_h, double margin,
                              double stroke_width, uint64_t seed, gaw_scene** out);
/* Up to `count` segments rejection-sampled against a named density map
 * ("uniform", "ramp-x", "ramp-y", "radial"); orientations is a
 * comma-separated subset of "h,v,oblique". */
GAW_API gaw_status gaw_gen_density(int count, const char* orientations, const char* density_map,
                           double segment_length, double page_w, double page_h,
                           double margin, double stroke_width, uint64_t seed,
                           gaw_scene** out);
/* Two-level mesh: jittered (rows+1)x(cols+1) lattice, then per-cell states
 * weighted over {h-hatch, v-hatch, empty, diagonal}; hatched cells receive a
 * chord count uniform in [hatch_min, hatch_max]. */
GAW_API gaw_status gaw_gen_hommage(int rows, int cols, double jitter, const double state_weights[4],
                           int hatch_min, int hatch_max, double page_w, double page_h,
                           double margin, double stroke_width, uint64_t seed,
                           gaw_scene** out);
GAW_API void gaw_scene_free(gaw_scene* scene);

GAW_API gaw_status gaw_scene_stroke_count(const gaw_scene* scene, size_t* out);
/* Total vertex count of one stroke (before closing-point duplication). */
GAW_API gaw_status gaw_scene_stroke_size(const gaw_scene* scene, size_t stroke, size_t* out);
GAW_API gaw_status gaw_scene_page(const gaw_scene* scene, double* width, double* height);
/* Editorial crop: strokes fully outside are dropped, the rest clipped; the
 * crop rectangle becomes the new page. */
GAW_API gaw_status gaw_scene_crop(const gaw_scene* scene, double x0, double y0, double x1,
                          double y1, gaw_scene** out);
/* Coverage raster (alphabet 2) for block-entropy measurement. */
GAW_API gaw_status gaw_scene_rasterize(const gaw_scene* scene, int cols, int rows,
                               gaw_grid** out);
/* Deterministic SVG 1.1 (4-decimal coordinates, stroke order preserved). */
GAW_API gaw_status gaw_scene_write_svg(const gaw_scene* scene, const char* path);

/* ------------------------------------------------------------ text gen */

/* Lutz-style stochastic sentences. The lexicon file holds [subjects] /
 * [predicates] / [connectives] sections; templates hold {S} {P} {C} slots.
 * Emits n_sentences lines. */
GAW_API gaw_status gaw_gen_lutz(const char* lexicon_path, const char* templates_path,
                        int n_sentences, uint64_t seed,
                        gaw_line_callback emit, void* user);

/* ----------------------------------------------------------- wave synth */

typedef struct gaw_spectrum gaw_spectrum;
typedef struct gaw_field gaw_field;

typedef struct gaw_wave_component {
  double amplitude;  /* a, m */
  double wavenumber; /* k, rad/m */
  double direction;  /* theta, rad */
  double omega;      /* rad/s */
  double phase;      /* phi, rad in [0, 2*pi) */
} gaw_wave_component;

/* CSV with header f_hz,df_hz,theta_rad,dtheta_rad,s_m2_per_hz_rad. */
GAW_API gaw_status gaw_spectrum_load(const char* path, gaw_spectrum** out);
GAW_API void gaw_spectrum_free(gaw_spectrum* spectrum);

/* Zeroth spectral moment m0 = sum S*df*dtheta (m^2). */
GAW_API gaw_status gaw_spectrum_m0(const gaw_spectrum* spectrum, double* out);
/* Significant wave height Hs = 4*sqrt(m0) (m). */
GAW_API gaw_status gaw_spectrum_hs(const gaw_spectrum* spectrum, double* out);
/* PGM heatmap of S over the frequency x direction lattice. */
GAW_API gaw_status gaw_spectrum_write_heatmap(const gaw_spectrum* spectrum, const char* path);

/* One component per bin with S > 0: a = sqrt(2*S*df*dtheta), omega = 2*pi*f,
 * deep-water k = omega^2/gravity, phase uniform in [0, 2*pi). Components are
 * written into `components` (capacity cap); *out_n receives the count (call
 * with cap 0 to size the buffer). */
GAW_API gaw_status gaw_spectrum_components(const gaw_spectrum* spectrum, uint64_t seed,
                                   double gravity, gaw_wave_component* components,
                                   size_t cap, size_t* out_n);

/* eta(x,y,t) = sum a*cos(k*(x cos th + y sin th) - omega t + phi) on an
 * nx x ny grid with spacing dx, dy meters. */
GAW_API gaw_status gaw_wave_synthesize(const gaw_spectrum* spectrum, uint64_t seed,
                               double gravity, int nx, int ny, double dx, double dy,
                               double t, double origin_x, double origin_y,
                               gaw_field** out);
GAW_API void gaw_field_free(gaw_field* field);

GAW_API gaw_status gaw_field_size(const gaw_field* field, int* nx, int* ny);
GAW_API gaw_status gaw_field_height_at(const gaw_field* field, int ix, int iy, double* out);
/* Population variance of eta over all grid nodes (needs nx*ny >= 2). */
GAW_API gaw_status gaw_field_variance(const gaw_field* field, double* out);
GAW_API gaw_status gaw_field_stats(const gaw_field* field, double* min, double* max, double* mean);
GAW_API gaw_status gaw_field_write_csv(const gaw_field* field, const char* path);
GAW_API gaw_status gaw_field_write_pgm(const gaw_field* field, const char* path);

/* --------------------------------------------------------- run / replay */

/* Executes a named rule (nees-ncorner, nees-grid, density, hommage, lutz,
 * wave-synth, wave-heatmap, measure) with string parameters, writes the
 * output files and a `<first output>.manifest.json` recording the resolved
 * parameters, seed, engine version and a SHA-256 per output. */
GAW_API gaw_status gaw_run_rule(const char* rule_id, const char* const* param_keys,
                        const char* const* param_values, size_t n_params,
                        uint64_t seed, const char* const* output_paths,
                        size_t n_outputs);

/* Regenerates the outputs recorded in a manifest with the same engine
 * version and verifies every checksum; GAW_ERR_CHECKSUM_MISMATCH names the
 * files that differ. */
GAW_API gaw_status gaw_replay(const char* manifest_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GAW_H */
