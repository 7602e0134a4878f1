#include "gaw.h"

#include <cstring>
#include <string>
#include <vector>

#include "gaw/error.hpp"
#include "gaw/geometry.hpp"
#include "gaw/graphics.hpp"
#include "gaw/grid_io.hpp"
#include "gaw/manifest.hpp"
#include "gaw/measures.hpp"
#include "gaw/parse.hpp"
#include "gaw/rng.hpp"
#include "gaw/runner.hpp"
#include "gaw/svg.hpp"
#include "gaw/textgen.hpp"
#include "gaw/wave.hpp"

// Opaque handle definitions; each wraps the corresponding core value.
struct gaw_rng {
  gaw::rng::State state;
};
struct gaw_grid {
  gaw::measures::SymbolGrid grid;
};
struct gaw_scene {
  gaw::geom::Scene scene;
};
struct gaw_spectrum {
  gaw::wave::DirectionalSpectrum spectrum;
};
struct gaw_field {
  gaw::wave::WaveField field;
};

namespace {

thread_local std::string t_last_error;

gaw_status status_of(const gaw::Error& e) {
  switch (e.code()) {
    case gaw::ErrorCode::invalid_argument: return GAW_ERR_INVALID_ARGUMENT;
    case gaw::ErrorCode::validation: return GAW_ERR_VALIDATION;
    case gaw::ErrorCode::parse: return GAW_ERR_PARSE;
    case gaw::ErrorCode::io: return GAW_ERR_IO;
    case gaw::ErrorCode::unknown_rule: return GAW_ERR_UNKNOWN_RULE;
    case gaw::ErrorCode::version_mismatch: return GAW_ERR_VERSION_MISMATCH;
    case gaw::ErrorCode::checksum_mismatch: return GAW_ERR_CHECKSUM_MISMATCH;
    case gaw::ErrorCode::internal: return GAW_ERR_INTERNAL;
  }
  return GAW_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes + thread-local message.
template <typename Fn>
gaw_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return GAW_OK;
  } catch (const gaw::Error& e) {
    t_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return GAW_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return GAW_ERR_INTERNAL;
  }
}

gaw_status require(bool ok, const char* message) {
  if (ok) return GAW_OK;
  t_last_error = message;
  return GAW_ERR_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char* gaw_version(void) { return gaw::manifest::kEngineVersion; }

const char* gaw_status_name(gaw_status status) {
  switch (status) {
    case GAW_OK: return "ok";
    case GAW_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case GAW_ERR_VALIDATION: return "validation";
    case GAW_ERR_PARSE: return "parse";
    case GAW_ERR_IO: return "io";
    case GAW_ERR_UNKNOWN_RULE: return "unknown-rule";
    case GAW_ERR_VERSION_MISMATCH: return "version-mismatch";
    case GAW_ERR_CHECKSUM_MISMATCH: return "checksum-mismatch";
    case GAW_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* gaw_last_error(void) { return t_last_error.c_str(); }

/* ------------------------------------------------------------------ rng */

gaw_rng* gaw_rng_new(uint64_t seed) { return new gaw_rng{gaw::rng::seeded(seed)}; }

gaw_rng* gaw_rng_new_stream(uint64_t seed, uint64_t stream) {
  return new gaw_rng{gaw::rng::seeded_stream(seed, stream)};
}

void gaw_rng_free(gaw_rng* rng) { delete rng; }

double gaw_rng_next_unit(gaw_rng* rng) { return gaw::rng::next_unit(rng->state); }

gaw_status gaw_rng_next_int(gaw_rng* rng, int64_t lo, int64_t hi, int64_t* out) {
  if (auto st = require(rng && out, "rng and out must not be NULL")) return st;
  return guarded([&] { *out = gaw::rng::next_int(rng->state, lo, hi); });
}

/* ------------------------------------------------------------- measures */

gaw_status gaw_entropy(const double* p, size_t n, double* out) {
  if (auto st = require(p && out, "p and out must not be NULL")) return st;
  return guarded([&] {
    *out = gaw::measures::entropy(gaw::measures::Distribution(p, p + n));
  });
}

gaw_status gaw_redundancy(const double* p, size_t n, double* out) {
  if (auto st = require(p && out, "p and out must not be NULL")) return st;
  return guarded([&] {
    *out = gaw::measures::redundancy(gaw::measures::Distribution(p, p + n));
  });
}

gaw_status gaw_grid_new(int width, int height, int alphabet, const int* cells,
                        gaw_grid** out) {
  if (auto st = require(cells && out, "cells and out must not be NULL")) return st;
  *out = nullptr;
  return guarded([&] {
    gaw::measures::SymbolGrid g;
    g.width = width;
    g.height = height;
    g.alphabet = alphabet;
    if (width > 0 && height > 0)
      g.cells.assign(cells, cells + static_cast<size_t>(width) * static_cast<size_t>(height));
    gaw::measures::validate_grid(g);
    *out = new gaw_grid{std::move(g)};
  });
}

gaw_status gaw_grid_load(const char* path, int bins, gaw_grid** out) {
  if (auto st = require(path && out, "path and out must not be NULL")) return st;
  *out = nullptr;
  return guarded([&] { *out = new gaw_grid{gaw::grid_io::load_grid(path, bins)}; });
}

void gaw_grid_free(gaw_grid* grid) { delete grid; }

gaw_status gaw_grid_size(const gaw_grid* grid, int* width, int* height, int* alphabet) {
  if (auto st = require(grid != nullptr, "grid must not be NULL")) return st;
  if (width) *width = grid->grid.width;
  if (height) *height = grid->grid.height;
  if (alphabet) *alphabet = grid->grid.alphabet;
  return GAW_OK;
}

gaw_status gaw_grid_distribution(const gaw_grid* grid, double* probs, size_t cap,
                                 size_t* out_len) {
  if (auto st = require(grid && out_len, "grid and out_len must not be NULL")) return st;
  return guarded([&] {
    const auto p = gaw::measures::symbol_distribution(grid->grid);
    *out_len = p.size();
    if (probs == nullptr && cap > 0)
      gaw::fail(gaw::ErrorCode::invalid_argument, "probs is NULL but cap > 0");
    if (cap < p.size() && probs != nullptr)
      gaw::fail(gaw::ErrorCode::invalid_argument,
                "probs capacity " + std::to_string(cap) + " below alphabet size " +
                    std::to_string(p.size()));
    if (probs != nullptr)
      std::memcpy(probs, p.data(), p.size() * sizeof(double));
  });
}

gaw_status gaw_grid_block_entropy(const gaw_grid* grid, int block_w, int block_h,
                                  double* out) {
  if (auto st = require(grid && out, "grid and out must not be NULL")) return st;
  return guarded([&] {
    *out = gaw::measures::block_entropy(grid->grid, block_w, block_h);
  });
}

gaw_status gaw_grid_report(const gaw_grid* grid, const char* block_edges,
                           gaw_line_callback emit, void* user) {
  if (auto st = require(grid && emit, "grid and emit must not be NULL")) return st;
  return guarded([&] {
    std::vector<int> edges;
    if (block_edges != nullptr) {
      std::string tok;
      for (const char* c = block_edges;; ++c) {
        if (*c == ',' || *c == '\0') {
          long edge = 0;
          if (!tok.empty()) {
            if (!gaw::parse::to_long(tok, edge))
              gaw::fail(gaw::ErrorCode::invalid_argument, "bad block edge '" + tok + "'");
            edges.push_back(static_cast<int>(edge));
          }
          tok.clear();
          if (*c == '\0') break;
        } else {
          tok += *c;
        }
      }
    } else {
      edges = {1, 2, 4};
    }
    const std::string report = gaw::measures::report_csv(grid->grid, edges);
    std::string line;
    for (char c : report) {
      if (c == '\n') {
        emit(line.c_str(), user);
        line.clear();
      } else {
        line += c;
      }
    }
  });
}

gaw_status gaw_semantic_space_enumerate(const char* const* terms,
                                        const char* const* antonyms, size_t n,
                                        uint64_t* out_q,
                                        gaw_line_callback emit, void* user) {
  if (auto st = require(n == 0 || (terms && antonyms),
                        "terms and antonyms must not be NULL"))
    return st;
  return guarded([&] {
    std::vector<gaw::measures::PropertyPair> props;
    props.reserve(n);
    for (size_t i = 0; i < n; ++i)
      props.push_back({terms[i], antonyms[i]});
    const auto space = gaw::measures::enumerate_semantic_space(props);
    if (out_q) *out_q = space.q;
    if (emit)
      for (const std::string& conj : space.conjunctions) emit(conj.c_str(), user);
  });
}

/* ------------------------------------------------------------- graphics */

gaw_status gaw_gen_ncorner(int n, double page_w, double page_h, double margin,
                           double stroke_width, uint64_t seed, gaw_scene** out) {
  if (auto st = require(out != nullptr, "out must not be NULL")) return st;
  *out = nullptr;
  return guarded([&] {
    gaw::graphics::PageSpec page{page_w, page_h, margin, stroke_width};
    gaw::rng::State rng = gaw::rng::seeded(seed);
    *out = new gaw_scene{gaw::graphics::ncorner_scene(n, page, rng)};
  });
}

gaw_status gaw_gen_motif_grid(int rows, int cols, const char* cell_rule, int cell_n,
                              double page_w, double page_h, double margin,
                              double stroke_width, uint64_t seed, gaw_scene** out) {
  if (auto st = require(out && cell_rule, "out and cell_rule must not be NULL")) return st;
  *out = nullptr;
  return guarded([&] {
    gaw::graphics::PageSpec page{page_w, page_h, margin, stroke_width};
    gaw::graphics::MotifRule rule{cell_rule, cell_n};
    gaw::rng::State rng = gaw::rng::seeded(seed);
    *out = new gaw_scene{gaw::graphics::motif_grid(rows, cols, rule, page, rng)};
  });
}

gaw_status gaw_gen_density(int count, const char* orientations, const char* density_map,
                           double segment_length, double page_w, double page_h,
                           double margin, double stroke_width, uint64_t seed,
                           gaw_scene** out) {
  if (auto st = require(out && orientations && density_map,
                        "out, orientations and density_map must not be NULL"))
    return st;
  *out = nullptr;
  return guarded([&] {
    std::vector<gaw::graphics::Orientation> allowed;
    std::string tok;
    for (const char* c = orientations;; ++c) {
      if (*c == ',' || *c == '\0') {
        if (tok == "h") allowed.push_back(gaw::graphics::Orientation::horizontal);
        else if (tok == "v") allowed.push_back(gaw::graphics::Orientation::vertical);
        else if (tok == "oblique") allowed.push_back(gaw::graphics::Orientation::oblique);
        else if (!tok.empty())
          gaw::fail(gaw::ErrorCode::invalid_argument,
                    "orientation must be h, v or oblique, got '" + tok + "'");
        tok.clear();
        if (*c == '\0') break;
      } else {
        tok += *c;
      }
    }
    gaw::graphics::PageSpec page{page_w, page_h, margin, stroke_width};
    gaw::rng::State rng = gaw::rng::seeded(seed);
    *out = new gaw_scene{gaw::graphics::density_field(count, allowed, density_map,
                                                      segment_length, page, rng)};
  });
}

gaw_status gaw_gen_hommage(int rows, int cols, double jitter, const double state_weights[4],
                           int hatch_min, int hatch_max, double page_w, double page_h,
                           double margin, double stroke_width, uint64_t seed,
                           gaw_scene** out) {
  if (auto st = require(out && state_weights, "out and state_weights must not be NULL"))
    return st;
  *out = nullptr;
  return guarded([&] {
    gaw::graphics::HommageParams params;
    params.rows = rows;
    params.cols = cols;
    params.jitter = jitter;
    params.state_weights = {state_weights[0], state_weights[1], state_weights[2],
                            state_weights[3]};
    params.hatch_min = hatch_min;
    params.hatch_max = hatch_max;
    gaw::graphics::PageSpec page{page_w, page_h, margin, stroke_width};
    gaw::rng::State rng = gaw::rng::seeded(seed);
    *out = new gaw_scene{gaw::graphics::hommage_klee(params, page, rng)};
  });
}

void gaw_scene_free(gaw_scene* scene) { delete scene; }

gaw_status gaw_scene_stroke_count(const gaw_scene* scene, size_t* out) {
  if (auto st = require(scene && out, "scene and out must not be NULL")) return st;
  *out = scene->scene.strokes.size();
  return GAW_OK;
}

gaw_status gaw_scene_stroke_size(const gaw_scene* scene, size_t stroke, size_t* out) {
  if (auto st = require(scene && out, "scene and out must not be NULL")) return st;
  if (auto st = require(stroke < scene->scene.strokes.size(), "stroke index out of range"))
    return st;
  *out = scene->scene.strokes[stroke].points.size();
  return GAW_OK;
}

gaw_status gaw_scene_page(const gaw_scene* scene, double* width, double* height) {
  if (auto st = require(scene != nullptr, "scene must not be NULL")) return st;
  if (width) *width = scene->scene.width;
  if (height) *height = scene->scene.height;
  return GAW_OK;
}

gaw_status gaw_scene_crop(const gaw_scene* scene, double x0, double y0, double x1,
                          double y1, gaw_scene** out) {
  if (auto st = require(scene && out, "scene and out must not be NULL")) return st;
  *out = nullptr;
  return guarded([&] {
    *out = new gaw_scene{gaw::geom::crop_scene(scene->scene, {x0, y0, x1, y1})};
  });
}

gaw_status gaw_scene_rasterize(const gaw_scene* scene, int cols, int rows,
                               gaw_grid** out) {
  if (auto st = require(scene && out, "scene and out must not be NULL")) return st;
  *out = nullptr;
  return guarded([&] {
    *out = new gaw_grid{gaw::geom::rasterize(scene->scene, cols, rows)};
  });
}

gaw_status gaw_scene_write_svg(const gaw_scene* scene, const char* path) {
  if (auto st = require(scene && path, "scene and path must not be NULL")) return st;
  return guarded([&] { gaw::svg::write_svg_file(scene->scene, path); });
}

/* ------------------------------------------------------------ text gen */

gaw_status gaw_gen_lutz(const char* lexicon_path, const char* templates_path,
                        int n_sentences, uint64_t seed,
                        gaw_line_callback emit, void* user) {
  if (auto st = require(lexicon_path && templates_path && emit,
                        "lexicon_path, templates_path and emit must not be NULL"))
    return st;
  return guarded([&] {
    const auto lexicon = gaw::textgen::load_lexicon_file(lexicon_path);
    const auto templates = gaw::textgen::load_templates_file(templates_path);
    gaw::rng::State rng = gaw::rng::seeded(seed);
    for (const std::string& line :
         gaw::textgen::generate(lexicon, templates, n_sentences, rng))
      emit(line.c_str(), user);
  });
}

/* ----------------------------------------------------------- wave synth */

gaw_status gaw_spectrum_load(const char* path, gaw_spectrum** out) {
  if (auto st = require(path && out, "path and out must not be NULL")) return st;
  *out = nullptr;
  return guarded([&] {
    *out = new gaw_spectrum{gaw::wave::load_spectrum_csv_file(path)};
  });
}

void gaw_spectrum_free(gaw_spectrum* spectrum) { delete spectrum; }

gaw_status gaw_spectrum_m0(const gaw_spectrum* spectrum, double* out) {
  if (auto st = require(spectrum && out, "spectrum and out must not be NULL")) return st;
  return guarded([&] { *out = spectrum->spectrum.m0(); });
}

gaw_status gaw_spectrum_hs(const gaw_spectrum* spectrum, double* out) {
  if (auto st = require(spectrum && out, "spectrum and out must not be NULL")) return st;
  return guarded([&] { *out = gaw::wave::significant_wave_height(spectrum->spectrum); });
}

gaw_status gaw_spectrum_write_heatmap(const gaw_spectrum* spectrum, const char* path) {
  if (auto st = require(spectrum && path, "spectrum and path must not be NULL")) return st;
  return guarded([&] {
    gaw::wave::write_spectrum_heatmap_pgm_file(spectrum->spectrum, path);
  });
}

gaw_status gaw_spectrum_components(const gaw_spectrum* spectrum, uint64_t seed,
                                   double gravity, gaw_wave_component* components,
                                   size_t cap, size_t* out_n) {
  if (auto st = require(spectrum && out_n, "spectrum and out_n must not be NULL")) return st;
  return guarded([&] {
    gaw::rng::State rng = gaw::rng::seeded(seed);
    const auto drawn = gaw::wave::draw_components(spectrum->spectrum, rng, gravity);
    *out_n = drawn.size();
    if (components == nullptr) return;
    if (cap < drawn.size())
      gaw::fail(gaw::ErrorCode::invalid_argument,
                "component capacity " + std::to_string(cap) + " below count " +
                    std::to_string(drawn.size()));
    for (size_t i = 0; i < drawn.size(); ++i)
      components[i] = {drawn[i].amplitude, drawn[i].wavenumber, drawn[i].direction,
                       drawn[i].omega, drawn[i].phase};
  });
}

gaw_status gaw_wave_synthesize(const gaw_spectrum* spectrum, uint64_t seed,
                               double gravity, int nx, int ny, double dx, double dy,
                               double t, double origin_x, double origin_y,
                               gaw_field** out) {
  if (auto st = require(spectrum && out, "spectrum and out must not be NULL")) return st;
  *out = nullptr;
  return guarded([&] {
    gaw::rng::State rng = gaw::rng::seeded(seed);
    const auto components = gaw::wave::draw_components(spectrum->spectrum, rng, gravity);
    *out = new gaw_field{gaw::wave::synthesize_field(components, nx, ny, dx, dy, t,
                                                     origin_x, origin_y)};
  });
}

void gaw_field_free(gaw_field* field) { delete field; }

gaw_status gaw_field_size(const gaw_field* field, int* nx, int* ny) {
  if (auto st = require(field != nullptr, "field must not be NULL")) return st;
  if (nx) *nx = field->field.nx;
  if (ny) *ny = field->field.ny;
  return GAW_OK;
}

gaw_status gaw_field_height_at(const gaw_field* field, int ix, int iy, double* out) {
  if (auto st = require(field && out, "field and out must not be NULL")) return st;
  if (auto st = require(ix >= 0 && ix < field->field.nx && iy >= 0 && iy < field->field.ny,
                        "grid index out of range"))
    return st;
  *out = field->field.at(ix, iy);
  return GAW_OK;
}

gaw_status gaw_field_variance(const gaw_field* field, double* out) {
  if (auto st = require(field && out, "field and out must not be NULL")) return st;
  return guarded([&] { *out = gaw::wave::field_variance(field->field); });
}

gaw_status gaw_field_stats(const gaw_field* field, double* min, double* max, double* mean) {
  if (auto st = require(field != nullptr, "field must not be NULL")) return st;
  return guarded([&] {
    const auto st = gaw::wave::field_stats(field->field);
    if (min) *min = st.min;
    if (max) *max = st.max;
    if (mean) *mean = st.mean;
  });
}

gaw_status gaw_field_write_csv(const gaw_field* field, const char* path) {
  if (auto st = require(field && path, "field and path must not be NULL")) return st;
  return guarded([&] { gaw::wave::write_field_csv_file(field->field, path); });
}

gaw_status gaw_field_write_pgm(const gaw_field* field, const char* path) {
  if (auto st = require(field && path, "field and path must not be NULL")) return st;
  return guarded([&] { gaw::wave::write_field_pgm_file(field->field, path); });
}

/* --------------------------------------------------------- run / replay */

gaw_status gaw_run_rule(const char* rule_id, const char* const* param_keys,
                        const char* const* param_values, size_t n_params,
                        uint64_t seed, const char* const* output_paths,
                        size_t n_outputs) {
  if (auto st = require(rule_id != nullptr, "rule_id must not be NULL")) return st;
  if (auto st = require(n_params == 0 || (param_keys && param_values),
                        "param arrays must not be NULL"))
    return st;
  if (auto st = require(n_outputs == 0 || output_paths != nullptr,
                        "output_paths must not be NULL"))
    return st;
  return guarded([&] {
    gaw::runner::RunConfig config;
    config.rule_id = rule_id;
    config.seed = seed;
    for (size_t i = 0; i < n_params; ++i)
      config.params[param_keys[i]] = param_values[i];
    for (size_t i = 0; i < n_outputs; ++i)
      config.outputs.emplace_back(output_paths[i]);
    gaw::runner::run(config);
  });
}

gaw_status gaw_replay(const char* manifest_path) {
  if (auto st = require(manifest_path != nullptr, "manifest_path must not be NULL"))
    return st;
  return guarded([&] { gaw::runner::replay(manifest_path); });
}

} /* extern "C" */
