#include "gaw/runner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "gaw/error.hpp"
#include "gaw/graphics.hpp"
#include "gaw/grid_io.hpp"
#include "gaw/measures.hpp"
#include "gaw/numfmt.hpp"
#include "gaw/parse.hpp"
#include "gaw/rng.hpp"
#include "gaw/svg.hpp"
#include "gaw/textgen.hpp"
#include "gaw/wave.hpp"

namespace fs = std::filesystem;

namespace gaw::runner {

namespace {

// Pulls typed values out of the raw (key, value) strings, records the
// resolved value (user literal or rendered default) for the manifest, and
// rejects keys no rule consumed.
class Params {
public:
  Params(const std::string& rule, const std::map<std::string, std::string>& raw)
      : rule_(rule), raw_(raw) {}

  std::string get_string(const std::string& key, const std::string& def) {
    used_.insert(key);
    const auto it = raw_.find(key);
    const std::string v = it == raw_.end() ? def : it->second;
    resolved_[key] = v;
    return v;
  }

  std::string require_string(const std::string& key) {
    used_.insert(key);
    const auto it = raw_.find(key);
    if (it == raw_.end())
      fail(ErrorCode::invalid_argument, rule_ + ": missing required parameter '" + key + "'");
    resolved_[key] = it->second;
    return it->second;
  }

  long get_int(const std::string& key, long def) {
    return parse_int(key, get_string(key, std::to_string(def)));
  }

  long require_int(const std::string& key) { return parse_int(key, require_string(key)); }

  double get_double(const std::string& key, const std::string& def_literal) {
    return parse_double(key, get_string(key, def_literal));
  }

  // optional key: resolved only when present
  bool get_optional_string(const std::string& key, std::string& out) {
    used_.insert(key);
    const auto it = raw_.find(key);
    if (it == raw_.end()) return false;
    resolved_[key] = it->second;
    out = it->second;
    return true;
  }

  void finish() {
    for (const auto& [k, _] : raw_)
      if (used_.find(k) == used_.end())
        fail(ErrorCode::invalid_argument, rule_ + ": unknown parameter '" + k + "'");
  }

  const std::map<std::string, std::string>& resolved() const { return resolved_; }

private:
  long parse_int(const std::string& key, const std::string& v) {
    long n = 0;
    if (!parse::to_long(v, n))
      fail(ErrorCode::invalid_argument,
           rule_ + ": parameter '" + key + "' is not an integer: '" + v + "'");
    return n;
  }

  double parse_double(const std::string& key, const std::string& v) {
    double x = 0.0;
    if (!parse::to_double(v, x))
      fail(ErrorCode::invalid_argument,
           rule_ + ": parameter '" + key + "' is not a number: '" + v + "'");
    return x;
  }

  std::string rule_;
  std::map<std::string, std::string> raw_;
  std::set<std::string> used_;
  std::map<std::string, std::string> resolved_;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

graphics::PageSpec read_page(Params& p) {
  graphics::PageSpec page;
  page.width = p.get_double("page_w", "200");
  page.height = p.get_double("page_h", "200");
  page.margin = p.get_double("margin", "10");
  page.stroke_width = p.get_double("stroke_width", "0.5");
  return page;
}

geom::Scene apply_crop(Params& p, geom::Scene scene) {
  std::string spec;
  if (!p.get_optional_string("crop", spec)) return scene;
  const auto parts = split_csv(spec);
  if (parts.size() != 4)
    fail(ErrorCode::invalid_argument, "crop must be 'x0,y0,x1,y1', got '" + spec + "'");
  geom::Rect r;
  if (!parse::to_double(parts[0], r.x0) || !parse::to_double(parts[1], r.y0) ||
      !parse::to_double(parts[2], r.x1) || !parse::to_double(parts[3], r.y1))
    fail(ErrorCode::invalid_argument, "crop must be numeric: '" + spec + "'");
  return geom::crop_scene(scene, r);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(ErrorCode::io, "cannot write '" + path + "'");
  out << content;
  if (!out)
    fail(ErrorCode::io, "error writing '" + path + "'");
}

void expect_outputs(const RunConfig& config, std::size_t lo, std::size_t hi) {
  if (config.outputs.size() < lo || config.outputs.size() > hi)
    fail(ErrorCode::invalid_argument,
         config.rule_id + ": expected " + std::to_string(lo) +
             (hi > lo ? ".." + std::to_string(hi) : "") + " output path(s), got " +
             std::to_string(config.outputs.size()));
}

// ---------------------------------------------------------------- rules

void run_svg_rule(const RunConfig& config, Params& p,
                  manifest::GenerationManifest& out) {
  rng::State rng = rng::seeded(config.seed);
  geom::Scene scene;

  if (config.rule_id == "nees-ncorner") {
    const long n = p.require_int("n");
    const graphics::PageSpec page = read_page(p);
    scene = graphics::ncorner_scene(static_cast<int>(n), page, rng);
  } else if (config.rule_id == "nees-grid") {
    const long rows = p.require_int("rows");
    const long cols = p.require_int("cols");
    graphics::MotifRule rule;
    rule.id = p.get_string("cell_rule", "ncorner");
    rule.corners = static_cast<int>(p.get_int("cell_n", 8));
    const graphics::PageSpec page = read_page(p);
    scene = graphics::motif_grid(static_cast<int>(rows), static_cast<int>(cols), rule, page, rng);
  } else if (config.rule_id == "density") {
    const long count = p.require_int("count");
    std::vector<graphics::Orientation> orient;
    for (const std::string& tok : split_csv(p.get_string("orientations", "h,v,oblique"))) {
      if (tok == "h") orient.push_back(graphics::Orientation::horizontal);
      else if (tok == "v") orient.push_back(graphics::Orientation::vertical);
      else if (tok == "oblique") orient.push_back(graphics::Orientation::oblique);
      else
        fail(ErrorCode::invalid_argument,
             "density: orientation must be h, v or oblique, got '" + tok + "'");
    }
    const std::string density = p.get_string("density", "uniform");
    const double length = p.get_double("length", "10");
    const graphics::PageSpec page = read_page(p);
    scene = graphics::density_field(static_cast<int>(count), orient, density, length, page, rng);
  } else if (config.rule_id == "hommage") {
    graphics::HommageParams hp;
    hp.rows = static_cast<int>(p.require_int("rows"));
    hp.cols = static_cast<int>(p.require_int("cols"));
    hp.jitter = p.get_double("jitter", "0.2");
    const auto weights = split_csv(p.get_string("states", "0.25,0.25,0.25,0.25"));
    if (weights.size() != 4)
      fail(ErrorCode::invalid_argument,
           "hommage: states must be 4 comma-separated weights over "
           "h-hatch,v-hatch,empty,diagonal");
    for (std::size_t i = 0; i < 4; ++i)
      if (!parse::to_double(weights[i], hp.state_weights[i]))
        fail(ErrorCode::invalid_argument, "hommage: bad state weight '" + weights[i] + "'");
    hp.hatch_min = static_cast<int>(p.get_int("hatch_min", 3));
    hp.hatch_max = static_cast<int>(p.get_int("hatch_max", 8));
    const graphics::PageSpec page = read_page(p);
    scene = graphics::hommage_klee(hp, page, rng);
  } else {
    fail(ErrorCode::internal, "not an svg rule: " + config.rule_id);
  }

  scene = apply_crop(p, scene);
  p.finish();
  svg::write_svg_file(scene, config.outputs[0]);
  out.extra["strokes"] = std::to_string(scene.strokes.size());
}

void run_lutz(const RunConfig& config, Params& p, manifest::GenerationManifest&) {
  const std::string lexicon_path = p.require_string("lexicon");
  const std::string templates_path = p.require_string("templates");
  const long n = p.get_int("n", 8);
  p.finish();
  const textgen::Lexicon lexicon = textgen::load_lexicon_file(lexicon_path);
  const auto templates = textgen::load_templates_file(templates_path);
  rng::State rng = rng::seeded(config.seed);
  const auto lines = textgen::generate(lexicon, templates, static_cast<int>(n), rng);
  std::string content;
  for (const std::string& line : lines) content += line + "\n";
  write_text_file(config.outputs[0], content);
}

void run_wave_synth(const RunConfig& config, Params& p,
                    manifest::GenerationManifest& out) {
  const std::string spectrum_path = p.require_string("spectrum");
  const long nx = p.require_int("nx");
  const long ny = p.require_int("ny");
  const double dx = p.get_double("dx", "1");
  const double dy = p.get_double("dy", "1");
  const double t = p.get_double("t", "0");
  const double ox = p.get_double("origin_x", "0");
  const double oy = p.get_double("origin_y", "0");
  const double g = p.get_double("gravity", "9.81");
  p.finish();

  const wave::DirectionalSpectrum spectrum = wave::load_spectrum_csv_file(spectrum_path);
  rng::State rng = rng::seeded(config.seed);
  const auto components = wave::draw_components(spectrum, rng, g);
  const wave::WaveField field = wave::synthesize_field(
      components, static_cast<int>(nx), static_cast<int>(ny), dx, dy, t, ox, oy);

  wave::write_field_csv_file(field, config.outputs[0]);
  const wave::FieldStats st = wave::field_stats(field);
  out.extra["components"] = std::to_string(components.size());
  out.extra["m0_m2"] = numfmt::scientific(spectrum.m0(), 9);
  out.extra["hs_m"] = numfmt::scientific(wave::significant_wave_height(spectrum), 9);
  out.extra["field_min_m"] = numfmt::scientific(st.min, 9);
  out.extra["field_max_m"] = numfmt::scientific(st.max, 9);
  if (config.outputs.size() == 2)
    wave::write_field_pgm_file(field, config.outputs[1]);
}

void run_wave_heatmap(const RunConfig& config, Params& p,
                      manifest::GenerationManifest& out) {
  const std::string spectrum_path = p.require_string("spectrum");
  p.finish();
  const wave::DirectionalSpectrum spectrum = wave::load_spectrum_csv_file(spectrum_path);
  const double smax = wave::write_spectrum_heatmap_pgm_file(spectrum, config.outputs[0]);
  out.extra["s_max_m2_per_hz_rad"] = numfmt::scientific(smax, 9);
}

void run_measure(const RunConfig& config, Params& p, manifest::GenerationManifest&) {
  const std::string input = p.require_string("input");
  const long bins = p.get_int("bins", 8);
  const std::string blocks = p.get_string("blocks", "1,2,4");
  p.finish();
  std::vector<int> edges;
  for (const std::string& tok : split_csv(blocks)) {
    long edge = 0;
    if (!parse::to_long(tok, edge))
      fail(ErrorCode::invalid_argument, "measure: bad block edge '" + tok + "'");
    edges.push_back(static_cast<int>(edge));
  }
  const measures::SymbolGrid grid = grid_io::load_grid(input, static_cast<int>(bins));
  write_text_file(config.outputs[0], measures::report_csv(grid, edges));
}

} // namespace

std::vector<std::string> rule_ids() {
  return {"nees-ncorner", "nees-grid", "density", "hommage",
          "lutz",         "wave-synth", "wave-heatmap", "measure"};
}

std::string manifest_path_for(const RunConfig& config) {
  if (config.outputs.empty())
    fail(ErrorCode::invalid_argument, "run has no output paths");
  return config.outputs[0] + ".manifest.json";
}

manifest::GenerationManifest run(const RunConfig& config, bool write_manifest) {
  manifest::GenerationManifest m;
  m.rule_id = config.rule_id;
  m.seed = config.seed;

  Params p(config.rule_id, config.params);
  const auto& ids = rule_ids();
  if (std::find(ids.begin(), ids.end(), config.rule_id) == ids.end()) {
    std::string known;
    for (const std::string& id : ids) known += (known.empty() ? "" : ", ") + id;
    fail(ErrorCode::unknown_rule,
         "unknown rule '" + config.rule_id + "' (known: " + known + ")");
  }

  if (config.rule_id == "wave-synth")
    expect_outputs(config, 1, 2);
  else
    expect_outputs(config, 1, 1);

  if (config.rule_id == "lutz")
    run_lutz(config, p, m);
  else if (config.rule_id == "wave-synth")
    run_wave_synth(config, p, m);
  else if (config.rule_id == "wave-heatmap")
    run_wave_heatmap(config, p, m);
  else if (config.rule_id == "measure")
    run_measure(config, p, m);
  else
    run_svg_rule(config, p, m);

  m.params = p.resolved();

  // outputs are recorded relative to the manifest's directory when they live
  // under it, so a run directory can be moved wholesale and still replay
  const fs::path manifest_dir = fs::path(manifest_path_for(config)).parent_path();
  for (const std::string& out_path : config.outputs) {
    manifest::OutputRecord rec;
    const fs::path op(out_path);
    if (op.is_absolute() == manifest_dir.is_absolute())
      rec.path = op.lexically_proximate(manifest_dir).generic_string();
    else if (op.is_absolute())
      rec.path = op.generic_string();
    else
      rec.path = fs::absolute(op).generic_string();
    rec.sha256 = manifest::sha256_file(out_path);
    m.outputs.push_back(rec);
  }

  if (write_manifest)
    manifest::write_file(m, manifest_path_for(config));
  return m;
}

manifest::GenerationManifest replay(const std::string& manifest_path) {
  const manifest::GenerationManifest recorded = manifest::read_file(manifest_path);
  if (recorded.engine_version != manifest::kEngineVersion)
    fail(ErrorCode::version_mismatch,
         "manifest '" + manifest_path + "' was written by engine version " +
             recorded.engine_version + ", this engine is " + manifest::kEngineVersion +
             "; refusing to replay");

  const fs::path dir = fs::path(manifest_path).parent_path();
  RunConfig config;
  config.rule_id = recorded.rule_id;
  config.seed = recorded.seed;
  config.params = recorded.params;
  for (const manifest::OutputRecord& rec : recorded.outputs) {
    fs::path p(rec.path);
    config.outputs.push_back(p.is_absolute() ? p.string() : (dir / p).string());
  }

  const manifest::GenerationManifest fresh = run(config, /*write_manifest=*/false);

  std::string mismatches;
  for (std::size_t i = 0; i < recorded.outputs.size(); ++i)
    if (recorded.outputs[i].sha256 != fresh.outputs[i].sha256)
      mismatches += (mismatches.empty() ? "" : ", ") + recorded.outputs[i].path;
  if (!mismatches.empty())
    fail(ErrorCode::checksum_mismatch,
         "replayed outputs differ from recorded checksums: " + mismatches);
  return fresh;
}

} // namespace gaw::runner
