// gaw command-line front end. All engine work happens behind the C API in
// libgaw; this file only parses flags, forwards them as (key, value) strings
// and reports errors.

#include <cstdio>
#include <cstdlib>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "gaw.h"

namespace {

struct ParamSet {
  std::vector<std::pair<std::string, std::string>> values; // key -> raw string
  std::vector<std::pair<std::string, CLI::Option*>> bound;
  std::deque<std::string> storage; // deque: stable addresses for CLI11 bindings

  // binds --flag to the manifest parameter `key`; only user-set flags are
  // forwarded so the runner owns every default
  CLI::Option* bind(CLI::App* cmd, const std::string& flag, const std::string& key,
                    const std::string& help) {
    storage.emplace_back();
    CLI::Option* opt = cmd->add_option(flag, storage.back(), help);
    bound.emplace_back(key, opt);
    return opt;
  }

  void collect(CLI::App*) {
    for (auto& [key, opt] : bound)
      if (opt->count() > 0) values.emplace_back(key, opt->results().front());
  }
};

std::uint64_t resolve_seed(CLI::Option* seed_opt, std::uint64_t seed_value) {
  if (seed_opt->count() > 0) return seed_value;
  if (const char* env = std::getenv("GAW_DEFAULT_SEED")) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      std::fprintf(stderr, "gaw: GAW_DEFAULT_SEED is not an unsigned integer: '%s'\n", env);
      std::exit(1);
    }
  }
  return 0; // remapped internally by the rng, never a clock
}

int report(gaw_status status) {
  if (status == GAW_OK) return 0;
  std::fprintf(stderr, "gaw: %s: %s\n", gaw_status_name(status), gaw_last_error());
  return status == GAW_ERR_CHECKSUM_MISMATCH ? 3 : 1;
}

int run_rule(const std::string& rule, ParamSet& params, std::uint64_t seed,
             const std::vector<std::string>& outputs) {
  std::vector<const char*> keys, vals, outs;
  for (auto& [k, v] : params.values) {
    keys.push_back(k.c_str());
    vals.push_back(v.c_str());
  }
  for (const std::string& o : outputs) outs.push_back(o.c_str());
  return report(gaw_run_rule(rule.c_str(), keys.data(), vals.data(), keys.size(), seed,
                             outs.data(), outs.size()));
}

void print_line(const char* line, void*) { std::printf("%s\n", line); }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"gaw — generative aesthetics workbench"};
  app.require_subcommand(1);

  struct GenCmd {
    CLI::App* cmd = nullptr;
    ParamSet params;
    CLI::Option* seed_opt = nullptr;
    std::uint64_t seed = 0;
    std::string out;
  };

  auto add_seed_out = [](GenCmd& g, bool out_required) {
    g.seed_opt = g.cmd->add_option("--seed", g.seed, "generation seed (default 0, or GAW_DEFAULT_SEED)");
    CLI::Option* o = g.cmd->add_option("-o,--out", g.out, "output file");
    if (out_required) o->required();
  };
  auto add_page = [](GenCmd& g) {
    g.params.bind(g.cmd, "--page-w", "page_w", "page width in mm (default 200)");
    g.params.bind(g.cmd, "--page-h", "page_h", "page height in mm (default 200)");
    g.params.bind(g.cmd, "--margin", "margin", "frame inset in mm (default 10)");
    g.params.bind(g.cmd, "--stroke-width", "stroke_width", "stroke width in mm (default 0.5)");
    g.params.bind(g.cmd, "--crop", "crop", "editorial crop rectangle x0,y0,x1,y1");
  };

  CLI::App* gen = app.add_subcommand("gen", "generate a stochastic graphic or text");
  gen->require_subcommand(1);

  GenCmd ncorner;
  ncorner.cmd = gen->add_subcommand("nees-ncorner", "closed random polygon of n vertices");
  ncorner.params.bind(ncorner.cmd, "--n", "n", "number of corners (>= 3)")->required();
  add_page(ncorner);
  add_seed_out(ncorner, true);

  GenCmd grid;
  grid.cmd = gen->add_subcommand("nees-grid", "grid of independently drawn motifs");
  grid.params.bind(grid.cmd, "--rows", "rows", "grid rows")->required();
  grid.params.bind(grid.cmd, "--cols", "cols", "grid columns")->required();
  grid.params.bind(grid.cmd, "--cell-rule", "cell_rule", "motif rule per cell (ncorner)");
  grid.params.bind(grid.cmd, "--cell-n", "cell_n", "corners per motif (default 8)");
  add_page(grid);
  add_seed_out(grid, true);

  GenCmd density;
  density.cmd = gen->add_subcommand("density", "segments placed by a density map");
  density.params.bind(density.cmd, "--count", "count", "number of segments")->required();
  density.params.bind(density.cmd, "--orientations", "orientations",
                      "subset of h,v,oblique (default all)");
  density.params.bind(density.cmd, "--density", "density",
                      "density map: uniform, ramp-x, ramp-y, radial");
  density.params.bind(density.cmd, "--length", "length", "segment length in mm (default 10)");
  add_page(density);
  add_seed_out(density, true);

  GenCmd hommage;
  hommage.cmd = gen->add_subcommand("hommage", "two-level jittered mesh with cell states");
  hommage.params.bind(hommage.cmd, "--rows", "rows", "mesh rows")->required();
  hommage.params.bind(hommage.cmd, "--cols", "cols", "mesh columns")->required();
  hommage.params.bind(hommage.cmd, "--jitter", "jitter", "vertex jitter in [0, 0.5) (default 0.2)");
  hommage.params.bind(hommage.cmd, "--states", "states",
                      "weights over h-hatch,v-hatch,empty,diagonal (default uniform)");
  hommage.params.bind(hommage.cmd, "--hatch-min", "hatch_min", "min chords per hatched cell");
  hommage.params.bind(hommage.cmd, "--hatch-max", "hatch_max", "max chords per hatched cell");
  add_page(hommage);
  add_seed_out(hommage, true);

  GenCmd lutz;
  lutz.cmd = gen->add_subcommand("lutz", "stochastic sentences from a lexicon");
  lutz.params.bind(lutz.cmd, "--lexicon", "lexicon", "lexicon file")->required();
  lutz.params.bind(lutz.cmd, "--templates", "templates", "template file")->required();
  lutz.params.bind(lutz.cmd, "--n", "n", "number of sentences (default 8)");
  add_seed_out(lutz, false); // stdout unless -o

  GenCmd measure;
  measure.cmd = app.add_subcommand("measure", "entropy report over a PGM or CSV grid");
  measure.params.bind(measure.cmd, "--input", "input", "input .pgm or .csv grid")->required();
  measure.params.bind(measure.cmd, "--bins", "bins", "gray quantization bins for PGM (default 8)");
  measure.params.bind(measure.cmd, "--blocks", "blocks", "block edges, e.g. 1,2,4");
  add_seed_out(measure, false);

  CLI::App* wave = app.add_subcommand("wave", "directional-spectrum wave synthesis");
  wave->require_subcommand(1);

  GenCmd synth;
  synth.cmd = wave->add_subcommand("synth", "synthesize a height field");
  synth.params.bind(synth.cmd, "--spectrum", "spectrum", "spectrum CSV")->required();
  synth.params.bind(synth.cmd, "--nx", "nx", "grid cells in x")->required();
  synth.params.bind(synth.cmd, "--ny", "ny", "grid cells in y")->required();
  synth.params.bind(synth.cmd, "--dx", "dx", "grid spacing in m (default 1)");
  synth.params.bind(synth.cmd, "--dy", "dy", "grid spacing in m (default 1)");
  synth.params.bind(synth.cmd, "--t", "t", "time instant in s (default 0)");
  synth.params.bind(synth.cmd, "--origin-x", "origin_x", "grid origin x in m");
  synth.params.bind(synth.cmd, "--origin-y", "origin_y", "grid origin y in m");
  synth.params.bind(synth.cmd, "--gravity", "gravity", "gravity in m/s^2 (default 9.81)");
  std::string synth_pgm;
  synth.cmd->add_option("--pgm", synth_pgm, "also write a normalized PGM rendering");
  add_seed_out(synth, true);

  std::string hs_spectrum;
  CLI::App* hs = wave->add_subcommand("hs", "print the significant wave height");
  hs->add_option("--spectrum", hs_spectrum, "spectrum CSV")->required();

  GenCmd heatmap;
  heatmap.cmd = wave->add_subcommand("heatmap", "PGM heatmap of S over f x theta");
  heatmap.params.bind(heatmap.cmd, "--spectrum", "spectrum", "spectrum CSV")->required();
  add_seed_out(heatmap, true);

  std::string replay_path;
  CLI::App* replay = app.add_subcommand("replay", "regenerate outputs from a manifest");
  replay->add_option("manifest", replay_path, "manifest JSON path")->required();

  CLI11_PARSE(app, argc, argv);

  auto finish = [&](GenCmd& g, const char* rule) {
    g.params.collect(g.cmd);
    return run_rule(rule, g.params, resolve_seed(g.seed_opt, g.seed), {g.out});
  };

  if (ncorner.cmd->parsed()) return finish(ncorner, "nees-ncorner");
  if (grid.cmd->parsed()) return finish(grid, "nees-grid");
  if (density.cmd->parsed()) return finish(density, "density");
  if (hommage.cmd->parsed()) return finish(hommage, "hommage");

  if (lutz.cmd->parsed()) {
    lutz.params.collect(lutz.cmd);
    if (!lutz.out.empty()) return finish(lutz, "lutz");
    std::string lexicon, templates;
    long n = 8;
    for (auto& [k, v] : lutz.params.values) {
      if (k == "lexicon") lexicon = v;
      if (k == "templates") templates = v;
      if (k == "n") n = std::atol(v.c_str());
    }
    return report(gaw_gen_lutz(lexicon.c_str(), templates.c_str(), static_cast<int>(n),
                               resolve_seed(lutz.seed_opt, lutz.seed), print_line, nullptr));
  }

  if (measure.cmd->parsed()) {
    measure.params.collect(measure.cmd);
    if (!measure.out.empty()) return finish(measure, "measure");
    std::string input, blocks = "1,2,4";
    long bins = 8;
    for (auto& [k, v] : measure.params.values) {
      if (k == "input") input = v;
      if (k == "bins") bins = std::atol(v.c_str());
      if (k == "blocks") blocks = v;
    }
    gaw_grid* g = nullptr;
    if (gaw_status st = gaw_grid_load(input.c_str(), static_cast<int>(bins), &g))
      return report(st);
    const gaw_status st = gaw_grid_report(g, blocks.c_str(), print_line, nullptr);
    gaw_grid_free(g);
    return report(st);
  }

  if (synth.cmd->parsed()) {
    synth.params.collect(synth.cmd);
    std::vector<std::string> outs{synth.out};
    if (!synth_pgm.empty()) outs.push_back(synth_pgm);
    return run_rule("wave-synth", synth.params, resolve_seed(synth.seed_opt, synth.seed), outs);
  }

  if (hs->parsed()) {
    gaw_spectrum* s = nullptr;
    if (gaw_status st = gaw_spectrum_load(hs_spectrum.c_str(), &s)) return report(st);
    double value = 0.0;
    const gaw_status st = gaw_spectrum_hs(s, &value);
    gaw_spectrum_free(s);
    if (st != GAW_OK) return report(st);
    std::printf("%.6f\n", value);
    return 0;
  }

  if (heatmap.cmd->parsed()) {
    heatmap.params.collect(heatmap.cmd);
    return run_rule("wave-heatmap", heatmap.params,
                    resolve_seed(heatmap.seed_opt, heatmap.seed), {heatmap.out});
  }

  if (replay->parsed()) {
    const int rc = report(gaw_replay(replay_path.c_str()));
    if (rc == 0) std::printf("replay ok: outputs match recorded checksums\n");
    return rc;
  }

  return 0;
}
