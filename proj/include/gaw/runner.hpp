#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gaw/manifest.hpp"

// Executes named generation rules from plain (key, value) string parameters
// and records a manifest per run. The CLI and `replay` both funnel through
// run(), so a manifest is regenerated by exactly the code path that produced
// it.
//
// Rules and their outputs:
//   nees-ncorner, nees-grid, density, hommage  -> one SVG
//   lutz                                       -> one text file
//   wave-synth                                 -> field CSV [+ optional PGM]
//   wave-heatmap                               -> one PGM
//   measure                                    -> one CSV report

namespace gaw::runner {

struct RunConfig {
  std::string rule_id;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  std::vector<std::string> outputs;
};

std::vector<std::string> rule_ids();

// `<first output>.manifest.json`
std::string manifest_path_for(const RunConfig& config);

// Runs the rule and writes its output files. The returned manifest carries
// the fully resolved parameter set (defaults included) and a SHA-256 per
// output; when write_manifest is set it is also written next to the first
// output. Unknown parameter keys are rejected.
manifest::GenerationManifest run(const RunConfig& config, bool write_manifest = true);

// Re-executes a recorded manifest (refusing on engine-version mismatch),
// rewriting the output files, then verifies every recorded checksum. A
// mismatch throws checksum_mismatch naming the differing files.
manifest::GenerationManifest replay(const std::string& manifest_path);

} // namespace gaw::runner
