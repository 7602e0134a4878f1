#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

// Reproducibility manifests: the algorithmic half of every generated
// artifact. A manifest records (rule, parameters, seed, engine version) plus
// a SHA-256 per output file, so any output can be regenerated and checked
// byte-exactly without rereading generator code.

namespace gaw::manifest {

inline constexpr const char* kEngineName = "gaw";
inline constexpr const char* kEngineVersion = "0.1.0";

struct OutputRecord {
  std::string path; // as recorded; relative paths are relative to the manifest
  std::string sha256;
};

struct GenerationManifest {
  std::string rule_id;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> params; // canonical string values, sorted keys
  std::vector<OutputRecord> outputs;
  std::map<std::string, std::string> extra; // derived values (pgm min/max, ...)
  std::string engine_version = kEngineVersion;
};

// Sorted-key JSON with a trailing newline; byte-deterministic.
std::string to_json(const GenerationManifest& m);

GenerationManifest from_json(const std::string& json, const std::string& name);

void write_file(const GenerationManifest& m, const std::string& path);
GenerationManifest read_file(const std::string& path);

// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string& path);

} // namespace gaw::manifest
