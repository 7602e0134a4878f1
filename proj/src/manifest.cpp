#include "gaw/manifest.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include <json.hpp>

#include "gaw/error.hpp"

namespace gaw::manifest {

using nlohmann::json;

std::string to_json(const GenerationManifest& m) {
  json j;
  j["engine"] = kEngineName;
  j["engine_version"] = m.engine_version;
  j["rule_id"] = m.rule_id;
  j["seed"] = m.seed;
  j["params"] = json::object();
  for (const auto& [k, v] : m.params) j["params"][k] = v;
  j["outputs"] = json::array();
  for (const OutputRecord& out : m.outputs)
    j["outputs"].push_back(json{{"path", out.path}, {"sha256", out.sha256}});
  j["extra"] = json::object();
  for (const auto& [k, v] : m.extra) j["extra"][k] = v;
  return j.dump(2) + "\n";
}

GenerationManifest from_json(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::parse, name + ": " + e.what());
  }
  try {
    GenerationManifest m;
    m.engine_version = j.at("engine_version").get<std::string>();
    m.rule_id = j.at("rule_id").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("params").items())
      m.params[k] = v.get<std::string>();
    for (const auto& out : j.at("outputs"))
      m.outputs.push_back({out.at("path").get<std::string>(),
                           out.at("sha256").get<std::string>()});
    if (j.contains("extra"))
      for (const auto& [k, v] : j.at("extra").items())
        m.extra[k] = v.get<std::string>();
    return m;
  } catch (const json::exception& e) {
    fail(ErrorCode::parse, name + ": malformed manifest: " + e.what());
  }
}

void write_file(const GenerationManifest& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(ErrorCode::io, "cannot write '" + path + "'");
  out << to_json(m);
  if (!out)
    fail(ErrorCode::io, "error writing '" + path + "'");
}

GenerationManifest read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str(), path);
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::io, "cannot open '" + path + "' for hashing");

  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
    EVP_MD_CTX_free(ctx);
    fail(ErrorCode::internal, "SHA-256 init failed");
  }
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    const std::streamsize got = in.gcount();
    if (got > 0 && EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(got)) != 1) {
      EVP_MD_CTX_free(ctx);
      fail(ErrorCode::internal, "SHA-256 update failed");
    }
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
    EVP_MD_CTX_free(ctx);
    fail(ErrorCode::internal, "SHA-256 final failed");
  }
  EVP_MD_CTX_free(ctx);

  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

} // namespace gaw::manifest
