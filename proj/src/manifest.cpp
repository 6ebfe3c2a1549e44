#include "expander_forge/manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "expander_forge/errors.hpp"

namespace expander_forge {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json to_json(const RunManifest& m) {
  Json j;
  j["command_line"] = m.command_line;
  j["seed"] = m.seed ? Json(*m.seed) : Json(nullptr);
  j["version"] = m.version;
  j["rng"] = m.rng;
  j["started_at"] = m.started_at;
  j["finished_at"] = m.finished_at;
  Json outs = Json::array();
  for (const auto& o : m.outputs) outs.push_back({{"path", o.path}, {"sha256", o.sha256}});
  j["outputs"] = std::move(outs);
  return j;
}

RunManifest manifest_from_json(const Json& j) {
  try {
    RunManifest m;
    m.command_line = j.at("command_line").get<std::vector<std::string>>();
    if (!j.at("seed").is_null()) m.seed = j.at("seed").get<std::uint64_t>();
    m.version = j.at("version").get<std::string>();
    m.rng = j.at("rng").get<std::string>();
    m.started_at = j.at("started_at").get<std::string>();
    m.finished_at = j.at("finished_at").get<std::string>();
    for (const auto& o : j.at("outputs")) m.outputs.push_back({o.at("path"), o.at("sha256")});
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("run manifest: ") + e.what());
  }
}

void write_manifest(const std::filesystem::path& path, const RunManifest& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(m).dump(2) << '\n';
}

RunManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return manifest_from_json(Json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("run manifest: ") + e.what());
  }
}

}  // namespace expander_forge
