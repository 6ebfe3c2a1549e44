#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "expander_forge/report.hpp"

namespace expander_forge {

inline constexpr const char* kVersion = "0.1.0";

struct OutputDigest {
  std::string path;
  std::string sha256;  // lowercase hex

  friend bool operator==(const OutputDigest&, const OutputDigest&) = default;
};

/// Provenance of one CLI run. Re-running the same command line reproduces
/// every listed output byte for byte.
struct RunManifest {
  std::vector<std::string> command_line;
  std::optional<std::uint64_t> seed;
  std::string version = kVersion;
  std::string rng;
  std::string started_at;   // ISO 8601, UTC
  std::string finished_at;
  std::vector<OutputDigest> outputs;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

std::string sha256_hex(const std::string& bytes);
/// Throws std::runtime_error if the file cannot be read.
std::string sha256_file(const std::filesystem::path& path);

/// Current time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

Json to_json(const RunManifest& m);
/// Throws ParseError on missing or mistyped fields.
RunManifest manifest_from_json(const Json& j);

void write_manifest(const std::filesystem::path& path, const RunManifest& m);
RunManifest read_manifest(const std::filesystem::path& path);

}  // namespace expander_forge
