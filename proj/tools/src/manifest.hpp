#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace infoimb::cli {

/// Reproducibility record written next to (or inside) every output.
/// Identical manifests up to `created_utc` imply byte-identical analytical
/// output, which the test harness checks by stripping that one field.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  std::string config_hash;
  struct InputDigest {
    std::string path;
    std::string digest;
  };
  std::vector<InputDigest> inputs;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::string tool_version;
  std::string created_utc;
};

/// FNV-1a 64-bit over a byte string, rendered as "fnv1a64:<hex>".
std::string fnv1a64_hex(const std::string& bytes);

/// Digest of a file's raw bytes. Throws data_error if unreadable.
std::string digest_file(const std::string& path);

RunManifest make_manifest(const std::string& command,
                          const std::vector<std::string>& argv,
                          const std::vector<std::string>& input_paths);

nlohmann::ordered_json to_json(const RunManifest& m);

/// Write a sidecar "<path>.manifest.json" next to a non-JSON output.
void write_sidecar(const std::string& out_path, const RunManifest& m);

}  // namespace infoimb::cli
