#include "manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "infoimb/errors.hpp"

namespace infoimb::cli {

namespace {
constexpr const char* kToolVersion = "0.1.0";
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[28];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return fnv1a64_hex(ss.str());
}

RunManifest make_manifest(const std::string& command,
                          const std::vector<std::string>& argv,
                          const std::vector<std::string>& input_paths) {
  RunManifest m;
  m.command = command;
  m.argv = argv;
  std::string joined;
  for (const auto& a : argv) {
    joined += a;
    joined += '\0';
  }
  m.config_hash = fnv1a64_hex(joined);
  for (const auto& p : input_paths) {
    m.inputs.push_back({p, digest_file(p)});
  }
  m.tool_version = kToolVersion;

  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  m.created_utc = buf;
  return m;
}

nlohmann::ordered_json to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["argv"] = m.argv;
  j["config_hash"] = m.config_hash;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
  for (const auto& in : m.inputs) {
    inputs.push_back({{"path", in.path}, {"digest", in.digest}});
  }
  j["inputs"] = inputs;
  if (m.has_seed) j["seed"] = m.seed;
  j["tool_version"] = m.tool_version;
  j["created_utc"] = m.created_utc;
  return j;
}

void write_sidecar(const std::string& out_path, const RunManifest& m) {
  std::ofstream out(out_path + ".manifest.json");
  if (!out) throw data_error("cannot write manifest beside: " + out_path);
  out << to_json(m).dump(2) << "\n";
}

}  // namespace infoimb::cli
