#include "babylon/manifest.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace babylon {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string render_manifest(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["parameters"] = m.parameters;
  j["version"] = kArtifactVersion;
  j["input_digests"] = m.input_digests;
  j["wall_clock_seconds"] = m.wall_clock_seconds;
  j["result_digest"] = m.result_digest;
  return j.dump(2) + "\n";
}

void write_manifest(const std::string& path, const RunManifest& m) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open manifest for writing: " + path);
  f << render_manifest(m);
}

}  // namespace babylon
