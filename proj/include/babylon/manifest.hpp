#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace babylon {

inline constexpr const char* kArtifactVersion = "1.0.0";

/// FNV-1a over bytes, rendered as 16 hex digits. Used for result and input
/// digests in run manifests; not cryptographic.
std::string fnv1a_hex(std::string_view bytes);

/// Reproducibility record written next to command outputs: identical
/// inputs and version must produce an identical result digest.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::map<std::string, std::string> input_digests;  // path -> digest
  double wall_clock_seconds = 0;
  std::string result_digest;
};

std::string render_manifest(const RunManifest& m);
void write_manifest(const std::string& path, const RunManifest& m);

}  // namespace babylon
