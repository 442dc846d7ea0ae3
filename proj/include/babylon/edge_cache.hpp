#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "babylon/triples.hpp"

namespace babylon {

/// Edge cache, plain text: header `babylon-edges v1 n=<n>`, then one line
/// `a b c` per edge, ascending (a, b). Byte-stable for a given n.
struct EdgeCache {
  std::uint32_t n = 0;
  std::vector<Edge> edges;
};

std::string render_edge_cache(std::uint32_t n, const std::vector<Edge>& edges);
void write_edge_cache(const std::string& path, std::uint32_t n, const std::vector<Edge>& edges);

/// Parses and validates a cache file; throws std::runtime_error on a bad
/// header, unsorted rows, or a hypotenuse that does not match the legs.
EdgeCache read_edge_cache(const std::string& path);

}  // namespace babylon
