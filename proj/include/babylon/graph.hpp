#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "babylon/errors.hpp"
#include "babylon/triples.hpp"

namespace babylon {

/// Immutable graph on vertices 1..n with an edge between a and b whenever
/// a^2 + b^2 is a perfect square. Compressed sorted adjacency plus a
/// per-vertex component label; the label of a component is its smallest
/// vertex. Safe to share across threads once built.
struct BabylonGraph {
  std::uint32_t n = 0;
  std::vector<std::uint64_t> offsets;       // size n + 2, offsets[1] == 0
  std::vector<std::uint32_t> adj;           // neighbor lists, ascending per vertex
  std::vector<std::uint32_t> component_id;  // size n + 1, entry 0 unused

  std::span<const std::uint32_t> adjacency(std::uint32_t v) const {
    return {adj.data() + offsets[v], adj.data() + offsets[v + 1]};
  }
  std::uint32_t degree(std::uint32_t v) const {
    return static_cast<std::uint32_t>(offsets[v + 1] - offsets[v]);
  }
  std::uint64_t edge_count() const { return adj.size() / 2; }
  bool has_edge(std::uint32_t a, std::uint32_t b) const;
};

struct ComponentSummary {
  std::uint32_t representative = 0;
  std::uint32_t size = 0;
  std::uint64_t edge_count = 0;
  bool has_triangle = false;
};

struct BuildOptions {
  std::uint32_t max_n = 1'000'000;
};

/// Builds the graph over 1..n. Throws ResourceLimitError beyond the ceiling.
BabylonGraph build(std::uint32_t n, const BuildOptions& opts = {});

/// Assembles a graph from an explicit edge list (cache loads, fixtures).
BabylonGraph graph_from_edges(std::uint32_t n, const std::vector<Edge>& edges);

/// Summaries of every component, ascending by representative.
std::vector<ComponentSummary> component_summaries(const BabylonGraph& g);

/// The largest component; ties broken by smallest representative.
ComponentSummary main_component(const BabylonGraph& g);

/// Vertices of one component, ascending.
std::vector<std::uint32_t> component_vertices(const BabylonGraph& g, std::uint32_t representative);

struct DiameterOptions {
  std::uint32_t max_component_size = 100'000;
};

/// Exact diameter of one component: max eccentricity over breadth-first
/// searches from every vertex, parallel over sources.
std::uint32_t diameter(const BabylonGraph& g, const ComponentSummary& component,
                       const DiameterOptions& opts = {});

std::vector<std::uint32_t> isolated_vertices(const BabylonGraph& g);

/// Degree-1 vertices of this finite truncation. A truncation leaf need not
/// stay a leaf as n grows; the unbounded statement is neighbors_unbounded's.
std::vector<std::uint32_t> leaves(const BabylonGraph& g);

std::map<std::uint32_t, std::uint64_t> degree_histogram(const BabylonGraph& g);

/// Breadth-first search in the unbounded graph (partners via
/// neighbors_unbounded, intermediate values capped at `bound`, default
/// 100 * v) for a shortest path from v to some multiple m * v, m >= 2.
/// Absence within the limits is a valid outcome.
std::optional<std::vector<u64>> find_scaling_path(u64 v, std::uint32_t max_depth = 8,
                                                  u64 bound = 0);

}  // namespace babylon
