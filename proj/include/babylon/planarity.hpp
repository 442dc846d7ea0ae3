#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "babylon/graph.hpp"

namespace babylon {

struct PlanarityVerdict {
  bool planar = false;
  /// Best-effort forbidden-subgraph witness: the edge set of an
  /// edge-minimal non-planar subgraph (a subdivision of K5 or K3,3).
  /// Extracted only for graphs small enough to afford the reduction;
  /// absent whenever planar.
  std::optional<std::vector<Edge>> witness;
};

/// Left-right planarity criterion on a simple undirected graph given as a
/// canonical edge list over vertices 1..n. Linear in vertices + edges.
bool lr_planar(std::uint32_t n, const std::vector<Edge>& edges);

/// Verdict for the whole graph (planar iff every component is), with
/// witness extraction attempted below `witness_edge_cap` edges.
PlanarityVerdict is_planar(const BabylonGraph& g, std::size_t witness_edge_cap = 500);

}  // namespace babylon
