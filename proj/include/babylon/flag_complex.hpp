#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "babylon/graph.hpp"

namespace babylon {

enum class Scope { Whole, Main };

/// Clique complex of the graph up to dimension 3: vertices, edges,
/// triangles, tetrahedra.
struct FlagComplex {
  Scope scope = Scope::Whole;
  std::array<std::uint64_t, 4> f = {0, 0, 0, 0};  // f0, f1, f2, f3
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::vector<std::array<std::uint32_t, 4>> tetrahedra;
};

struct BettiVector {
  std::uint64_t b0 = 0;
  std::uint64_t b1 = 0;
  std::uint64_t b2 = 0;
  std::uint64_t b3 = 0;
  std::uint64_t rank_d1 = 0;
  std::uint64_t rank_d2 = 0;
  std::uint64_t rank_d3 = 0;
  std::uint64_t field_modulus = 0;
  /// Boundary ranks over the large prime field and over GF(2) disagreed;
  /// integral homology may carry torsion. Reported, never silently resolved.
  bool torsion_warning = false;
};

/// All 3-cliques {a < b < c}, lexicographically sorted. Found once each by
/// intersecting the sorted neighbor lists of an edge above its larger
/// endpoint.
std::vector<std::array<std::uint32_t, 3>> enumerate_triangles(const BabylonGraph& g);

/// All 4-cliques; an empty result is a legitimate, reportable outcome.
std::vector<std::array<std::uint32_t, 4>> enumerate_k4(const BabylonGraph& g);

FlagComplex f_vector(const BabylonGraph& g, Scope scope);

std::int64_t euler_characteristic(const FlagComplex& fc);

/// Betti numbers from boundary-matrix ranks: b0 from component labels,
/// rank d2 by sparse Gaussian elimination over F_p (p = 2^31 - 1) with a
/// GF(2) cross-check, b1/b2 by rank-nullity.
BettiVector betti(const BabylonGraph& g, Scope scope);

struct GrowthRow {
  std::uint32_t n = 0;
  double f1_ratio = 0;
  double f2_ratio = 0;
  double f1_main_ratio = 0;
  double f2_main_ratio = 0;
};

/// Edge/triangle counts of B_n normalized by n * W(n), for
/// n = step, 2*step, ..., n_max.
std::vector<GrowthRow> growth_series(std::uint32_t n_max, std::uint32_t step,
                                     const BuildOptions& opts = {});

/// CSV with header `n,f1_ratio,f2_ratio,f1_main_ratio,f2_main_ratio`,
/// reals at 12 significant digits. Byte-stable across runs.
std::string growth_csv(const std::vector<GrowthRow>& rows);

}  // namespace babylon
