#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "babylon/bricks.hpp"
#include "babylon/graph.hpp"
#include "babylon/numthy.hpp"

namespace babylon {

struct ScanOptions {
  double epsilon = 1e-3;          // screening threshold on F
  std::uint32_t linear_width = 32;  // gaps narrower than this are walked
  u64 max_jump = 1'000'000;       // longer strides are chunked
  std::size_t near_miss_cap = 64;
  bool accelerate = true;
};

struct NearMiss {
  u64 w = 0;
  double f = 0;
};

struct ParamNearMiss {
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  double f = 0;
  u128 value = 0;  // the space-diagonal value screened
};

struct ExtendHit {
  u64 w = 0;
  std::vector<u64> roots;  // exact sqrt(anchor^2 + w^2) per anchor
};

struct K4Hit {
  std::array<std::uint32_t, 3> triangle{};
  u64 w = 0;
  std::array<u64, 6> diagonals{};
};

struct SearchReport {
  std::string kind;  // "extend", "k4", or a family name
  std::vector<u64> anchors;
  u64 w_min = 0, w_max = 0;
  std::int64_t p1_max = 0, p2_max = 0;
  double epsilon = 0;
  std::vector<ExtendHit> exact_hits;
  std::vector<K4Hit> k4_hits;
  std::vector<ParamPoint> param_hits;
  std::vector<NearMiss> near_misses;            // ascending by F, then w
  std::vector<ParamNearMiss> param_near_misses; // ascending by F, then (p1, p2)
  u64 triangle_count = 0;
  u64 steps = 0;  // objective evaluations
  u64 jumps = 0;  // accelerated strides taken
  double seconds = 0;
};

/// F(w) = sum over anchors of the distance of sqrt(anchor^2 + w^2) to the
/// nearest integer. Floating point, screening only; zero of F is decided
/// by exact integer verification, never by this value.
double scan_objective(std::span<const u64> anchors, u64 w);

/// Convergents p/q of the continued fraction of x >= 0 with q <= max_den.
std::vector<std::pair<u64, u64>> continued_fraction_convergents(double x, u64 max_den);

/// Scans w in [w_min, w_max]; every w with F(w) < epsilon is verified in
/// exact arithmetic. The accelerated path strides between near-minima of
/// the largest anchor's distance term (the local drift is close to a
/// translation, so strides follow its continued-fraction structure); a
/// stride is always capped by an exactly inverted bound on the next
/// possible sub-epsilon position, so no candidate is ever skipped.
SearchReport scan_extend(const std::vector<u64>& anchors, u64 w_min, u64 w_max,
                         const ScanOptions& opts = {});

/// Runs scan_extend over every triangle of the graph on 1..n; an exact hit
/// is a 4-clique and is reported with all six pairwise diagonals.
SearchReport k4_hunt(std::uint32_t n, u64 w_max, const ScanOptions& opts = {},
                     const BuildOptions& build_opts = {});

/// Screens the family's space-diagonal value over the parameter grid and
/// verifies candidates exactly. For the composed family the screened value
/// is the degree-8 polynomial s^8 + 68s^6t^2 - 122s^4t^4 + 68s^2t^6 + t^8.
SearchReport perfect_hunt(BrickFamily family, std::int64_t p1_max, std::int64_t p2_max,
                          const ScanOptions& opts = {});

/// Stable JSON rendering; pass include_timing = false for digests.
std::string report_json(const SearchReport& report, bool include_timing = true);

}  // namespace babylon
