#pragma once

#include <cstdint>
#include <vector>

#include "babylon/numthy.hpp"

namespace babylon {

/// A Pythagorean triple in canonical leg order a < b, a^2 + b^2 = c^2.
/// primitive <=> gcd(a, b) = 1. Legs a = b is impossible (2a^2 is never
/// a square), so the order is strict.
struct Triple {
  u64 a = 0;
  u64 b = 0;
  u64 c = 0;
  bool primitive = false;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// An undirected leg pair a < b with a^2 + b^2 a perfect square.
struct Edge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// All primitive triples with both legs <= n, from coprime generators
/// u > v >= 1 of opposite parity (legs u^2 - v^2 and 2uv). Sorted by
/// (a, b), duplicate-free. Empty for n < 4.
std::vector<Triple> primitive_triples_up_to(u64 n);

/// All leg pairs a < b <= n whose squares sum to a perfect square,
/// produced as integer multiples of primitive leg pairs. Sorted (a, b),
/// duplicate-free. No O(n^2) pair scan.
std::vector<Edge> edges_up_to(std::uint32_t n);

/// The complete (finite) set of partners of x: every a >= 1, a != x, with
/// x^2 + a^2 a perfect square. Obtained from the factorizations
/// x^2 = d * e, d < e, d = e (mod 2), as a = (e - d) / 2. Sorted ascending.
std::vector<u64> neighbors_unbounded(u64 x);

/// True iff a != b and a^2 + b^2 is a perfect square (128-bit safe).
bool is_edge(u64 a, u64 b);

}  // namespace babylon
