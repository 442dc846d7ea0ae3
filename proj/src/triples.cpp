#include "babylon/triples.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace babylon {

std::vector<Triple> primitive_triples_up_to(u64 n) {
  std::vector<Triple> out;
  if (n < 4) return out;
  // Both legs <= n forces u^2 + v^2 = c <= n*sqrt(2), so u <= isqrt(2n).
  u64 u_max = isqrt(u64{2} * n);
  for (u64 u = 2; u <= u_max; ++u) {
    for (u64 v = 1 + (u & 1); v < u; v += 2) {
      if (std::gcd(u, v) != 1) continue;
      u64 odd = u * u - v * v;
      u64 even = 2 * u * v;
      if (odd > n || even > n) continue;
      Triple t;
      t.a = std::min(odd, even);
      t.b = std::max(odd, even);
      t.c = u * u + v * v;
      t.primitive = true;
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Triple& x, const Triple& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
  return out;
}

std::vector<Edge> edges_up_to(std::uint32_t n) {
  std::vector<Edge> out;
  auto prim = primitive_triples_up_to(n);
  for (const Triple& t : prim) {
    for (u64 k = 1; k * t.b <= n; ++k) {
      out.push_back(Edge{static_cast<std::uint32_t>(k * t.a), static_cast<std::uint32_t>(k * t.b)});
    }
  }
  // Each pair arises from exactly one primitive (divide by the gcd), so
  // the sort alone canonicalizes the list.
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> neighbors_unbounded(u64 x) {
  if (x == 0) throw std::invalid_argument("neighbors_unbounded: vertex must be positive");
  std::vector<u64> out;
  for (auto [d, e] : divisor_pairs(x * x)) {
    if (d == e) continue;  // a = 0: excluded, vertices are positive
    if (((e - d) & 1) != 0) continue;
    out.push_back((e - d) / 2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_edge(u64 a, u64 b) {
  if (a == b || a == 0 || b == 0) return false;
  u128 s = static_cast<u128>(a) * a + static_cast<u128>(b) * b;
  return is_square(s);
}

}  // namespace babylon
