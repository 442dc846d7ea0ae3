#include "babylon/bricks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "babylon/flag_complex.hpp"
#include "babylon/graph.hpp"

namespace babylon {

namespace {

u128 sq(i128 v) {
  i128 a = v < 0 ? -v : v;
  return static_cast<u128>(a) * static_cast<u128>(a);
}

u64 abs_to_u64(i128 v) {
  i128 a = v < 0 ? -v : v;
  if (a > static_cast<i128>(UINT64_MAX)) throw std::overflow_error("brick side exceeds 64 bits");
  return static_cast<u64>(a);
}

u64 exact_sqrt(u128 k, const char* what) {
  u128 r = isqrt(k);
  if (r * r != k) throw std::invalid_argument(std::string(what) + ": not a perfect square");
  return static_cast<u64>(r);
}

ParamPoint finish_param_point(BrickFamily family, std::int64_t p1, std::int64_t p2, i128 a,
                              i128 b, i128 c) {
  if (a == 0 || b == 0 || c == 0)
    throw std::invalid_argument(family_name(family) + ": degenerate zero side");
  ParamPoint pt;
  pt.family = family;
  pt.p1 = p1;
  pt.p2 = p2;
  pt.brick = make_brick(abs_to_u64(a), abs_to_u64(b), abs_to_u64(c));
  return pt;
}

}  // namespace

std::string family_name(BrickFamily f) {
  switch (f) {
    case BrickFamily::saunderson: return "saunderson";
    case BrickFamily::euler_mn: return "euler_mn";
    case BrickFamily::composed_st: return "composed_st";
  }
  return "?";
}

Brick make_brick(u64 x, u64 y, u64 z) {
  if (x == 0 || y == 0 || z == 0) throw std::invalid_argument("make_brick: zero side");
  // x^2 + y^2 + z^2 must stay inside 128 bits for the perfect flag to mean
  // anything: cap sides at 4e18 (3 * (4e18)^2 < 2^128).
  constexpr u64 kSideCap = 4'000'000'000'000'000'000ull;
  if (x > kSideCap || y > kSideCap || z > kSideCap)
    throw std::overflow_error("make_brick: side exceeds the exact-arithmetic cap");
  Brick b;
  u64 s[3] = {x, y, z};
  std::sort(s, s + 3);
  b.x = s[0];
  b.y = s[1];
  b.z = s[2];
  b.d_xy = exact_sqrt(sq(b.x) + sq(b.y), "face diagonal xy");
  b.d_xz = exact_sqrt(sq(b.x) + sq(b.z), "face diagonal xz");
  b.d_yz = exact_sqrt(sq(b.y) + sq(b.z), "face diagonal yz");
  b.space_diag_square = sq(b.x) + sq(b.y) + sq(b.z);
  b.perfect = is_square(b.space_diag_square);
  b.primitive = std::gcd(std::gcd(b.x, b.y), b.z) == 1;
  return b;
}

std::vector<Brick> enumerate_bricks(std::uint32_t limit, bool primitive_only) {
  BabylonGraph g = build(limit, BuildOptions{.max_n = std::max<std::uint32_t>(limit, 1)});
  std::vector<Brick> out;
  for (auto& [a, b, c] : enumerate_triangles(g)) {
    Brick brick = make_brick(a, b, c);
    if (!primitive_only || brick.primitive) out.push_back(brick);
  }
  return out;  // triangle order is already ascending (x, y, z)
}

ParamPoint saunderson(std::int64_t u, std::int64_t v) {
  if (u <= 0 || v <= 0) throw std::invalid_argument("saunderson: parameters must be positive");
  u128 ww = sq(u) + sq(v);
  if (!is_square(ww))
    throw std::invalid_argument("saunderson: u^2 + v^2 is not a perfect square");
  i128 w = static_cast<i128>(isqrt(ww));
  i128 a = static_cast<i128>(u) * (4 * static_cast<i128>(v) * v - w * w);
  i128 b = static_cast<i128>(v) * (4 * static_cast<i128>(u) * u - w * w);
  i128 c = 4 * static_cast<i128>(u) * v * w;
  ParamPoint pt = finish_param_point(BrickFamily::saunderson, u, v, a, b, c);
  // Space diagonal reduces to w^2 (u^4 + 18 u^2 v^2 + v^4).
  u128 reduced = sq(u) * sq(u) + 18 * sq(u) * sq(v) + sq(v) * sq(v);
  if (pt.brick.space_diag_square != static_cast<u128>(w * w) * reduced)
    throw std::logic_error("saunderson: space-diagonal identity failed");
  return pt;
}

ParamPoint euler_mn(std::int64_t m, std::int64_t n) {
  if (m <= n || n < 1) throw std::invalid_argument("euler_mn: requires m > n >= 1");
  i128 M = m, N = n;
  i128 a = 2 * M * N * (3 * M * M - N * N) * (3 * N * N - M * M);
  i128 b = 8 * M * N * (M * M * M * M - N * N * N * N);
  i128 c = (M * M - N * N) * (M * M - 4 * M * N + N * N) * (M * M + 4 * M * N + N * N);
  ParamPoint pt = finish_param_point(BrickFamily::euler_mn, m, n, a, b, c);
  // Closed forms for the three diagonals.
  u128 mn2 = sq(M * M + N * N);
  if (sq(a) + sq(c) != mn2 * mn2 * mn2)
    throw std::logic_error("euler_mn: a^2 + c^2 != (m^2+n^2)^6");
  if (sq(a) + sq(b) != 4 * sq(M * N) * sq(5 * M * M * M * M - 6 * M * M * N * N + 5 * N * N * N * N))
    throw std::logic_error("euler_mn: a^2 + b^2 identity failed");
  if (sq(b) + sq(c) !=
      sq(M - N) * sq(M + N) * sq(M * M * M * M + 18 * M * M * N * N + N * N * N * N))
    throw std::logic_error("euler_mn: b^2 + c^2 identity failed");
  return pt;
}

ParamPoint composed_st(std::int64_t s, std::int64_t t) {
  if (s <= t || t < 1) throw std::invalid_argument("composed_st: requires s > t >= 1");
  i128 S = s, T = t;
  i128 s2 = S * S, t2 = T * T;
  i128 a = 6 * T * s2 * s2 * S - 20 * t2 * T * s2 * S + 6 * t2 * t2 * T * S;
  i128 b = -s2 * s2 * s2 + 15 * t2 * s2 * s2 - 15 * t2 * t2 * s2 + t2 * t2 * t2;
  i128 c = 8 * s2 * s2 * S * T - 8 * S * t2 * t2 * T;
  ParamPoint pt = finish_param_point(BrickFamily::composed_st, s, t, a, b, c);
  u128 st6 = sq(s2 + t2) * sq(s2 + t2) * sq(s2 + t2);
  if (sq(a) + sq(b) != st6) throw std::logic_error("composed_st: a^2 + b^2 != (s^2+t^2)^6");
  if (sq(a) + sq(c) != 4 * sq(5 * s2 * s2 * S * T - 6 * s2 * S * t2 * T + 5 * S * t2 * t2 * T))
    throw std::logic_error("composed_st: a^2 + c^2 identity failed");
  if (sq(b) + sq(c) != sq(s2 * s2 * s2 + 17 * s2 * s2 * t2 - 17 * s2 * t2 * t2 - t2 * t2 * t2))
    throw std::logic_error("composed_st: b^2 + c^2 identity failed");
  return pt;
}

std::map<int, bool> divisibility_theorem_check(const Brick& b) {
  if (!b.primitive)
    throw std::invalid_argument("divisibility_theorem_check: brick is not primitive");
  std::map<int, bool> result;
  for (int m : {2, 3, 5, 11, 4, 9, 16})
    result[m] = (b.x % m == 0) || (b.y % m == 0) || (b.z % m == 0);
  return result;
}

std::vector<std::pair<u64, u64>> pocklington_scan(u64 x_max, u64 y_max) {
  if (x_max < 1 || y_max < 1)
    throw std::invalid_argument("pocklington_scan: bounds must be >= 1");
  std::vector<std::pair<u64, u64>> violations;
  // 20 * k^4 stays inside 64 bits up to k = 30000; widen beyond that.
  constexpr u64 k64_safe = 30000;
  for (u64 x = 1; x <= x_max; ++x) {
    for (u64 y = 1; y <= y_max; ++y) {
      bool hit;
      if (x <= k64_safe && y <= k64_safe) {
        u64 x2 = x * x, y2 = y * y;
        hit = is_square(x2 * x2 + 18 * x2 * y2 + y2 * y2);
      } else {
        u128 x2 = static_cast<u128>(x) * x, y2 = static_cast<u128>(y) * y;
        hit = is_square(x2 * x2 + 18 * x2 * y2 + y2 * y2);
      }
      if (hit) violations.emplace_back(x, y);
    }
  }
  return violations;
}

std::vector<ParamPoint> spohn_scan(std::int64_t s_max, std::int64_t t_max) {
  std::vector<ParamPoint> perfect;
  for (std::int64_t s = 2; s <= s_max; ++s) {
    for (std::int64_t t = 1; t < s && t <= t_max; ++t) {
      ParamPoint pt = composed_st(s, t);
      if (pt.brick.perfect) {
        check_record_bound(pt.brick);
        perfect.push_back(pt);
      }
    }
  }
  return perfect;
}

void check_record_bound(const Brick& b) {
  // Exhaustive published searches bound any perfect brick away from small
  // sides: least edge > 333750000 and minimum side >= 5*10^11 overall.
  // A "perfect" brick below that is an arithmetic bug, not a discovery.
  if (b.perfect && b.x < 333750000ull)
    throw std::logic_error("perfect brick below the published record bound: arithmetic bug");
}

bool is_perfect(const Brick& b) { return is_square(b.space_diag_square); }

std::map<std::string, bool> six_square_check(u64 x, u64 y, u64 z) {
  if (!(x <= y && y <= z))
    throw std::invalid_argument("six_square_check: requires x <= y <= z");
  return {
      {"x+y", is_square(x + y)}, {"y+z", is_square(y + z)}, {"x+z", is_square(x + z)},
      {"y-x", is_square(y - x)}, {"z-y", is_square(z - y)}, {"z-x", is_square(z - x)},
  };
}

std::string bricks_csv(const std::vector<Brick>& bricks) {
  std::string out = "x,y,z,dxy,dxz,dyz,primitive,perfect\n";
  for (const Brick& b : bricks) {
    out += std::to_string(b.x) + ',' + std::to_string(b.y) + ',' + std::to_string(b.z) + ',' +
           std::to_string(b.d_xy) + ',' + std::to_string(b.d_xz) + ',' + std::to_string(b.d_yz) +
           ',' + (b.primitive ? '1' : '0') + ',' + (b.perfect ? '1' : '0') + '\n';
  }
  return out;
}

}  // namespace babylon
