#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "babylon/numthy.hpp"

namespace babylon {

/// A cuboid with integer sides x <= y <= z whose three face diagonals are
/// integers. Perfect iff the space diagonal is an integer as well -- an
/// object nobody has exhibited.
struct Brick {
  u64 x = 0, y = 0, z = 0;
  u64 d_xy = 0, d_xz = 0, d_yz = 0;
  u128 space_diag_square = 0;
  bool perfect = false;
  bool primitive = false;

  friend bool operator==(const Brick&, const Brick&) = default;
};

enum class BrickFamily { saunderson, euler_mn, composed_st };

std::string family_name(BrickFamily f);

/// A parameter-space point of one of the three families together with the
/// brick it produces (sides canonicalized: absolute values, ascending).
struct ParamPoint {
  BrickFamily family = BrickFamily::saunderson;
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  Brick brick;
};

/// Validates sides and fills diagonals, primitivity and the perfect flag.
/// Throws std::invalid_argument if a face diagonal is not an integer.
Brick make_brick(u64 x, u64 y, u64 z);

/// All bricks with sides <= limit, ascending by (x, y, z); the same set as
/// the 3-cliques of the graph on 1..limit. Optional primitivity filter.
std::vector<Brick> enumerate_bricks(std::uint32_t limit, bool primitive_only = false);

/// (u, v, w) a Pythagorean triple -> sides |u(4v^2-w^2)|, |v(4u^2-w^2)|,
/// |4uvw|. Rejects (u, v) whose u^2 + v^2 is not a perfect square.
ParamPoint saunderson(std::int64_t u, std::int64_t v);

/// Sides 2mn(3m^2-n^2)(3n^2-m^2), 8mn(m^4-n^4),
/// (m^2-n^2)(m^2-4mn+n^2)(m^2+4mn+n^2) up to sign, m > n >= 1.
/// The closed-form diagonal identities are re-checked exactly in 128-bit.
ParamPoint euler_mn(std::int64_t m, std::int64_t n);

/// Composed surface r(s, t) = (6ts^5-20t^3s^3+6t^5s,
/// -s^6+15t^2s^4-15t^4s^2+t^6, 8s^5t-8st^5), s > t >= 1; diagonal
/// identities a^2+b^2 = (s^2+t^2)^6 etc. re-checked exactly.
ParamPoint composed_st(std::int64_t s, std::int64_t t);

/// For each modulus in {2,3,5,11,4,9,16}: does some side divide by it?
/// Requires a primitive brick; the divisibility statement asserts all true.
std::map<int, bool> divisibility_theorem_check(const Brick& b);

/// Exhaustive scan of x^4 + 18x^2y^2 + y^4 = square over the box; returns
/// the (x, y) violations, expected empty for xy != 0.
std::vector<std::pair<u64, u64>> pocklington_scan(u64 x_max, u64 y_max);

/// Scans the composed family for perfect bricks; expected empty (the space
/// diagonal reduces to w^2 * (u^4 + 18u^2v^2 + v^4)).
std::vector<ParamPoint> spohn_scan(std::int64_t s_max, std::int64_t t_max);

bool is_perfect(const Brick& b);

/// Any perfect brick found with least side below the published search
/// records is an arithmetic bug; the scans fail loudly instead of
/// reporting a discovery.
void check_record_bound(const Brick& b);

/// Squareness of x+y, y+z, x+z, y-x, z-y, z-x for x <= y <= z
/// (the six-square triple problem). Throws on unsorted input.
std::map<std::string, bool> six_square_check(u64 x, u64 y, u64 z);

/// CSV `x,y,z,dxy,dxz,dyz,primitive,perfect` with header.
std::string bricks_csv(const std::vector<Brick>& bricks);

}  // namespace babylon
