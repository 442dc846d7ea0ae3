#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace babylon {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Floor of the square root: returns r with r*r <= k < (r+1)*(r+1).
/// Seeded from hardware sqrt, then corrected in integer arithmetic so the
/// result is exact for every 64-bit input.
u64 isqrt(u64 k);

/// 128-bit widening of isqrt for sums of squares beyond the 64-bit range.
u128 isqrt(u128 k);

/// Exact perfect-square test. Never decided in floating point.
bool is_square(u64 k);
bool is_square(u128 k);

/// All factorizations k = d * (k/d) with d <= k/d, ascending in d.
/// Plain trial division up to isqrt(k).
std::vector<std::pair<u64, u64>> divisor_pairs(u64 k);

/// Principal branch of the product log: w >= 0 with w * e^w = x.
/// Halley iteration, relative accuracy ~1e-14. Throws std::domain_error
/// for negative input.
double lambert_w(double x);

/// Distance from t to the nearest integer, in [0, 0.5].
double nearest_int_dist(double t);

/// Decimal rendering for 128-bit values (reports, JSON payloads).
std::string to_string_u128(u128 v);

}  // namespace babylon
