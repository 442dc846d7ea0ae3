#include "babylon/numthy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace babylon {

namespace {

// Quadratic residues mod 64; rejects ~81% of non-squares in one AND.
constexpr u64 kSquareResidueMask = []() {
  u64 mask = 0;
  for (u64 r = 0; r < 64; ++r) mask |= u64{1} << ((r * r) & 63);
  return mask;
}();

}  // namespace

u64 isqrt(u64 k) {
  if (k == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(k)));
  if (r > 0xFFFFFFFFull) r = 0xFFFFFFFFull;
  while (r > 0 && static_cast<u128>(r) * r > k) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= k) ++r;
  return r;
}

u128 isqrt(u128 k) {
  if (k <= std::numeric_limits<u64>::max()) return isqrt(static_cast<u64>(k));
  u128 x = static_cast<u128>(std::sqrt(static_cast<long double>(k))) + 4;
  constexpr u128 kRootCap = std::numeric_limits<u64>::max();
  if (x > kRootCap) x = kRootCap;
  for (;;) {
    u128 nx = (x + k / x) >> 1;
    if (nx >= x) break;
    x = nx;
  }
  while (x * x > k) --x;
  while (x < kRootCap && (x + 1) * (x + 1) <= k) ++x;
  return x;
}

bool is_square(u64 k) {
  if (!((kSquareResidueMask >> (k & 63)) & 1)) return false;
  u64 r = isqrt(k);
  return r * r == k;
}

bool is_square(u128 k) {
  if (!((kSquareResidueMask >> (static_cast<u64>(k) & 63)) & 1)) return false;
  u128 r = isqrt(k);
  return r * r == k;
}

std::vector<std::pair<u64, u64>> divisor_pairs(u64 k) {
  if (k == 0) throw std::invalid_argument("divisor_pairs: k must be positive");
  std::vector<std::pair<u64, u64>> pairs;
  for (u64 d = 1; d * d <= k; ++d) {
    if (k % d == 0) pairs.emplace_back(d, k / d);
  }
  return pairs;
}

double lambert_w(double x) {
  if (x < 0) throw std::domain_error("lambert_w: negative argument");
  if (x == 0) return 0.0;
  // Seed below the fixed point, then Halley steps.
  double w = (x < 3.0) ? std::log1p(x) : std::log(x) - std::log(std::log(x));
  for (int iter = 0; iter < 64; ++iter) {
    double ew = std::exp(w);
    double f = w * ew - x;
    double w1 = w + 1.0;
    double step = f / (ew * w1 - f * (w + 2.0) / (2.0 * w1));
    w -= step;
    if (std::fabs(step) <= 1e-15 * (std::fabs(w) + 1e-300)) break;
  }
  return w;
}

double nearest_int_dist(double t) {
  double r = std::nearbyint(t);
  return std::fabs(t - r);
}

std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  char buf[40];
  int pos = 40;
  while (v > 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  return std::string(buf + pos, buf + 40);
}

}  // namespace babylon
