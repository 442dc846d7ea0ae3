#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "babylon/numthy.hpp"

using namespace babylon;

TEST_CASE("isqrt on small and boundary inputs") {
  CHECK(isqrt(u64{0}) == 0);
  CHECK(isqrt(u64{1}) == 1);
  CHECK(isqrt(u64{2}) == 1);
  CHECK(isqrt(u64{3}) == 1);
  CHECK(isqrt(u64{4}) == 2);
  CHECK(isqrt(u64{25}) == 5);
  CHECK(isqrt(u64{73225}) == 270);  // 270^2 = 72900 <= 73225 < 271^2 = 73441
  CHECK(isqrt(UINT64_MAX) == 4294967295ull);
}

TEST_CASE("isqrt bracket invariant on random 64-bit values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200000; ++i) {
    u64 k = rng();
    u64 r = isqrt(k);
    CHECK(static_cast<u128>(r) * r <= k);
    CHECK(static_cast<u128>(r + 1) * (r + 1) > k);
  }
}

TEST_CASE("isqrt widens to 128 bits") {
  u128 big = static_cast<u128>(UINT64_MAX) * UINT64_MAX;  // (2^64-1)^2
  CHECK(isqrt(big) == UINT64_MAX);
  CHECK(isqrt(big - 1) == UINT64_MAX - 1);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    u128 k = (static_cast<u128>(rng()) << 64) | rng();
    u128 r = isqrt(k);
    CHECK(r * r <= k);
    CHECK((r + 1) * (r + 1) > k);
  }
}

TEST_CASE("perfect-square test") {
  CHECK(is_square(u64{0}));
  CHECK(is_square(u64{169}));     // 5^2 + 12^2
  CHECK_FALSE(is_square(u64{73225}));  // 44^2 + 117^2 + 240^2
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100000; ++i) {
    u64 k = rng() >> 33;  // keep k^2 in range
    if (k == 0) continue;
    CHECK(is_square(k * k));
    CHECK_FALSE(is_square(k * k + 1));
    CHECK_FALSE(is_square(2 * k * k));  // sqrt(2) is irrational
  }
}

TEST_CASE("divisor pairs ascending and exact") {
  using pairs = std::vector<std::pair<u64, u64>>;
  CHECK(divisor_pairs(1) == pairs{{1, 1}});
  CHECK(divisor_pairs(25) == pairs{{1, 25}, {5, 5}});
  CHECK(divisor_pairs(144) ==
        pairs{{1, 144}, {2, 72}, {3, 48}, {4, 36}, {6, 24}, {8, 18}, {9, 16}, {12, 12}});
  CHECK_THROWS_AS(divisor_pairs(0), std::invalid_argument);
}

TEST_CASE("divisor pairs agree with a naive full scan") {
  for (u64 k : {2ull, 97ull, 720ull, 1024ull, 999983ull, 1000000ull}) {
    auto got = divisor_pairs(k);
    std::size_t naive = 0;
    for (u64 d = 1; d <= k; ++d)
      if (k % d == 0 && d <= k / d) ++naive;
    CHECK(got.size() == naive);
    u64 prev = 0;
    for (auto [d, e] : got) {
      CHECK(d * e == k);
      CHECK(d <= e);
      CHECK(d > prev);
      prev = d;
    }
  }
}

TEST_CASE("product log") {
  CHECK(lambert_w(0.0) == 0.0);
  CHECK(lambert_w(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-13));
  for (double x : {0.5, 1.0, 10.0, 1e3, 1e8}) {
    double w = lambert_w(x);
    CHECK(w > 0);
    CHECK(std::fabs(w * std::exp(w) - x) <= 1e-12 * x);
  }
  CHECK_THROWS_AS(lambert_w(-1.0), std::domain_error);
}

TEST_CASE("distance to the nearest integer") {
  CHECK(nearest_int_dist(3.0) == 0.0);
  CHECK(nearest_int_dist(2.5) == 0.5);
  CHECK(nearest_int_dist(2.25) == 0.25);
  CHECK(nearest_int_dist(2.75) == 0.25);
  CHECK(nearest_int_dist(0.0) == 0.0);
}

TEST_CASE("decimal rendering of 128-bit values") {
  CHECK(to_string_u128(0) == "0");
  CHECK(to_string_u128(12345) == "12345");
  u128 big = static_cast<u128>(1) << 100;
  CHECK(to_string_u128(big) == "1267650600228229401496703205376");
}
