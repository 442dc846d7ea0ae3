#include "babylon/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "babylon/flag_complex.hpp"
#include "babylon/parallel.hpp"

#include "json.hpp"

namespace babylon {

namespace {

using json = nlohmann::ordered_json;

double dist_term(u64 anchor, u64 w) {
  u128 s = static_cast<u128>(anchor) * anchor + static_cast<u128>(w) * w;
  return nearest_int_dist(std::sqrt(static_cast<double>(s)));
}

// Widened screening threshold: the certified skip may only rule out w whose
// double-evaluated term is >= epsilon, so it works against a slightly wider
// window than the screen itself.
double widened(double epsilon) { return epsilon + 1e-5; }

// Smallest position >= x at which the anchor's distance term can fall below
// the widened threshold; everything in [x, result) is certified above it.
//
// At integer w the phase of sqrt(a^2 + w^2) equals the phase of
// h(w) = sqrt(a^2 + w^2) - w = a^2 / (g + w), which decreases slowly and
// monotonically. The term is small exactly when h sits within eps of an
// integer, and h <= m + eps inverts in closed form to
// w >= (a^2 - T^2) / (2T) with T = m + eps.
u64 next_window_at_or_after(u64 anchor, u64 x, double eps_eff) {
  long double a2 = static_cast<long double>(anchor) * anchor;
  long double g = sqrtl(a2 + static_cast<long double>(x) * x);
  long double h = a2 / (g + static_cast<long double>(x));
  if (h <= eps_eff) return x;  // the term stays sub-threshold from here on
  long double f = h - floorl(h);
  if (f <= eps_eff || f >= 1.0L - eps_eff) return x;
  long double target = floorl(h) + static_cast<long double>(eps_eff);
  long double wf = (a2 - target * target) / (2.0L * target);
  u64 w = static_cast<u64>(ceill(wf));
  if (w <= x + 1) return x + 1;
  return w - 1;  // one-step safety margin against rounding
}

struct ScanAccumulator {
  std::span<const u64> anchors;
  double epsilon;
  std::vector<ExtendHit> hits;
  std::vector<NearMiss> near;
  u64 steps = 0;

  // Returns F(w); verifies exactly when the screen fires.
  double evaluate(u64 w) {
    ++steps;
    double f = 0;
    for (u64 a : anchors) f += dist_term(a, w);
    if (f < epsilon) {
      ExtendHit hit;
      hit.w = w;
      bool all_square = true;
      for (u64 a : anchors) {
        u128 s = static_cast<u128>(a) * a + static_cast<u128>(w) * w;
        if (!is_square(s)) {
          all_square = false;
          break;
        }
        hit.roots.push_back(static_cast<u64>(isqrt(s)));
      }
      if (all_square && w > 0)
        hits.push_back(std::move(hit));
      else
        near.push_back(NearMiss{w, f});
    }
    return f;
  }
};

void sort_and_cap_near(std::vector<NearMiss>& near, std::size_t cap) {
  std::sort(near.begin(), near.end(), [](const NearMiss& a, const NearMiss& b) {
    return a.f != b.f ? a.f < b.f : a.w < b.w;
  });
  if (near.size() > cap) near.resize(cap);
}

// One shard of the scan range; accelerated or plain. The widened screen
// margin (1e-5) must dominate the double rounding of F, so acceleration is
// only engaged while sqrt(anchor^2 + w^2) stays below ~6e9 (ulp < 2e-6).
void scan_range(ScanAccumulator& acc, u64 lo, u64 hi, const ScanOptions& opts, u64& jumps) {
  if (acc.anchors.empty()) return;
  u64 dominant = *std::max_element(acc.anchors.begin(), acc.anchors.end());
  double eps_eff = widened(opts.epsilon);
  bool accelerate = opts.accelerate && opts.epsilon > 2e-5 && opts.epsilon < 0.4 &&
                    dominant < (u64{1} << 32) && hi < (u64{1} << 32);
  u64 w = lo;
  while (w <= hi) {
    acc.evaluate(w);
    if (w == hi) break;
    if (!accelerate) {
      ++w;
      continue;
    }
    u64 next = next_window_at_or_after(dominant, w + 1, eps_eff);
    if (next <= w + opts.linear_width) {
      ++w;
      continue;
    }
    u64 gap = next - w;
    if (gap > opts.max_jump) {
      // Too far to trust one stride: chunk it, stepping along a convergent
      // denominator of the local slope so landings stay near the term's
      // minima. The slope is re-estimated at every jump.
      long double g = sqrtl(static_cast<long double>(dominant) * dominant +
                            static_cast<long double>(w) * w);
      double slope = static_cast<double>(static_cast<long double>(w) / g);
      auto conv = continued_fraction_convergents(slope, opts.max_jump);
      u64 stride = conv.empty() ? 1 : conv.back().second;
      stride = std::clamp<u64>(stride, opts.linear_width, opts.max_jump);
      next = w + std::min(stride, gap);  // never past the certified bound
    }
    ++jumps;
    w = std::min(next, hi);
  }
}

json near_misses_json(const std::vector<NearMiss>& near) {
  json arr = json::array();
  for (const NearMiss& nm : near) arr.push_back({{"w", nm.w}, {"F", nm.f}});
  return arr;
}

}  // namespace

double scan_objective(std::span<const u64> anchors, u64 w) {
  double f = 0;
  for (u64 a : anchors) f += dist_term(a, w);
  return f;
}

std::vector<std::pair<u64, u64>> continued_fraction_convergents(double x, u64 max_den) {
  if (x < 0 || !std::isfinite(x)) throw std::invalid_argument("convergents: x must be finite, >= 0");
  std::vector<std::pair<u64, u64>> out;
  double y = x;
  u64 p_prev = 1, q_prev = 0, p = static_cast<u64>(std::floor(y)), q = 1;
  out.emplace_back(p, q);
  for (int k = 0; k < 48; ++k) {
    double frac = y - std::floor(y);
    if (frac < 1e-15) break;
    y = 1.0 / frac;
    u64 a = static_cast<u64>(std::floor(y));
    if (a == 0) break;
    u64 pn = a * p + p_prev, qn = a * q + q_prev;
    if (qn > max_den || qn < q) break;  // cap, and bail on overflow
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
    out.emplace_back(p, q);
  }
  return out;
}

SearchReport scan_extend(const std::vector<u64>& anchors, u64 w_min, u64 w_max,
                         const ScanOptions& opts) {
  if (anchors.empty()) throw std::invalid_argument("scan_extend: anchors must be nonempty");
  for (u64 a : anchors)
    if (a == 0) throw std::invalid_argument("scan_extend: anchors must be positive");
  if (w_min > w_max) throw std::invalid_argument("scan_extend: empty range");
  if (!(opts.epsilon > 0 && opts.epsilon <= 0.5))
    throw std::invalid_argument("scan_extend: epsilon must be in (0, 0.5]");
  auto t0 = std::chrono::steady_clock::now();

  SearchReport report;
  report.kind = "extend";
  report.anchors = anchors;
  report.w_min = w_min;
  report.w_max = w_max;
  report.epsilon = opts.epsilon;

  // Fixed-size shards keep every statistic independent of worker count.
  constexpr u64 kShard = u64{1} << 21;
  u64 span = w_max - w_min + 1;
  std::size_t shards = static_cast<std::size_t>((span + kShard - 1) / kShard);
  std::vector<ScanAccumulator> accs(shards);
  std::vector<u64> jump_counts(shards, 0);
  parallel_for_blocks(0, shards, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      accs[i].anchors = anchors;
      accs[i].epsilon = opts.epsilon;
      u64 a = w_min + static_cast<u64>(i) * kShard;
      u64 b = std::min(w_max, a + kShard - 1);
      scan_range(accs[i], a, b, opts, jump_counts[i]);
    }
  });
  for (std::size_t i = 0; i < shards; ++i) {
    auto& acc = accs[i];
    report.exact_hits.insert(report.exact_hits.end(), acc.hits.begin(), acc.hits.end());
    report.near_misses.insert(report.near_misses.end(), acc.near.begin(), acc.near.end());
    report.steps += acc.steps;
    report.jumps += jump_counts[i];
  }
  sort_and_cap_near(report.near_misses, opts.near_miss_cap);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

SearchReport k4_hunt(std::uint32_t n, u64 w_max, const ScanOptions& opts,
                     const BuildOptions& build_opts) {
  auto t0 = std::chrono::steady_clock::now();
  BabylonGraph g = build(n, build_opts);
  auto triangles = enumerate_triangles(g);

  SearchReport report;
  report.kind = "k4";
  report.w_min = 1;
  report.w_max = w_max;
  report.epsilon = opts.epsilon;
  report.triangle_count = triangles.size();

  for (auto& [a, b, c] : triangles) {
    std::vector<u64> anchors{a, b, c};
    SearchReport sub = scan_extend(anchors, 1, w_max, opts);
    report.steps += sub.steps;
    report.jumps += sub.jumps;
    for (const ExtendHit& hit : sub.exact_hits) {
      K4Hit k4;
      k4.triangle = {a, b, c};
      k4.w = hit.w;
      Brick brick = make_brick(a, b, c);
      k4.diagonals = {brick.d_xy, brick.d_xz,      brick.d_yz,
                      hit.roots[0], hit.roots[1], hit.roots[2]};
      report.k4_hits.push_back(k4);
    }
    report.near_misses.insert(report.near_misses.end(), sub.near_misses.begin(),
                              sub.near_misses.end());
  }
  sort_and_cap_near(report.near_misses, opts.near_miss_cap);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

SearchReport perfect_hunt(BrickFamily family, std::int64_t p1_max, std::int64_t p2_max,
                          const ScanOptions& opts) {
  if (p1_max < 1 || p2_max < 1) throw std::invalid_argument("perfect_hunt: bounds must be >= 1");
  auto t0 = std::chrono::steady_clock::now();
  SearchReport report;
  report.kind = family_name(family);
  report.p1_max = p1_max;
  report.p2_max = p2_max;
  report.epsilon = opts.epsilon;

  auto screen = [&](std::int64_t p1, std::int64_t p2, u128 value) {
    ++report.steps;
    double f = nearest_int_dist(std::sqrt(static_cast<double>(value)));
    if (f >= opts.epsilon) return;
    if (is_square(value)) {
      ParamPoint hit;
      switch (family) {
        case BrickFamily::saunderson: hit = saunderson(p1, p2); break;
        case BrickFamily::euler_mn: hit = euler_mn(p1, p2); break;
        case BrickFamily::composed_st: hit = composed_st(p1, p2); break;
      }
      check_record_bound(hit.brick);
      report.param_hits.push_back(hit);
    } else {
      report.param_near_misses.push_back(ParamNearMiss{p1, p2, f, value});
    }
  };

  for (std::int64_t p1 = 2; p1 <= p1_max; ++p1) {
    for (std::int64_t p2 = 1; p2 < p1 && p2 <= p2_max; ++p2) {
      u128 P1 = static_cast<u128>(p1), P2 = static_cast<u128>(p2);
      if (family == BrickFamily::saunderson) {
        u128 ww = P1 * P1 + P2 * P2;
        if (!is_square(ww)) continue;
        // Space diagonal w^2 (u^4 + 18 u^2 v^2 + v^4).
        u128 reduced = P1 * P1 * P1 * P1 + 18 * P1 * P1 * P2 * P2 + P2 * P2 * P2 * P2;
        screen(p1, p2, ww * reduced);
      } else if (family == BrickFamily::euler_mn) {
        u128 s2 = P1 * P1 + P2 * P2;
        u128 poly = P1 * P1 * P1 * P1 * P1 * P1 * P1 * P1 +
                    68 * P1 * P1 * P1 * P1 * P1 * P1 * P2 * P2 -
                    122 * P1 * P1 * P1 * P1 * P2 * P2 * P2 * P2 +
                    68 * P1 * P1 * P2 * P2 * P2 * P2 * P2 * P2 + P2 * P2 * P2 * P2 * P2 * P2 * P2 * P2;
        screen(p1, p2, s2 * s2 * poly);
      } else {
        u128 poly = P1 * P1 * P1 * P1 * P1 * P1 * P1 * P1 +
                    68 * P1 * P1 * P1 * P1 * P1 * P1 * P2 * P2 -
                    122 * P1 * P1 * P1 * P1 * P2 * P2 * P2 * P2 +
                    68 * P1 * P1 * P2 * P2 * P2 * P2 * P2 * P2 + P2 * P2 * P2 * P2 * P2 * P2 * P2 * P2;
        screen(p1, p2, poly);
      }
    }
  }
  std::sort(report.param_near_misses.begin(), report.param_near_misses.end(),
            [](const ParamNearMiss& a, const ParamNearMiss& b) {
              if (a.f != b.f) return a.f < b.f;
              return a.p1 != b.p1 ? a.p1 < b.p1 : a.p2 < b.p2;
            });
  if (report.param_near_misses.size() > opts.near_miss_cap)
    report.param_near_misses.resize(opts.near_miss_cap);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string report_json(const SearchReport& report, bool include_timing) {
  json j;
  j["family"] = report.kind;
  if (report.kind == "extend" || report.kind == "k4") {
    if (!report.anchors.empty()) j["anchors"] = report.anchors;
    j["range"] = {{"w_min", report.w_min}, {"w_max", report.w_max}};
  } else {
    j["range"] = {{"p1_max", report.p1_max}, {"p2_max", report.p2_max}};
  }
  j["epsilon"] = report.epsilon;
  if (report.triangle_count > 0 || report.kind == "k4")
    j["triangles"] = report.triangle_count;

  json hits = json::array();
  for (const ExtendHit& h : report.exact_hits) hits.push_back({{"w", h.w}, {"roots", h.roots}});
  for (const K4Hit& h : report.k4_hits)
    hits.push_back({{"triangle", h.triangle}, {"w", h.w}, {"diagonals", h.diagonals}});
  for (const ParamPoint& p : report.param_hits) {
    hits.push_back({{"p1", p.p1},
                    {"p2", p.p2},
                    {"sides", {p.brick.x, p.brick.y, p.brick.z}},
                    {"space_diag", to_string_u128(p.brick.space_diag_square)}});
  }
  j["exact_hits"] = hits;

  if (report.kind == "extend" || report.kind == "k4") {
    j["near_misses"] = near_misses_json(report.near_misses);
  } else {
    json arr = json::array();
    for (const ParamNearMiss& nm : report.param_near_misses)
      arr.push_back({{"p1", nm.p1}, {"p2", nm.p2}, {"F", nm.f}, {"value", to_string_u128(nm.value)}});
    j["near_misses"] = arr;
  }
  j["steps"] = report.steps;
  j["jumps"] = report.jumps;
  if (include_timing) j["seconds"] = report.seconds;
  return j.dump(2) + "\n";
}

}  // namespace babylon
