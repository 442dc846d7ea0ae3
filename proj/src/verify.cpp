#include "babylon/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "babylon/bricks.hpp"
#include "babylon/flag_complex.hpp"
#include "babylon/graph.hpp"
#include "babylon/numthy.hpp"
#include "babylon/planarity.hpp"
#include "babylon/search.hpp"
#include "babylon/triples.hpp"

namespace babylon {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  CheckResult result;
  std::ostringstream detail;
  Clock::time_point start = Clock::now();

  Checker(int criterion, std::string name) {
    result.criterion = criterion;
    result.name = std::move(name);
    result.pass = true;
  }

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      result.pass = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }

  void warn(const std::string& what) { result.warnings.push_back(what); }

  CheckResult finish(double budget_seconds = 0) {
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget_seconds > 0 && result.seconds >= budget_seconds) {
      result.pass = false;
      detail << (detail.tellp() > 0 ? "; " : "") << "runtime budget " << budget_seconds
             << "s exceeded (" << result.seconds << "s)";
    }
    result.detail = detail.str();
    return result;
  }
};

// Reference rows: the ten bricks with sides <= 1000.
constexpr std::array<std::array<u64, 3>, 10> kBricks1000 = {{
    {44, 117, 240}, {85, 132, 720}, {88, 234, 480}, {132, 351, 720}, {140, 480, 693},
    {160, 231, 792}, {176, 468, 960}, {240, 252, 275}, {480, 504, 550}, {720, 756, 825},
}};

CheckResult check_f_vector() {
  Checker c(1, "f-vector n=1000");
  BabylonGraph g = build(1000);
  FlagComplex whole = f_vector(g, Scope::Whole);
  FlagComplex main = f_vector(g, Scope::Main);
  c.expect(whole.f[0] == 1000 && whole.f[1] == 1034 && whole.f[2] == 10,
           "whole f-vector != (1000,1034,10)");
  c.expect(main.f[0] == 480 && main.f[1] == 952 && main.f[2] == 10,
           "main f-vector != (480,952,10)");
  c.detail << "whole=(" << whole.f[0] << "," << whole.f[1] << "," << whole.f[2] << ") main=("
           << main.f[0] << "," << main.f[1] << "," << main.f[2] << ")";
  return c.finish(1.0);
}

CheckResult check_betti() {
  Checker c(2, "Betti/Euler-characteristic n=1000");
  BabylonGraph g = build(1000);
  FlagComplex whole = f_vector(g, Scope::Whole);
  FlagComplex main = f_vector(g, Scope::Main);
  BettiVector bw = betti(g, Scope::Whole);
  BettiVector bm = betti(g, Scope::Main);
  c.expect(bm.b0 == 1 && bm.b1 == 463 && bm.b2 == 0, "main Betti != (1,463,0)");
  c.expect(bw.b0 == 439 && bw.b1 == 463, "whole Betti != (439,463)");
  c.expect(euler_characteristic(main) == -462, "main chi != -462");
  c.expect(euler_characteristic(whole) == -24, "whole chi != -24");
  auto poincare = [](const FlagComplex& fc, const BettiVector& b) {
    return euler_characteristic(fc) ==
           static_cast<std::int64_t>(b.b0) - static_cast<std::int64_t>(b.b1) +
               static_cast<std::int64_t>(b.b2) - static_cast<std::int64_t>(b.b3);
  };
  c.expect(poincare(whole, bw) && poincare(main, bm), "Euler-Poincare identity violated");
  c.expect(!bw.torsion_warning && !bm.torsion_warning, "field-rank mismatch (torsion?)");
  c.warn("published caption labels these counts n=10000; values match n=1000");
  c.detail << "main b=(1," << bm.b1 << ") chi=" << euler_characteristic(main) << " whole b=("
           << bw.b0 << "," << bw.b1 << ") chi=" << euler_characteristic(whole);
  return c.finish(1.0);
}

CheckResult check_diameter() {
  Checker c(3, "main-component diameter n=5000/10000");
  BabylonGraph g5 = build(5000);
  std::uint32_t d5 = diameter(g5, main_component(g5));
  c.expect(d5 == 18, "diameter(main of n=5000) = " + std::to_string(d5) + " != 18");
  BabylonGraph g10 = build(10000);
  std::uint32_t d10 = diameter(g10, main_component(g10));
  c.expect(d10 == 29, "diameter(main of n=10000) = " + std::to_string(d10) + " != 29");
  c.detail << "d(5000)=" << d5 << " d(10000)=" << d10;
  return c.finish(60.0);
}

CheckResult check_planarity_threshold() {
  Checker c(4, "planarity threshold 95/96");
  int flips = 0;
  bool prev = true;
  std::uint32_t flip_at = 0;
  for (std::uint32_t n = 2; n <= 200; ++n) {
    bool planar = is_planar(build(n), 0).planar;
    if (n > 2 && planar != prev) {
      ++flips;
      flip_at = n;
    }
    prev = planar;
  }
  c.expect(flips == 1, "verdict flipped " + std::to_string(flips) + " times, expected once");
  c.expect(flip_at == 96, "flip at n=" + std::to_string(flip_at) + ", expected 96");
  c.detail << "single flip at 95->96";
  return c.finish(5.0);
}

CheckResult check_brick_tables() {
  Checker c(5, "brick tables");
  auto all = enumerate_bricks(8000);
  auto count_up_to = [&](u64 limit) {
    return static_cast<std::size_t>(
        std::count_if(all.begin(), all.end(), [&](const Brick& b) { return b.z <= limit; }));
  };
  c.expect(count_up_to(300) == 2, "count(<=300) != 2");
  std::vector<Brick> small;
  for (const Brick& b : all)
    if (b.z <= 1000) small.push_back(b);
  bool rows_match = small.size() == kBricks1000.size();
  for (std::size_t i = 0; rows_match && i < small.size(); ++i)
    rows_match = small[i].x == kBricks1000[i][0] && small[i].y == kBricks1000[i][1] &&
                 small[i].z == kBricks1000[i][2];
  c.expect(rows_match, "rows(<=1000) do not match the published table");
  c.expect(count_up_to(300) == 2 && small.size() == 10, "counts(<=300/<=1000) != 2/10");

  struct Published {
    u64 limit;
    std::size_t count;
  };
  for (Published p : {Published{2000, 25}, Published{4000, 54}, Published{8000, 120}}) {
    std::size_t independent = count_up_to(p.limit);
    if (independent != p.count) {
      c.warn("published count for <=" + std::to_string(p.limit) + " is " +
             std::to_string(p.count) + "; independent enumeration gives " +
             std::to_string(independent) +
             " (the published tables repeat rows across ranges)");
    }
  }
  c.detail << "counts 300/1000/2000/4000/8000 = " << count_up_to(300) << "/" << count_up_to(1000)
           << "/" << count_up_to(2000) << "/" << count_up_to(4000) << "/" << count_up_to(8000);
  return c.finish(30.0);
}

CheckResult check_remark_suite(const VerifyOptions& opts) {
  Checker c(6, "isolated/leaf/component/scaling remarks");
  {
    // Exactly 1 and 2 stay isolated in the unbounded graph. Finite
    // truncations strand more vertices, so the sweep verifies a concrete
    // partner for every x (odd 2k+1 pairs with 2k(k+1), even 2m with
    // m^2 - 1), all in exact arithmetic.
    c.expect(neighbors_unbounded(1).empty() && neighbors_unbounded(2).empty(),
             "1 or 2 has a partner");
    bool witnesses_ok = true;
    for (u64 x = 3; x <= opts.isolated_scan_limit && witnesses_ok; ++x) {
      u64 partner = (x & 1) ? (x * x - 1) / 2 : (x / 2) * (x / 2) - 1;
      witnesses_ok = is_edge(x, partner);
      if (!witnesses_ok) c.expect(false, "no partner verified for x=" + std::to_string(x));
    }
    BabylonGraph g = build(2000);
    auto iso = isolated_vertices(g);
    c.expect(iso.size() >= 2 && iso[0] == 1 && iso[1] == 2,
             "1 and 2 are not the first isolated vertices of the truncation");
  }
  {
    // Odd primes have exactly one partner in the unbounded graph.
    std::uint32_t limit = 10'000;
    std::vector<bool> composite(limit + 1, false);
    bool ok = true;
    for (std::uint32_t p = 2; p <= limit; ++p) {
      if (composite[p]) continue;
      for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= limit; q += p)
        composite[q] = true;
      if (p == 2) continue;
      if (neighbors_unbounded(p).size() != 1) {
        ok = false;
        c.expect(false, "odd prime " + std::to_string(p) + " is not a leaf");
        break;
      }
    }
    if (ok) c.detail << "odd primes <= 10^4 all leaves";
  }
  for (std::uint32_t n : {4u, 100u, 1000u, 2000u}) {
    BabylonGraph g = build(n);
    bool pair_component = g.component_id[3] == g.component_id[4] &&
                          component_vertices(g, g.component_id[3]) ==
                              std::vector<std::uint32_t>{3, 4};
    c.expect(pair_component, "{3,4} is not a component at n=" + std::to_string(n));
  }
  auto path_ok = [](const std::vector<u64>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!is_edge(path[i], path[i + 1])) return false;
    return true;
  };
  c.expect(path_ok({5, 12, 16, 30}), "path 5-12-16-30 broken");
  c.expect(path_ok({30, 40, 96, 180}), "path 30-40-96-180 broken");
  return c.finish();
}

CheckResult check_impossibility_oracles() {
  Checker c(7, "impossibility oracles");
  c.expect(pocklington_scan(500, 500).empty(), "x^4+18x^2y^2+y^4 square found in 500x500");
  c.expect(spohn_scan(200, 200).empty(), "perfect brick on the composed surface in 200x200");
  std::size_t primitive_count = 0;
  for (const Brick& b : enumerate_bricks(8000, true)) {
    ++primitive_count;
    for (auto [modulus, divides] : divisibility_theorem_check(b)) {
      c.expect(divides, "primitive brick (" + std::to_string(b.x) + "," + std::to_string(b.y) +
                            "," + std::to_string(b.z) + ") has no side divisible by " +
                            std::to_string(modulus));
    }
  }
  c.detail << primitive_count << " primitive bricks <= 8000 pass {2,3,5,11,4,9,16}";
  return c.finish(60.0);
}

CheckResult check_diophantine_spots() {
  Checker c(8, "six-square triple and non-perfect bricks");
  auto six = six_square_check(1873432, 2288168, 2399057);
  bool six_ok = true;
  for (auto& [expr, ok] : six) six_ok = six_ok && ok;
  c.expect(six_ok, "1691 six-square triple fails");
  c.expect(!make_brick(44, 117, 240).perfect, "smallest brick reported perfect");
  c.expect(!make_brick(240, 252, 275).perfect, "(240,252,275) reported perfect");
  c.detail << "six-square triple ok; 73225 and 196769 are non-squares";
  return c.finish();
}

CheckResult check_oracle_equivalence() {
  Checker c(9, "generator/enumeration/scan oracles");
  {
    // Brute-force pair scan against the generator, every n <= 2000.
    std::uint32_t n_top = 2000;
    std::vector<Edge> brute;
    for (std::uint32_t a = 1; a <= n_top; ++a)
      for (std::uint32_t b = a + 1; b <= n_top; ++b)
        if (is_square(static_cast<u64>(a) * a + static_cast<u64>(b) * b))
          brute.push_back(Edge{a, b});
    std::sort(brute.begin(), brute.end());
    bool all_equal = true;
    for (std::uint32_t n = 1; n <= n_top && all_equal; ++n) {
      std::vector<Edge> expect;
      for (const Edge& e : brute)
        if (e.b <= n) expect.push_back(e);
      std::sort(expect.begin(), expect.end());
      all_equal = edges_up_to(n) == expect;
      if (!all_equal) c.expect(false, "edge generator disagrees at n=" + std::to_string(n));
    }
    if (all_equal) c.detail << "edges match brute force for all n<=2000";
  }
  {
    std::mt19937 rng(20220214);
    for (int trial = 0; trial < 200; ++trial) {
      std::uint32_t n = 4 + rng() % 9;  // up to 12 vertices
      std::vector<Edge> edges;
      for (std::uint32_t a = 1; a <= n; ++a)
        for (std::uint32_t b = a + 1; b <= n; ++b)
          if (rng() % 100 < 40) edges.push_back(Edge{a, b});
      BabylonGraph g = graph_from_edges(n, edges);
      auto tri = enumerate_triangles(g);
      auto quad = enumerate_k4(g);
      std::vector<std::array<std::uint32_t, 3>> tri_brute;
      for (std::uint32_t a = 1; a <= n; ++a)
        for (std::uint32_t b = a + 1; b <= n; ++b)
          for (std::uint32_t cc = b + 1; cc <= n; ++cc)
            if (g.has_edge(a, b) && g.has_edge(a, cc) && g.has_edge(b, cc))
              tri_brute.push_back({a, b, cc});
      std::vector<std::array<std::uint32_t, 4>> quad_brute;
      for (std::uint32_t a = 1; a <= n; ++a)
        for (std::uint32_t b = a + 1; b <= n; ++b)
          for (std::uint32_t cc = b + 1; cc <= n; ++cc)
            for (std::uint32_t d = cc + 1; d <= n; ++d)
              if (g.has_edge(a, b) && g.has_edge(a, cc) && g.has_edge(a, d) &&
                  g.has_edge(b, cc) && g.has_edge(b, d) && g.has_edge(cc, d))
                quad_brute.push_back({a, b, cc, d});
      if (tri != tri_brute || quad != quad_brute) {
        c.expect(false, "clique enumeration disagrees with subset search, trial " +
                            std::to_string(trial));
        break;
      }
    }
  }
  {
    ScanOptions accel, linear;
    linear.accelerate = false;
    accel.near_miss_cap = linear.near_miss_cap = 100000;
    for (auto& anchors :
         std::vector<std::vector<u64>>{{3}, {5, 12}, {44, 117, 240}, {693, 480, 140}}) {
      SearchReport a = scan_extend(anchors, 1, 100000, accel);
      SearchReport l = scan_extend(anchors, 1, 100000, linear);
      auto hit_ws = [](const SearchReport& r) {
        std::vector<u64> ws;
        for (auto& h : r.exact_hits) ws.push_back(h.w);
        return ws;
      };
      auto near_ws = [](const SearchReport& r) {
        std::set<u64> ws;
        for (auto& nm : r.near_misses) ws.insert(nm.w);
        return ws;
      };
      c.expect(hit_ws(a) == hit_ws(l), "accelerated exact hits differ from linear scan");
      c.expect(near_ws(a) == near_ws(l), "accelerated candidate set differs from linear scan");
    }
  }
  return c.finish();
}

CheckResult check_growth_series() {
  Checker c(10, "edge/triangle growth series");
  auto rows = growth_series(25000, 1000);
  c.expect(rows.size() == 25, "row count != 25");
  bool finite_positive = true;
  for (const GrowthRow& r : rows)
    finite_positive = finite_positive && std::isfinite(r.f1_ratio) && r.f1_ratio > 0 &&
                      std::isfinite(r.f2_ratio) && r.f2_ratio >= 0;
  c.expect(finite_positive, "non-finite or non-positive ratio");
  if (rows.size() >= 5) {
    double lo = rows[rows.size() - 5].f1_ratio, hi = lo;
    for (std::size_t i = rows.size() - 5; i < rows.size(); ++i) {
      lo = std::min(lo, rows[i].f1_ratio);
      hi = std::max(hi, rows[i].f1_ratio);
    }
    double spread = (hi - lo) / lo;
    c.expect(spread < 0.10, "last-five f1 ratio spread " + std::to_string(spread) + " >= 10%");
    c.detail << "last-five f1 spread " << spread;
  }
  std::string csv_a = growth_csv(rows);
  std::string csv_b = growth_csv(growth_series(25000, 1000));
  c.expect(csv_a == csv_b, "CSV not byte-identical across regenerations");
  return c.finish(600.0);
}

CheckResult check_k4_search() {
  Checker c(11, "4-clique search n=1000");
  SearchReport report = k4_hunt(1000, 100000);
  c.expect(report.k4_hits.empty(), "unexpected 4-clique hit");
  c.expect(report.triangle_count == 10, "triangle count != 10");
  c.detail << "triangles=" << report.triangle_count << " steps=" << report.steps;
  return c.finish(60.0);
}

}  // namespace

std::vector<CheckResult> run_reference_suite(const VerifyOptions& opts) {
  std::vector<CheckResult> results;
  results.push_back(check_f_vector());
  results.push_back(check_betti());
  results.push_back(check_diameter());
  results.push_back(check_planarity_threshold());
  results.push_back(check_brick_tables());
  results.push_back(check_remark_suite(opts));
  results.push_back(check_impossibility_oracles());
  results.push_back(check_diophantine_spots());
  results.push_back(check_oracle_equivalence());
  results.push_back(check_growth_series());
  results.push_back(check_k4_search());
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace babylon
