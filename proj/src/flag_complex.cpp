#include "babylon/flag_complex.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "babylon/numthy.hpp"
#include "babylon/parallel.hpp"

namespace babylon {

namespace {

void intersect_above(std::span<const std::uint32_t> xs, std::span<const std::uint32_t> ys,
                     std::uint32_t floor_excl, std::vector<std::uint32_t>& out) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    if (xs[i] == ys[j]) {
      if (xs[i] > floor_excl) out.push_back(xs[i]);
      ++i;
      ++j;
    } else if (xs[i] < ys[j]) {
      ++i;
    } else {
      ++j;
    }
  }
}

// Sparse row echelon over Z/modulus; rows arrive as sorted (column, value)
// lists with small entries. Returns the rank.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::uint64_t modulus) : mod_(modulus) {}

  using Row = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

  void add_row(Row row) {
    normalize_entries(row);
    for (;;) {
      if (row.empty()) return;
      auto pivot = pivots_.find(row.front().first);
      if (pivot == pivots_.end()) break;
      row = subtract_scaled(row, pivot->second, row.front().second);
    }
    // New pivot: scale so the leading value is 1.
    std::uint64_t inv = inverse(row.front().second);
    for (auto& [c, v] : row) v = (v * inv) % mod_;
    pivots_.emplace(row.front().first, std::move(row));
  }

  std::uint64_t rank() const { return pivots_.size(); }

 private:
  std::uint64_t mod_;
  std::unordered_map<std::uint32_t, Row> pivots_;

  void normalize_entries(Row& row) const {
    for (auto& [c, v] : row) v %= mod_;
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
  }

  // row - factor * pivot (pivot has leading value 1).
  Row subtract_scaled(const Row& row, const Row& pivot, std::uint64_t factor) const {
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        std::uint64_t v = (mod_ - (pivot[j].second * factor) % mod_) % mod_;
        if (v != 0) out.emplace_back(pivot[j].first, v);
        ++j;
      } else {
        std::uint64_t v = (row[i].second + mod_ - (pivot[j].second * factor) % mod_) % mod_;
        if (v != 0) out.emplace_back(row[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::uint64_t inverse(std::uint64_t a) const {
    // Fermat: a^(p-2) mod p; both moduli used here are prime.
    std::uint64_t e = mod_ - 2, base = a % mod_, acc = 1;
    while (e > 0) {
      if (e & 1) acc = (acc * base) % mod_;
      base = (base * base) % mod_;
      e >>= 1;
    }
    return acc;
  }
};

constexpr std::uint64_t kRankModulus = 2147483647;  // 2^31 - 1, prime

std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct ScopedCells {
  std::uint64_t f0 = 0;
  std::vector<Edge> edges;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::vector<std::array<std::uint32_t, 4>> tetrahedra;
  std::uint64_t component_count = 0;
};

ScopedCells collect_cells(const BabylonGraph& g, Scope scope) {
  ScopedCells cells;
  std::uint32_t rep = 0;
  if (scope == Scope::Main) rep = main_component(g).representative;
  auto in_scope = [&](std::uint32_t v) {
    return scope == Scope::Whole || g.component_id[v] == rep;
  };

  for (std::uint32_t v = 1; v <= g.n; ++v)
    if (in_scope(v)) ++cells.f0;
  for (std::uint32_t v = 1; v <= g.n; ++v) {
    if (!in_scope(v)) continue;
    for (std::uint32_t w : g.adjacency(v))
      if (v < w) cells.edges.push_back(Edge{v, w});
  }
  for (auto& t : enumerate_triangles(g))
    if (in_scope(t[0])) cells.triangles.push_back(t);
  for (auto& q : enumerate_k4(g))
    if (in_scope(q[0])) cells.tetrahedra.push_back(q);

  if (scope == Scope::Main) {
    cells.component_count = 1;
  } else {
    cells.component_count = component_summaries(g).size();
  }
  return cells;
}

}  // namespace

std::vector<std::array<std::uint32_t, 3>> enumerate_triangles(const BabylonGraph& g) {
  std::vector<std::vector<std::array<std::uint32_t, 3>>> chunks;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  {
    // Partition vertices into worker blocks; chunk results concatenate in
    // vertex order, so the merged list is already sorted.
    std::size_t workers = worker_count();
    std::size_t span = (g.n + workers) / workers + 1;
    for (std::size_t lo = 1; lo <= g.n; lo += span)
      ranges.emplace_back(lo, std::min<std::size_t>(lo + span, g.n + 1));
    chunks.resize(ranges.size());
  }
  parallel_for_blocks(0, ranges.size(), [&](std::size_t cb, std::size_t ce) {
    std::vector<std::uint32_t> common;
    for (std::size_t ci = cb; ci < ce; ++ci) {
      auto& out = chunks[ci];
      for (std::uint32_t a = ranges[ci].first; a < ranges[ci].second; ++a) {
        for (std::uint32_t b : g.adjacency(a)) {
          if (b <= a) continue;
          intersect_above(g.adjacency(a), g.adjacency(b), b, common);
          for (std::uint32_t c : common) out.push_back({a, b, c});
        }
      }
    }
  });
  std::vector<std::array<std::uint32_t, 3>> all;
  for (auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
  return all;
}

std::vector<std::array<std::uint32_t, 4>> enumerate_k4(const BabylonGraph& g) {
  std::vector<std::array<std::uint32_t, 4>> out;
  std::vector<std::uint32_t> common, common3;
  for (auto& [a, b, c] : enumerate_triangles(g)) {
    intersect_above(g.adjacency(a), g.adjacency(b), c, common);
    intersect_above(common, g.adjacency(c), c, common3);
    for (std::uint32_t d : common3) out.push_back({a, b, c, d});
  }
  return out;
}

FlagComplex f_vector(const BabylonGraph& g, Scope scope) {
  ScopedCells cells = collect_cells(g, scope);
  FlagComplex fc;
  fc.scope = scope;
  fc.f = {cells.f0, cells.edges.size(), cells.triangles.size(), cells.tetrahedra.size()};
  fc.triangles = std::move(cells.triangles);
  fc.tetrahedra = std::move(cells.tetrahedra);
  return fc;
}

std::int64_t euler_characteristic(const FlagComplex& fc) {
  return static_cast<std::int64_t>(fc.f[0]) - static_cast<std::int64_t>(fc.f[1]) +
         static_cast<std::int64_t>(fc.f[2]) - static_cast<std::int64_t>(fc.f[3]);
}

BettiVector betti(const BabylonGraph& g, Scope scope) {
  ScopedCells cells = collect_cells(g, scope);

  std::unordered_map<std::uint64_t, std::uint32_t> edge_index;
  edge_index.reserve(cells.edges.size());
  for (std::uint32_t i = 0; i < cells.edges.size(); ++i)
    edge_index.emplace(edge_key(cells.edges[i].a, cells.edges[i].b), i);
  std::map<std::array<std::uint32_t, 3>, std::uint32_t> tri_index;

  auto rank_d2_over = [&](std::uint64_t modulus) {
    SparseEliminator elim(modulus);
    for (auto& [a, b, c] : cells.triangles) {
      // (a<b<c) -> +[b,c] - [a,c] + [a,b]
      SparseEliminator::Row row;
      row.emplace_back(edge_index.at(edge_key(a, b)), 1);
      row.emplace_back(edge_index.at(edge_key(a, c)), modulus - 1);
      row.emplace_back(edge_index.at(edge_key(b, c)), 1);
      std::sort(row.begin(), row.end());
      elim.add_row(std::move(row));
    }
    return elim.rank();
  };
  auto rank_d3_over = [&](std::uint64_t modulus) {
    if (cells.tetrahedra.empty()) return std::uint64_t{0};
    if (tri_index.empty()) {
      for (std::uint32_t i = 0; i < cells.triangles.size(); ++i)
        tri_index.emplace(cells.triangles[i], i);
    }
    auto tri_at = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
      return tri_index.at({x, y, z});
    };
    SparseEliminator elim(modulus);
    for (auto& [a, b, c, d] : cells.tetrahedra) {
      SparseEliminator::Row row;
      row.emplace_back(tri_at(b, c, d), 1);
      row.emplace_back(tri_at(a, c, d), modulus - 1);
      row.emplace_back(tri_at(a, b, d), 1);
      row.emplace_back(tri_at(a, b, c), modulus - 1);
      std::sort(row.begin(), row.end());
      elim.add_row(std::move(row));
    }
    return elim.rank();
  };

  BettiVector bv;
  bv.field_modulus = kRankModulus;
  bv.b0 = cells.component_count;
  bv.rank_d1 = cells.f0 - bv.b0;
  bv.rank_d2 = rank_d2_over(kRankModulus);
  bv.rank_d3 = rank_d3_over(kRankModulus);
  bv.torsion_warning =
      rank_d2_over(2) != bv.rank_d2 || rank_d3_over(2) != bv.rank_d3;

  std::uint64_t f1 = cells.edges.size(), f2 = cells.triangles.size(),
                f3 = cells.tetrahedra.size();
  if (f1 < bv.rank_d1 + bv.rank_d2 || f2 < bv.rank_d2 + bv.rank_d3 || f3 < bv.rank_d3)
    throw std::logic_error("betti: boundary ranks exceed cell counts");
  bv.b1 = f1 - bv.rank_d1 - bv.rank_d2;
  bv.b2 = f2 - bv.rank_d2 - bv.rank_d3;
  bv.b3 = f3 - bv.rank_d3;
  return bv;
}

std::vector<GrowthRow> growth_series(std::uint32_t n_max, std::uint32_t step,
                                     const BuildOptions& opts) {
  if (step == 0) throw std::invalid_argument("growth_series: step must be >= 1");
  std::vector<GrowthRow> rows;
  for (std::uint32_t n = step; n <= n_max; n += step) {
    BabylonGraph g = build(n, opts);
    FlagComplex whole = f_vector(g, Scope::Whole);
    FlagComplex main = f_vector(g, Scope::Main);
    double norm = static_cast<double>(n) * lambert_w(static_cast<double>(n));
    GrowthRow r;
    r.n = n;
    r.f1_ratio = static_cast<double>(whole.f[1]) / norm;
    r.f2_ratio = static_cast<double>(whole.f[2]) / norm;
    r.f1_main_ratio = static_cast<double>(main.f[1]) / norm;
    r.f2_main_ratio = static_cast<double>(main.f[2]) / norm;
    rows.push_back(r);
  }
  return rows;
}

std::string growth_csv(const std::vector<GrowthRow>& rows) {
  std::string out = "n,f1_ratio,f2_ratio,f1_main_ratio,f2_main_ratio\n";
  char line[256];
  for (const GrowthRow& r : rows) {
    std::snprintf(line, sizeof(line), "%u,%.12g,%.12g,%.12g,%.12g\n", r.n, r.f1_ratio,
                  r.f2_ratio, r.f1_main_ratio, r.f2_main_ratio);
    out += line;
  }
  return out;
}

}  // namespace babylon
