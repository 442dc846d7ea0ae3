#include "babylon/graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "babylon/parallel.hpp"

namespace babylon {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::uint32_t n) : parent(n + 1) {
    for (std::uint32_t v = 0; v <= n; ++v) parent[v] = v;
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Keep the smaller vertex as the root so labels come out canonical.
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

bool sorted_intersect_nonempty(std::span<const std::uint32_t> xs,
                               std::span<const std::uint32_t> ys) {
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    if (xs[i] == ys[j]) return true;
    if (xs[i] < ys[j])
      ++i;
    else
      ++j;
  }
  return false;
}

}  // namespace

bool BabylonGraph::has_edge(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0 || a > n || b > n) return false;
  auto nb = adjacency(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

BabylonGraph graph_from_edges(std::uint32_t n, const std::vector<Edge>& edges) {
  BabylonGraph g;
  g.n = n;
  g.offsets.assign(static_cast<std::size_t>(n) + 2, 0);
  for (const Edge& e : edges) {
    if (e.a == 0 || e.b == 0 || e.a >= e.b || e.b > n)
      throw std::invalid_argument("graph_from_edges: edge out of range or not canonical");
    ++g.offsets[e.a + 1];
    ++g.offsets[e.b + 1];
  }
  for (std::uint32_t v = 1; v <= n; ++v) g.offsets[v + 1] += g.offsets[v];
  g.adj.resize(edges.size() * 2);
  std::vector<std::uint64_t> cursor(g.offsets.begin(), g.offsets.end());
  for (const Edge& e : edges) {
    g.adj[cursor[e.a]++] = e.b;
    g.adj[cursor[e.b]++] = e.a;
  }
  for (std::uint32_t v = 1; v <= n; ++v)
    std::sort(g.adj.begin() + g.offsets[v], g.adj.begin() + g.offsets[v + 1]);

  UnionFind uf(n);
  for (const Edge& e : edges) uf.unite(e.a, e.b);
  g.component_id.resize(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t v = 1; v <= n; ++v) g.component_id[v] = uf.find(v);
  return g;
}

BabylonGraph build(std::uint32_t n, const BuildOptions& opts) {
  if (n == 0) throw std::invalid_argument("build: n must be positive");
  if (n > opts.max_n)
    throw ResourceLimitError("build: n exceeds the configured vertex ceiling");
  return graph_from_edges(n, edges_up_to(n));
}

std::vector<ComponentSummary> component_summaries(const BabylonGraph& g) {
  std::unordered_map<std::uint32_t, ComponentSummary> by_rep;
  by_rep.reserve(g.n / 2);
  for (std::uint32_t v = 1; v <= g.n; ++v) {
    ComponentSummary& s = by_rep[g.component_id[v]];
    s.representative = g.component_id[v];
    s.size += 1;
  }
  for (std::uint32_t v = 1; v <= g.n; ++v) {
    for (std::uint32_t w : g.adjacency(v)) {
      if (v < w) by_rep[g.component_id[v]].edge_count += 1;
    }
  }
  // A component holds a triangle iff some edge's endpoints share a partner.
  for (std::uint32_t v = 1; v <= g.n; ++v) {
    ComponentSummary& s = by_rep[g.component_id[v]];
    if (s.has_triangle) continue;
    for (std::uint32_t w : g.adjacency(v)) {
      if (v < w && sorted_intersect_nonempty(g.adjacency(v), g.adjacency(w))) {
        s.has_triangle = true;
        break;
      }
    }
  }
  std::vector<ComponentSummary> out;
  out.reserve(by_rep.size());
  for (auto& [rep, s] : by_rep) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const ComponentSummary& a, const ComponentSummary& b) {
    return a.representative < b.representative;
  });
  return out;
}

ComponentSummary main_component(const BabylonGraph& g) {
  auto all = component_summaries(g);
  const ComponentSummary* best = nullptr;
  for (const ComponentSummary& s : all) {
    if (!best || s.size > best->size) best = &s;  // ties fall to the smaller representative
  }
  if (!best) throw std::invalid_argument("main_component: empty graph");
  return *best;
}

std::vector<std::uint32_t> component_vertices(const BabylonGraph& g,
                                              std::uint32_t representative) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 1; v <= g.n; ++v)
    if (g.component_id[v] == representative) out.push_back(v);
  return out;
}

std::uint32_t diameter(const BabylonGraph& g, const ComponentSummary& component,
                       const DiameterOptions& opts) {
  if (component.size == 0) throw std::invalid_argument("diameter: empty component");
  if (component.size > opts.max_component_size)
    throw ResourceLimitError("diameter: component exceeds the configured size ceiling");

  // Re-index the component so per-source scratch is component-sized.
  std::vector<std::uint32_t> verts = component_vertices(g, component.representative);
  std::uint32_t m = static_cast<std::uint32_t>(verts.size());
  std::vector<std::uint32_t> local(static_cast<std::size_t>(g.n) + 1, 0);
  for (std::uint32_t i = 0; i < m; ++i) local[verts[i]] = i;
  std::vector<std::uint64_t> off(m + 1, 0);
  for (std::uint32_t i = 0; i < m; ++i) off[i + 1] = off[i] + g.degree(verts[i]);
  std::vector<std::uint32_t> nbr(off[m]);
  for (std::uint32_t i = 0; i < m; ++i) {
    std::uint64_t pos = off[i];
    for (std::uint32_t w : g.adjacency(verts[i])) nbr[pos++] = local[w];
  }

  std::atomic<std::uint32_t> best{0};
  parallel_for_blocks(0, m, [&](std::size_t lo, std::size_t hi) {
    std::vector<std::uint32_t> dist(m);
    std::vector<std::uint32_t> queue(m);
    std::uint32_t local_best = 0;
    for (std::size_t s = lo; s < hi; ++s) {
      std::fill(dist.begin(), dist.end(), UINT32_MAX);
      std::uint32_t head = 0, tail = 0;
      dist[s] = 0;
      queue[tail++] = static_cast<std::uint32_t>(s);
      std::uint32_t far = 0;
      while (head < tail) {
        std::uint32_t v = queue[head++];
        std::uint32_t dv = dist[v];
        for (std::uint64_t k = off[v]; k < off[v + 1]; ++k) {
          std::uint32_t w = nbr[k];
          if (dist[w] == UINT32_MAX) {
            dist[w] = dv + 1;
            far = std::max(far, dv + 1);
            queue[tail++] = w;
          }
        }
      }
      local_best = std::max(local_best, far);
    }
    std::uint32_t seen = best.load();
    while (local_best > seen && !best.compare_exchange_weak(seen, local_best)) {
    }
  });
  return best.load();
}

std::vector<std::uint32_t> isolated_vertices(const BabylonGraph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 1; v <= g.n; ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

std::vector<std::uint32_t> leaves(const BabylonGraph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 1; v <= g.n; ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

std::map<std::uint32_t, std::uint64_t> degree_histogram(const BabylonGraph& g) {
  std::map<std::uint32_t, std::uint64_t> hist;
  for (std::uint32_t v = 1; v <= g.n; ++v) ++hist[g.degree(v)];
  return hist;
}

std::optional<std::vector<u64>> find_scaling_path(u64 v, std::uint32_t max_depth, u64 bound) {
  if (v == 0) throw std::invalid_argument("find_scaling_path: vertex must be positive");
  if (bound == 0) bound = 100 * v;

  std::deque<u64> queue{v};
  std::unordered_map<u64, u64> parent;  // child -> predecessor
  std::unordered_map<u64, std::uint32_t> depth{{v, 0}};
  while (!queue.empty()) {
    u64 x = queue.front();
    queue.pop_front();
    std::uint32_t d = depth[x];
    if (d >= max_depth) continue;
    for (u64 y : neighbors_unbounded(x)) {
      if (y > bound || depth.contains(y)) continue;
      depth[y] = d + 1;
      parent[y] = x;
      if (y != v && y % v == 0) {
        std::vector<u64> path{y};
        for (u64 cur = x; ; cur = parent[cur]) {
          path.push_back(cur);
          if (cur == v) break;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

}  // namespace babylon
