#include "babylon/planarity.hpp"

#include <algorithm>
#include <limits>

namespace babylon {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Left-right planarity criterion (orientation + constraint phases over a
// depth-first forest, both iterative). Verdict only; no embedding.
class LeftRightTest {
 public:
  LeftRightTest(std::uint32_t n, const std::vector<Edge>& edges) : n_(n), m_(edges.size()) {
    eu_.reserve(m_);
    ev_.reserve(m_);
    inc_.assign(n_ + 1, {});
    for (std::uint32_t i = 0; i < m_; ++i) {
      eu_.push_back(edges[i].a);
      ev_.push_back(edges[i].b);
      inc_[edges[i].a].push_back(i);
      inc_[edges[i].b].push_back(i);
    }
  }

  bool run() {
    if (m_ <= 2 || n_ <= 4) return true;
    orient();
    sort_by_nesting();
    return constraints();
  }

 private:
  struct Interval {
    std::uint32_t low = kNone;
    std::uint32_t high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };
  struct ConflictPair {
    Interval left, right;
  };

  std::uint32_t n_, m_;
  std::vector<std::uint32_t> eu_, ev_;
  std::vector<std::vector<std::uint32_t>> inc_;

  std::vector<std::uint32_t> src_, dst_;  // orientation assigned by the DFS
  std::vector<bool> oriented_;
  std::vector<std::uint32_t> height_, parent_edge_;
  std::vector<std::uint32_t> lowpt_, lowpt2_, nesting_;
  std::vector<std::vector<std::uint32_t>> out_;  // oriented out-edges per vertex

  std::vector<ConflictPair> stack_;
  std::vector<std::uint32_t> ref_;
  std::vector<std::uint32_t> lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;

  std::uint32_t other(std::uint32_t e, std::uint32_t v) const {
    return eu_[e] == v ? ev_[e] : eu_[e];
  }

  void propagate_to_parent(std::uint32_t e) {
    std::uint32_t v = src_[e];
    nesting_[e] = 2 * lowpt_[e] + (lowpt2_[e] < height_[v] ? 1 : 0);
    std::uint32_t pe = parent_edge_[v];
    if (pe == kNone) return;
    if (lowpt_[e] < lowpt_[pe]) {
      lowpt2_[pe] = std::min(lowpt_[pe], lowpt2_[e]);
      lowpt_[pe] = lowpt_[e];
    } else if (lowpt_[e] > lowpt_[pe]) {
      lowpt2_[pe] = std::min(lowpt2_[pe], lowpt_[e]);
    } else {
      lowpt2_[pe] = std::min(lowpt2_[pe], lowpt2_[e]);
    }
  }

  void orient() {
    src_.assign(m_, kNone);
    dst_.assign(m_, kNone);
    oriented_.assign(m_, false);
    height_.assign(n_ + 1, kNone);
    parent_edge_.assign(n_ + 1, kNone);
    lowpt_.assign(m_, 0);
    lowpt2_.assign(m_, 0);
    nesting_.assign(m_, 0);

    std::vector<std::pair<std::uint32_t, std::size_t>> frames;  // (vertex, incidence cursor)
    for (std::uint32_t root = 1; root <= n_; ++root) {
      if (height_[root] != kNone || inc_[root].empty()) continue;
      height_[root] = 0;
      frames.emplace_back(root, 0);
      while (!frames.empty()) {
        auto& [v, cursor] = frames.back();
        if (cursor < inc_[v].size()) {
          std::uint32_t e = inc_[v][cursor++];
          if (oriented_[e]) continue;
          std::uint32_t w = other(e, v);
          oriented_[e] = true;
          src_[e] = v;
          dst_[e] = w;
          lowpt_[e] = height_[v];
          lowpt2_[e] = height_[v];
          if (height_[w] == kNone) {
            parent_edge_[w] = e;
            height_[w] = height_[v] + 1;
            frames.emplace_back(w, 0);
          } else {
            lowpt_[e] = height_[w];
            propagate_to_parent(e);
          }
        } else {
          std::uint32_t v_done = v;
          frames.pop_back();
          std::uint32_t pe = parent_edge_[v_done];
          if (pe != kNone) propagate_to_parent(pe);
        }
      }
    }
  }

  void sort_by_nesting() {
    out_.assign(n_ + 1, {});
    for (std::uint32_t e = 0; e < m_; ++e)
      if (oriented_[e]) out_[src_[e]].push_back(e);
    for (std::uint32_t v = 1; v <= n_; ++v) {
      std::sort(out_[v].begin(), out_[v].end(), [&](std::uint32_t a, std::uint32_t b) {
        return nesting_[a] != nesting_[b] ? nesting_[a] < nesting_[b] : a < b;
      });
    }
  }

  bool conflicting(const Interval& i, std::uint32_t b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  std::uint32_t lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  // Integrate the constraints of a finished out-edge ei of v; e is v's
  // parent edge. Returns false on a left-right contradiction.
  bool add_constraints(std::uint32_t ei, std::uint32_t e) {
    ConflictPair merged;
    // Return edges of ei form one consolidated pair.
    do {
      if (stack_.size() <= stack_bottom_[ei]) break;
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (merged.right.empty())
          merged.right.high = q.right.high;
        else
          ref_[merged.right.low] = q.right.high;
        merged.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (stack_.size() > stack_bottom_[ei]);

    // Earlier siblings whose intervals overlap ei go to the other side.
    while (!stack_.empty() &&
           (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (conflicting(q.right, ei)) return false;
      if (merged.right.low != kNone) ref_[merged.right.low] = q.right.high;
      if (q.right.low != kNone) merged.right.low = q.right.low;
      if (merged.left.empty())
        merged.left.high = q.left.high;
      else
        ref_[merged.left.low] = q.left.high;
      merged.left.low = q.left.low;
    }
    if (!(merged.left.empty() && merged.right.empty())) stack_.push_back(merged);
    return true;
  }

  void trim_back_edges(std::uint32_t u) {
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
    if (stack_.empty()) return;
    ConflictPair p = stack_.back();
    stack_.pop_back();
    while (p.left.high != kNone && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
    if (p.left.high == kNone && p.left.low != kNone) {
      ref_[p.left.low] = p.right.low;
      p.left.low = kNone;
    }
    while (p.right.high != kNone && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
    if (p.right.high == kNone && p.right.low != kNone) {
      ref_[p.right.low] = p.left.low;
      p.right.low = kNone;
    }
    stack_.push_back(p);
  }

  // Post-order work for out-edge ei of vertex v at position idx.
  bool finish_out_edge(std::uint32_t v, std::uint32_t ei, std::size_t idx) {
    if (lowpt_[ei] < height_[v]) {  // ei has a return edge below v
      std::uint32_t e = parent_edge_[v];
      if (idx == 0) {
        lowpt_edge_[e] = lowpt_edge_[ei];
      } else if (!add_constraints(ei, e)) {
        return false;
      }
    }
    return true;
  }

  bool constraints() {
    stack_.clear();
    ref_.assign(m_, kNone);
    lowpt_edge_.assign(m_, kNone);
    stack_bottom_.assign(m_, 0);

    struct Frame {
      std::uint32_t v;
      std::size_t cursor = 0;             // next out-edge to start
      std::uint32_t pending_edge = kNone;  // tree edge awaiting post-order work
      std::size_t pending_idx = 0;
    };
    std::vector<Frame> frames;
    for (std::uint32_t root = 1; root <= n_; ++root) {
      if (parent_edge_[root] != kNone || height_[root] != 0 || inc_[root].empty()) continue;
      frames.push_back({root});
      while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.pending_edge != kNone) {
          std::uint32_t ei = f.pending_edge;
          f.pending_edge = kNone;
          if (!finish_out_edge(f.v, ei, f.pending_idx)) return false;
        }
        if (f.cursor < out_[f.v].size()) {
          std::size_t idx = f.cursor;
          std::uint32_t ei = out_[f.v][f.cursor++];
          stack_bottom_[ei] = stack_.size();
          if (ei == parent_edge_[dst_[ei]]) {  // tree edge: recurse, then finish
            f.pending_edge = ei;
            f.pending_idx = idx;
            frames.push_back({dst_[ei]});
          } else {  // back edge
            lowpt_edge_[ei] = ei;
            stack_.push_back({Interval{}, Interval{ei, ei}});
            if (!finish_out_edge(f.v, ei, idx)) return false;
          }
        } else {
          std::uint32_t v = f.v;
          frames.pop_back();
          std::uint32_t e = parent_edge_[v];
          if (e != kNone) {
            std::uint32_t u = src_[e];
            trim_back_edges(u);
            if (lowpt_[e] < height_[u]) {  // e has its own return edge
              std::uint32_t hl = stack_.back().left.high;
              std::uint32_t hr = stack_.back().right.high;
              if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr]))
                ref_[e] = hl;
              else
                ref_[e] = hr;
            }
          }
        }
      }
    }
    return true;
  }
};

}  // namespace

bool lr_planar(std::uint32_t n, const std::vector<Edge>& edges) {
  return LeftRightTest(n, edges).run();
}

PlanarityVerdict is_planar(const BabylonGraph& g, std::size_t witness_edge_cap) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (std::uint32_t v = 1; v <= g.n; ++v)
    for (std::uint32_t w : g.adjacency(v))
      if (v < w) edges.push_back(Edge{v, w});

  PlanarityVerdict verdict;
  verdict.planar = lr_planar(g.n, edges);
  if (verdict.planar || edges.size() > witness_edge_cap) return verdict;

  // Edge-minimal non-planar subgraph: drop every edge whose removal keeps
  // the graph non-planar. What remains is a Kuratowski subdivision.
  std::vector<Edge> core = edges;
  for (std::size_t i = 0; i < core.size();) {
    std::vector<Edge> trial = core;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!lr_planar(g.n, trial)) {
      core = std::move(trial);
    } else {
      ++i;
    }
  }
  verdict.witness = std::move(core);
  return verdict;
}

}  // namespace babylon
