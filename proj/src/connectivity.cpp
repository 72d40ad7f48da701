#include "cubictour/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cubictour {

FlowScratch::FlowScratch(const Multigraph& g) {
  ids_ = g.vertices();
  for (int i = 0; i < static_cast<int>(ids_.size()); ++i) index_[ids_[i]] = i;
  out_.resize(ids_.size());
  for (EdgeId id : g.edges()) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) continue;  // loops never cross a cut
    int u = index_.at(e.u), v = index_.at(e.v);
    int a = static_cast<int>(arc_head_.size());
    arc_head_.push_back(v);
    arc_head_.push_back(u);
    arc_residual_.push_back(1);
    arc_residual_.push_back(1);
    out_[u].push_back(a);
    out_[v].push_back(a + 1);
  }
  parent_arc_.assign(ids_.size(), -1);
}

int FlowScratch::index_of(VertexId v) const { return index_.at(v); }

bool FlowScratch::bfs_augment(int s, int t) {
  std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
  parent_arc_[s] = -2;
  std::deque<int> queue{s};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int a : out_[v]) {
      int w = arc_head_[a];
      if (parent_arc_[w] != -1 || arc_residual_[a] == 0) continue;
      parent_arc_[w] = a;
      if (w == t) {
        int bottleneck = std::numeric_limits<int>::max();
        for (int x = t; x != s;) {
          int arc = parent_arc_[x];
          bottleneck = std::min(bottleneck, arc_residual_[arc]);
          x = arc_head_[arc ^ 1];
        }
        for (int x = t; x != s;) {
          int arc = parent_arc_[x];
          arc_residual_[arc] -= bottleneck;
          arc_residual_[arc ^ 1] += bottleneck;
          x = arc_head_[arc ^ 1];
        }
        return true;
      }
      queue.push_back(w);
    }
  }
  return false;
}

int FlowScratch::max_flow_capped(VertexId s, VertexId t, int cap) {
  std::fill(arc_residual_.begin(), arc_residual_.end(), 1);
  int si = index_of(s), ti = index_of(t);
  int flow = 0;
  while (flow <= cap && bfs_augment(si, ti)) ++flow;
  return flow;
}

std::set<VertexId> FlowScratch::residual_reachable(VertexId s) const {
  std::vector<char> seen(ids_.size(), 0);
  std::deque<int> queue{index_of(s)};
  seen[index_of(s)] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int a : out_[v]) {
      int w = arc_head_[a];
      if (!seen[w] && arc_residual_[a] > 0) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::set<VertexId> out;
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (seen[i]) out.insert(ids_[i]);
  return out;
}

namespace {

int connectivity_sweep(const Multigraph& g, int cap, bool parallel) {
  if (g.vertex_count() < 2) return 0;
  if (!g.is_connected()) return 0;
  const std::vector<VertexId> verts = g.vertices();
  const VertexId root = verts.front();
  const FlowScratch master(g);
  int best = std::numeric_limits<int>::max();
  const int m = static_cast<int>(verts.size());
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      FlowScratch scratch = master;
      int local = std::numeric_limits<int>::max();
#pragma omp for schedule(dynamic, 4) nowait
      for (int i = 1; i < m; ++i)
        local = std::min(local, scratch.max_flow_capped(root, verts[i], cap));
#pragma omp critical
      best = std::min(best, local);
    }
    return best;
#endif
  }
  FlowScratch scratch = master;
  for (int i = 1; i < m; ++i) {
    best = std::min(best, scratch.max_flow_capped(root, verts[i], cap));
    if (best == 0) break;
  }
  return best;
}

}  // namespace

int edge_connectivity(const Multigraph& g) {
  return connectivity_sweep(g, std::numeric_limits<int>::max() - 1, true);
}

int edge_connectivity_serial(const Multigraph& g) {
  return connectivity_sweep(g, std::numeric_limits<int>::max() - 1, false);
}

bool edge_connectivity_at_least(const Multigraph& g, int k) {
  if (k <= 0) return true;
  return connectivity_sweep(g, k - 1, true) >= k;
}

namespace {

// Dense scratch view for repeated bridge searches with two edges masked.
// A 3-cut {a, b, c} exists exactly when c is a bridge of g - a - b: the two
// components it leaves behind are the cut sides and 3-edge-connectivity
// forces a and b to cross between them.
class BridgeScratch {
 public:
  explicit BridgeScratch(const Multigraph& g) {
    ids_ = g.vertices();
    for (int i = 0; i < static_cast<int>(ids_.size()); ++i)
      index_[ids_[i]] = i;
    edge_ids_ = g.edges();
    for (int k = 0; k < static_cast<int>(edge_ids_.size()); ++k) {
      const Edge& e = g.edge(edge_ids_[k]);
      int u = index_.at(e.u), v = index_.at(e.v);
      ends_.push_back({u, v});
      adj_.resize(ids_.size());
      if (u != v) {
        adj_[u].push_back(k);
        adj_[v].push_back(k);
      }
    }
    adj_.resize(ids_.size());
  }

  int edge_count() const { return static_cast<int>(edge_ids_.size()); }
  EdgeId edge_id(int k) const { return edge_ids_[k]; }

  // All bridges of g minus the two masked edges, ascending. The masked
  // graph stays connected for any two edges of a 3-edge-connected graph.
  std::vector<int> bridges(int skip1, int skip2) {
    const int n = static_cast<int>(ids_.size());
    disc_.assign(n, -1);
    low_.assign(n, 0);
    int timer = 0;
    std::vector<int> found;
    // iterative lowlink DFS
    struct Frame {
      int vertex;
      int via_edge;
      std::size_t next;
    };
    std::vector<Frame> stack;
    stack.push_back({0, -1, 0});
    disc_[0] = low_[0] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj_[f.vertex].size()) {
        int k = adj_[f.vertex][f.next++];
        if (k == skip1 || k == skip2 || k == f.via_edge) continue;
        auto [a, b] = ends_[k];
        int to = (a == f.vertex) ? b : a;
        if (disc_[to] == -1) {
          disc_[to] = low_[to] = timer++;
          stack.push_back({to, k, 0});
        } else {
          low_[f.vertex] = std::min(low_[f.vertex], disc_[to]);
        }
      } else {
        int child = f.vertex;
        int via = f.via_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().vertex;
          low_[parent] = std::min(low_[parent], low_[child]);
          if (low_[child] > disc_[parent]) found.push_back(via);
        }
      }
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  // Vertices on one side once edges {skip1, skip2, skip3} are removed:
  // the component of the first endpoint of skip3.
  std::set<VertexId> side_of(int skip1, int skip2, int skip3) const {
    std::vector<char> seen(ids_.size(), 0);
    std::deque<int> queue{ends_[skip3].first};
    seen[ends_[skip3].first] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int k : adj_[v]) {
        if (k == skip1 || k == skip2 || k == skip3) continue;
        auto [a, b] = ends_[k];
        int to = (a == v) ? b : a;
        if (!seen[to]) {
          seen[to] = 1;
          queue.push_back(to);
        }
      }
    }
    std::set<VertexId> out;
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (seen[i]) out.insert(ids_[i]);
    return out;
  }

 private:
  std::vector<VertexId> ids_;
  std::map<VertexId, int> index_;
  std::vector<EdgeId> edge_ids_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> disc_, low_;
};

std::optional<CutSpec> essential_3cut_impl(const Multigraph& g,
                                           bool parallel) {
  if (g.vertex_count() < 6) return std::nullopt;
  BridgeScratch master(g);
  const int m = master.edge_count();
  const int total_pairs = m * (m - 1) / 2;

  auto pair_at = [&](int index) {
    // pairs (i, j), i < j, ordered lexicographically
    int i = 0, before = 0;
    while (before + (m - 1 - i) <= index) {
      before += m - 1 - i;
      ++i;
    }
    int j = i + 1 + (index - before);
    return std::pair<int, int>{i, j};
  };

  // An essential cut found at pair index p; keep the smallest p.
  auto probe = [&](BridgeScratch& scratch, int index) -> std::optional<CutSpec> {
    auto [i, j] = pair_at(index);
    for (int bridge : scratch.bridges(i, j)) {
      std::set<VertexId> side = scratch.side_of(i, j, bridge);
      int far = g.vertex_count() - static_cast<int>(side.size());
      if (static_cast<int>(side.size()) < 2 || far < 2) continue;
      CutSpec cut = cut_around(g, side);
      if (cut.weight() != 3) continue;
      // both sides must induce an edge
      int inside = 0;
      for (EdgeId id : g.edges()) {
        const Edge& e = g.edge(id);
        if (side.count(e.u) && side.count(e.v)) ++inside;
      }
      int outside = g.edge_count() - inside - cut.weight();
      if (inside == 0 || outside == 0) continue;
      return cut;
    }
    return std::nullopt;
  };

  if (parallel) {
#ifdef _OPENMP
    constexpr int kChunk = 256;
    for (int base = 0; base < total_pairs; base += kChunk) {
      int limit = std::min(total_pairs, base + kChunk);
      int best_index = std::numeric_limits<int>::max();
      std::optional<CutSpec> best;
#pragma omp parallel
      {
        BridgeScratch scratch = master;
        int local_index = std::numeric_limits<int>::max();
        std::optional<CutSpec> local;
#pragma omp for schedule(dynamic, 16) nowait
        for (int index = base; index < limit; ++index) {
          if (auto cut = probe(scratch, index)) {
            if (index < local_index) {
              local_index = index;
              local = cut;
            }
          }
        }
#pragma omp critical
        if (local_index < best_index) {
          best_index = local_index;
          best = local;
        }
      }
      if (best) return best;
    }
    return std::nullopt;
#endif
  }
  BridgeScratch scratch = master;
  for (int index = 0; index < total_pairs; ++index)
    if (auto cut = probe(scratch, index)) return cut;
  return std::nullopt;
}

void validate_for_cut_search(const Multigraph& g) {
  if (!g.is_cubic()) throw RejectedInput("essential-cut search needs a cubic graph");
  if (edge_connectivity(g) != 3)
    throw RejectedInput("essential-cut search needs edge connectivity 3");
}

}  // namespace

std::optional<CutSpec> find_essential_3cut(const Multigraph& g) {
  validate_for_cut_search(g);
  return essential_3cut_impl(g, true);
}

std::optional<CutSpec> find_essential_3cut_serial(const Multigraph& g) {
  validate_for_cut_search(g);
  return essential_3cut_impl(g, false);
}

void validate_cubic_3ec(const Multigraph& g, int min_n) {
  if (g.vertex_count() < min_n)
    throw RejectedInput("graph has " + std::to_string(g.vertex_count()) +
                        " vertices, need at least " + std::to_string(min_n));
  if (!g.is_connected()) throw RejectedInput("graph is not connected");
  for (VertexId v : g.vertices())
    if (g.degree(v) != 3)
      throw RejectedInput("vertex " + std::to_string(v) + " has degree " +
                          std::to_string(g.degree(v)) + ", not cubic");

  // Exhibit a violating cut if connectivity is below 3.
  const std::vector<VertexId> verts = g.vertices();
  FlowScratch scratch(g);
  for (std::size_t i = 1; i < verts.size(); ++i) {
    int flow = scratch.max_flow_capped(verts[0], verts[i], 2);
    if (flow < 3) {
      std::set<VertexId> side = scratch.residual_reachable(verts[0]);
      std::ostringstream msg;
      msg << "edge connectivity " << flow << " < 3; cut side {";
      bool first = true;
      for (VertexId v : side) {
        if (!first) msg << ", ";
        msg << v;
        first = false;
      }
      msg << "}";
      throw RejectedInput(msg.str());
    }
  }
}

}  // namespace cubictour
