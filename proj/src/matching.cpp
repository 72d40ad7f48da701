#include "cubictour/matching.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace cubictour {

namespace {

// Edmonds' blossom search on a simple view of the graph. Parallel edges
// collapse to their smallest id; loops never match.
class BlossomMatcher {
 public:
  BlossomMatcher(const Multigraph& g, const std::set<VertexId>& skip_vertices,
                 const std::set<EdgeId>& forbidden) {
    for (VertexId v : g.vertices())
      if (!skip_vertices.count(v)) {
        index_[v] = static_cast<int>(ids_.size());
        ids_.push_back(v);
      }
    n_ = static_cast<int>(ids_.size());
    adj_.resize(n_);
    for (EdgeId id : g.edges()) {
      const Edge& e = g.edge(id);
      if (e.is_loop() || forbidden.count(id)) continue;
      if (skip_vertices.count(e.u) || skip_vertices.count(e.v)) continue;
      int u = index_.at(e.u), v = index_.at(e.v);
      auto key = std::minmax(u, v);
      if (rep_edge_.emplace(key, id).second) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
      }
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
    match_.assign(n_, -1);
  }

  std::set<EdgeId> run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_augmenting_path(v);
      while (u != -1) {
        int pv = parent_[u], ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    std::set<EdgeId> out;
    for (int v = 0; v < n_; ++v)
      if (match_[v] > v)
        out.insert(rep_edge_.at(std::minmax(v, match_[v])));
    return out;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<char> mark(n_, 0);
    for (;;) {
      a = base_[a];
      mark[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (mark[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_blossom_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    in_tree_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    in_tree_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int b = lowest_common_base(v, to);
          in_blossom_.assign(n_, 0);
          mark_blossom_path(v, b, to);
          mark_blossom_path(to, b, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          in_tree_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_ = 0;
  std::vector<VertexId> ids_;
  std::map<VertexId, int> index_;
  std::map<std::pair<int, int>, EdgeId> rep_edge_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> in_tree_, in_blossom_;
};

}  // namespace

Matching max_matching(const Multigraph& g, const std::set<EdgeId>& forced,
                      const std::set<EdgeId>& forbidden) {
  std::set<VertexId> covered;
  for (EdgeId id : forced) {
    if (forbidden.count(id))
      throw RejectedInput("edge " + std::to_string(id) +
                          " both forced and forbidden");
    const Edge& e = g.edge(id);
    if (e.is_loop())
      throw RejectedInput("self-loop cannot be matched");
    if (covered.count(e.u) || covered.count(e.v))
      throw RejectedInput("forced edges share a vertex");
    covered.insert(e.u);
    covered.insert(e.v);
  }

  BlossomMatcher matcher(g, covered, forbidden);
  Matching result;
  result.edges = matcher.run();
  result.edges.insert(forced.begin(), forced.end());
  return result;
}

EvenSubgraph two_factor_from_matching(const Multigraph& g, const Matching& m) {
  if (!g.is_cubic())
    throw RejectedInput("two-factor complement needs a cubic graph");
  if (!m.is_perfect(g))
    throw RejectedInput("matching is not perfect");
  EvenSubgraph tf(g);
  for (EdgeId id : g.edges())
    if (!m.edges.count(id)) tf.set_multiplicity(id, 1);
  if (!tf.is_two_factor())
    throw RejectedInput("complement of the given matching is not a 2-factor");
  return tf;
}

}  // namespace cubictour
