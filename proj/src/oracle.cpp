#include "cubictour/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cubictour {

namespace {

// DFS state for the exact search. Edges are decided in ascending id order
// with multiplicities tried as 1, 2, 0 so feasible solutions appear early
// and tighten the bound.
class ExactSearch {
 public:
  explicit ExactSearch(const Multigraph& g) : g_(g) {
    vertex_ids_ = g.vertices();
    for (int i = 0; i < static_cast<int>(vertex_ids_.size()); ++i)
      vindex_[vertex_ids_[i]] = i;
    edge_ids_ = g.edges();
    degree_.assign(vertex_ids_.size(), 0);
    open_.assign(vertex_ids_.size(), 0);
    for (EdgeId id : edge_ids_) {
      const Edge& e = g.edge(id);
      open_[vindex_.at(e.u)] += 1;
      if (e.v != e.u) open_[vindex_.at(e.v)] += 1;
    }
    assignment_.assign(edge_ids_.size(), 0);
    // A doubled spanning tree is always feasible, so 2(n-1) bounds the
    // optimum from above.
    best_ = 2 * (static_cast<int>(vertex_ids_.size()) - 1) + 1;
    best_assignment_.clear();
  }

  std::pair<int, std::vector<int>> run() {
    descend(0, 0);
    if (best_assignment_.empty())
      throw InternalError("eulerian search found no solution");
    return {best_, best_assignment_};
  }

 private:
  int parity_deficit() const {
    // Every open vertex still needs to reach even degree >= 2.
    int need = 0;
    for (std::size_t i = 0; i < degree_.size(); ++i) {
      if (open_[i] == 0) continue;
      if (degree_[i] < 2)
        need += 2 - degree_[i];
      else if (degree_[i] % 2 != 0)
        need += 1;
    }
    return (need + 1) / 2;
  }

  bool close_vertex_ok(int vi) const {
    return degree_[vi] >= 2 && degree_[vi] % 2 == 0;
  }

  bool feasible_connected(int next_edge) const {
    // Union of chosen edges and undecided edges must connect everything.
    std::vector<int> parent(vertex_ids_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int classes = static_cast<int>(vertex_ids_.size());
    for (std::size_t k = 0; k < edge_ids_.size(); ++k) {
      if (static_cast<int>(k) < next_edge && assignment_[k] == 0) continue;
      const Edge& e = g_.edge(edge_ids_[k]);
      int a = find(vindex_.at(e.u)), b = find(vindex_.at(e.v));
      if (a != b) {
        parent[a] = b;
        --classes;
      }
    }
    return classes == 1;
  }

  void descend(int k, int used) {
    if (used + parity_deficit() >= best_) return;
    if (k == static_cast<int>(edge_ids_.size())) {
      // All degrees are even and >= 2 here (enforced at vertex close);
      // connectivity is the remaining question.
      if (used < best_ && feasible_connected(k)) {
        best_ = used;
        best_assignment_ = assignment_;
      }
      return;
    }
    const Edge& e = g_.edge(edge_ids_[k]);
    int ui = vindex_.at(e.u), vi = vindex_.at(e.v);
    int inc = e.is_loop() ? 2 : 1;
    for (int mult : {1, 2, 0}) {
      assignment_[k] = mult;
      degree_[ui] += mult * inc;
      if (!e.is_loop()) degree_[vi] += mult;
      open_[ui] -= 1;
      if (!e.is_loop()) open_[vi] -= 1;
      bool ok = (open_[ui] > 0 || close_vertex_ok(ui)) &&
                (e.is_loop() || open_[vi] > 0 || close_vertex_ok(vi));
      if (ok) descend(k + 1, used + mult);
      open_[ui] += 1;
      if (!e.is_loop()) open_[vi] += 1;
      degree_[ui] -= mult * inc;
      if (!e.is_loop()) degree_[vi] -= mult;
    }
    assignment_[k] = 0;
  }

  const Multigraph& g_;
  std::vector<VertexId> vertex_ids_;
  std::map<VertexId, int> vindex_;
  std::vector<EdgeId> edge_ids_;
  std::vector<int> degree_, open_;
  std::vector<int> assignment_, best_assignment_;
  int best_ = 0;
};

}  // namespace

OptResult opt_eulerian(const Multigraph& g, int vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    throw RejectedInput("opt_eulerian: " + std::to_string(g.vertex_count()) +
                        " vertices exceed the cap of " +
                        std::to_string(vertex_cap));
  if (!g.is_connected())
    throw RejectedInput("opt_eulerian: graph is not connected");
  if (g.vertex_count() < 2)
    throw RejectedInput("opt_eulerian: need at least 2 vertices");

  ExactSearch search(g);
  auto [opt, assignment] = search.run();
  OptResult result;
  result.opt = opt;
  result.witness = EvenSubgraph(g);
  std::vector<EdgeId> ids = g.edges();
  for (std::size_t k = 0; k < ids.size(); ++k)
    result.witness.set_multiplicity(ids[k], assignment[k]);
  return result;
}

Verdict verify(const Multigraph& g, const EvenSubgraph& h) {
  Verdict v;
  v.n = g.vertex_count();
  v.edges = h.total_edges();
  v.floor_bound = 4 * v.n / 3 - 2;
  v.bound_43 = 4 * v.n / 3;
  v.spanning = h.spanning();
  v.all_even = h.all_even();
  v.multiplicity_ok = h.max_multiplicity() <= 2;
  v.connected = h.support_components().size() == 1 && v.spanning;
  v.within_floor_bound = v.n < 6 || v.edges <= v.floor_bound;
  v.within_43_bound = v.edges <= v.bound_43;
  return v;
}

}  // namespace cubictour
