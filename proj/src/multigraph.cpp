#include "cubictour/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace cubictour {

Multigraph Multigraph::with_vertices(int n) {
  Multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  return g;
}

VertexId Multigraph::add_vertex() {
  VertexId v = next_vertex_++;
  adjacency_[v];
  return v;
}

void Multigraph::add_vertex_with_id(VertexId v) {
  if (adjacency_.count(v)) throw InternalError("vertex id already present");
  adjacency_[v];
  next_vertex_ = std::max(next_vertex_, v + 1);
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
  EdgeId id = next_edge_++;
  add_edge_with_id(id, u, v);
  return id;
}

void Multigraph::add_edge_with_id(EdgeId id, VertexId u, VertexId v) {
  if (!has_vertex(u) || !has_vertex(v))
    throw InternalError("edge endpoint not a vertex");
  if (edges_.count(id)) throw InternalError("edge id already present");
  edges_[id] = Edge{u, v};
  adjacency_[u].push_back(id);
  adjacency_[v].push_back(id);  // loop listed twice on purpose
  next_edge_ = std::max(next_edge_, id + 1);
}

void Multigraph::remove_edge(EdgeId id) {
  auto it = edges_.find(id);
  if (it == edges_.end()) throw InternalError("removing unknown edge");
  const Edge e = it->second;
  auto scrub = [&](VertexId x) {
    auto& inc = adjacency_.at(x);
    inc.erase(std::remove(inc.begin(), inc.end(), id), inc.end());
  };
  scrub(e.u);
  if (e.v != e.u) scrub(e.v);
  edges_.erase(it);
}

void Multigraph::remove_vertex(VertexId v) {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw InternalError("removing unknown vertex");
  if (!it->second.empty()) throw InternalError("removing non-isolated vertex");
  adjacency_.erase(it);
}

const Edge& Multigraph::edge(EdgeId id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) throw InternalError("unknown edge id");
  return it->second;
}

const std::vector<EdgeId>& Multigraph::incident(VertexId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw InternalError("unknown vertex id");
  return it->second;
}

int Multigraph::degree(VertexId v) const {
  return static_cast<int>(incident(v).size());
}

std::vector<VertexId> Multigraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, _] : adjacency_) out.push_back(v);
  return out;
}

std::vector<EdgeId> Multigraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (const auto& [id, _] : edges_) out.push_back(id);
  return out;
}

VertexId Multigraph::min_vertex() const {
  if (adjacency_.empty()) throw InternalError("empty graph");
  return adjacency_.begin()->first;
}

bool Multigraph::is_cubic() const {
  for (const auto& [v, inc] : adjacency_)
    if (inc.size() != 3) return false;
  return !adjacency_.empty();
}

bool Multigraph::is_connected() const {
  if (adjacency_.empty()) return false;
  std::set<VertexId> seen;
  std::deque<VertexId> queue{min_vertex()};
  seen.insert(min_vertex());
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId id : incident(v)) {
      VertexId w = edge(id).other(v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen.size() == adjacency_.size();
}

bool Multigraph::has_parallel_or_loop() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [id, e] : edges_) {
    if (e.is_loop()) return true;
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second) return true;
  }
  return false;
}

int Multigraph::girth() const {
  for (const auto& [id, e] : edges_)
    if (e.is_loop()) return 1;
  {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [id, e] : edges_) {
      auto key = std::minmax(e.u, e.v);
      if (!seen.insert({key.first, key.second}).second) return 2;
    }
  }
  // BFS from every vertex; first revisit through a non-tree edge bounds the
  // girth, and some root on a shortest cycle attains it.
  int best = 0;
  for (const auto& [root, _] : adjacency_) {
    std::map<VertexId, int> depth;
    std::map<VertexId, EdgeId> via;
    std::deque<VertexId> queue{root};
    depth[root] = 0;
    via[root] = -1;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId id : incident(v)) {
        if (id == via.at(v)) continue;
        VertexId w = edge(id).other(v);
        auto it = depth.find(w);
        if (it == depth.end()) {
          depth[w] = depth[v] + 1;
          via[w] = id;
          queue.push_back(w);
        } else {
          int len = depth[v] + it->second + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<std::vector<VertexId>> Multigraph::components() const {
  std::vector<std::vector<VertexId>> out;
  std::set<VertexId> seen;
  for (const auto& [start, _] : adjacency_) {
    if (seen.count(start)) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (EdgeId id : incident(v)) {
        VertexId w = edge(id).other(v);
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Edge Multigraph::edge_resolved(EdgeId id, const std::set<VertexId>& s,
                               VertexId replacement) const {
  Edge e = edge(id);
  if (s.count(e.u)) e.u = replacement;
  if (s.count(e.v)) e.v = replacement;
  return e;
}

std::pair<Multigraph, VertexId> contract(const Multigraph& g,
                                         const std::set<VertexId>& s) {
  if (s.empty()) throw RejectedInput("contract: empty vertex set");
  for (VertexId v : s)
    if (!g.has_vertex(v))
      throw RejectedInput("contract: vertex " + std::to_string(v) +
                          " not in graph");

  Multigraph out;
  for (VertexId v : g.vertices())
    if (!s.count(v)) out.add_vertex_with_id(v);
  VertexId merged = g.peek_next_vertex_id();
  out.add_vertex_with_id(merged);

  for (EdgeId id : g.edges()) {
    Edge e = g.edge_resolved(id, s, merged);
    if (e.u == merged && e.v == merged) continue;  // remove self loops
    out.add_edge_with_id(id, e.u, e.v);
  }
  return {std::move(out), merged};
}

Multigraph suppress_degree2(const Multigraph& g) {
  Multigraph out = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : out.vertices()) {
      const auto& inc = out.incident(v);
      if (inc.size() != 2) continue;
      if (inc[0] == inc[1]) continue;  // lone self-loop, terminal
      EdgeId a = inc[0], b = inc[1];
      VertexId x = out.edge(a).other(v);
      VertexId y = out.edge(b).other(v);
      out.remove_edge(a);
      out.remove_edge(b);
      out.remove_vertex(v);
      out.add_edge(x, y);
      changed = true;
      break;
    }
  }
  return out;
}

CutSpec cut_around(const Multigraph& g, const std::set<VertexId>& side) {
  CutSpec cut;
  cut.side = side;
  for (EdgeId id : g.edges()) {
    const Edge& e = g.edge(id);
    if (side.count(e.u) != side.count(e.v)) cut.crossing.insert(id);
  }
  return cut;
}

}  // namespace cubictour
