#ifndef CUBICTOUR_MULTIGRAPH_HPP
#define CUBICTOUR_MULTIGRAPH_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubictour {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Input that violates a documented precondition. The message carries the
// certificate (offending vertex, cut, parse position, ...).
class RejectedInput : public std::runtime_error {
 public:
  explicit RejectedInput(const std::string& what) : std::runtime_error(what) {}
};

// An invariant the pipeline itself guarantees was violated; indicates a bug
// upstream, never bad user input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Unordered endpoint pair. u == v is a self-loop.
struct Edge {
  VertexId u = -1;
  VertexId v = -1;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return x == u || x == v; }
};

// Undirected multigraph with stable vertex/edge identities. Self-loops and
// parallel edges are first-class. Ids are never reused by the same instance
// (or by graphs derived from it), so provenance records stay unambiguous.
class Multigraph {
 public:
  Multigraph() = default;

  // Vertices 0..n-1, no edges.
  static Multigraph with_vertices(int n);

  VertexId add_vertex();
  void add_vertex_with_id(VertexId v);
  EdgeId add_edge(VertexId u, VertexId v);
  void add_edge_with_id(EdgeId id, VertexId u, VertexId v);
  void remove_edge(EdgeId id);
  // Vertex must have no incident edges.
  void remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const { return adjacency_.count(v) != 0; }
  bool has_edge(EdgeId id) const { return edges_.count(id) != 0; }
  const Edge& edge(EdgeId id) const;

  // Incident edge ids in insertion order; a self-loop appears twice.
  const std::vector<EdgeId>& incident(VertexId v) const;
  int degree(VertexId v) const;

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::vector<VertexId> vertices() const;  // ascending
  std::vector<EdgeId> edges() const;       // ascending

  VertexId min_vertex() const;

  bool is_cubic() const;
  bool is_connected() const;
  bool has_parallel_or_loop() const;

  // Length of a shortest cycle (loop = 1, parallel pair = 2); 0 if acyclic.
  int girth() const;

  std::vector<std::vector<VertexId>> components() const;

  // Endpoints of `id` with any vertex of `s` read as `replacement`.
  Edge edge_resolved(EdgeId id, const std::set<VertexId>& s,
                     VertexId replacement) const;

  VertexId peek_next_vertex_id() const { return next_vertex_; }
  EdgeId peek_next_edge_id() const { return next_edge_; }

 private:
  std::map<VertexId, std::vector<EdgeId>> adjacency_;
  std::map<EdgeId, Edge> edges_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

// Contracts vertex set `s` into one fresh vertex. Self-loops arising from
// edges internal to `s` are removed; parallel edges are kept; surviving
// edges keep their ids. Returns the contracted graph and the new vertex.
std::pair<Multigraph, VertexId> contract(const Multigraph& g,
                                         const std::set<VertexId>& s);

// Repeatedly replaces degree-2 vertices and their two incident edges by a
// single edge until none remain. A vertex whose degree comes from one
// self-loop is left alone. New edges get fresh ids.
Multigraph suppress_degree2(const Multigraph& g);

// One side of an edge cut plus the crossing edges.
struct CutSpec {
  std::set<VertexId> side;
  std::set<EdgeId> crossing;

  int weight() const { return static_cast<int>(crossing.size()); }
};

CutSpec cut_around(const Multigraph& g, const std::set<VertexId>& side);

}  // namespace cubictour

#endif  // CUBICTOUR_MULTIGRAPH_HPP
