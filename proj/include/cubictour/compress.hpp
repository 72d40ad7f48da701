#ifndef CUBICTOUR_COMPRESS_HPP
#define CUBICTOUR_COMPRESS_HPP

#include <variant>

#include "cubictour/even_subgraph.hpp"
#include "cubictour/multigraph.hpp"
#include "cubictour/twofactor.hpp"

namespace cubictour {

// A compressed 5-cycle. `cycle` lists the five original vertices in cycle
// order, `cycle_edges[i]` joins cycle[i] and cycle[(i+1)%5]. `port_map`
// binds every surviving incident edge of `sv` to the cycle vertex it
// attaches at; a chord of the compressed cycle consumes two external slots,
// so sv may have degree 3 instead of 5.
struct SuperVertexRecord {
  VertexId sv = -1;
  std::array<VertexId, 5> cycle{};
  std::array<EdgeId, 5> cycle_edges{};
  std::map<EdgeId, VertexId> port_map;
  std::vector<EdgeId> removed_chords;
};

// A split-off at a degree-5 super-vertex: `se` replaced the two edges in
// `replaced`; expanding `se` restores exactly those edges.
struct SuperEdgeRecord {
  EdgeId se = -1;
  std::array<EdgeId, 2> replaced{};
  VertexId owner_sv = -1;
};

// Reversible transformation log. Undoing the events newest-first restores
// the original graph with identical edge ids.
struct ProvenanceLedger {
  struct CompressEvent {
    SuperVertexRecord record;
    std::map<EdgeId, Edge> removed;  // cycle edges and chords, with endpoints
  };
  struct SplitEvent {
    SuperEdgeRecord record;
    std::array<Edge, 2> replaced_endpoints;
  };
  using Event = std::variant<CompressEvent, SplitEvent>;

  std::vector<Event> events;

  std::vector<SuperVertexRecord> super_vertices() const;
  std::vector<SuperEdgeRecord> super_edges() const;  // creation order
  std::set<VertexId> super_vertex_ids() const;
  std::set<EdgeId> super_edge_ids() const;

  Multigraph undo_all(const Multigraph& final_graph) const;
};

// Contracts a plain 5-cycle of the current 2-factor into one super-vertex,
// removing the self-loops that arise. The cycle must contain no
// super-vertex and no super-edge.
std::pair<Multigraph, SuperVertexRecord> compress_5cycle(
    const Multigraph& g, const std::vector<VertexId>& cycle_vertices,
    const std::vector<EdgeId>& cycle_edges,
    const std::set<VertexId>& super_vertices,
    const std::set<EdgeId>& super_edges);

// Splits off one edge pair at a degree-5 vertex, keeping the graph cubic
// and 3-edge-connected. Candidate pairs are tried in ascending
// lexicographic (EdgeId, EdgeId) order; pairs that would create a self-loop
// are skipped. `candidates_tried` reports how many were examined.
std::pair<Multigraph, SuperEdgeRecord> mader_split(const Multigraph& g,
                                                   VertexId sv,
                                                   int* candidates_tried = nullptr);

struct CompressionStats {
  int compressions = 0;
  int splits = 0;
  std::vector<int> split_candidates;  // per split
};

struct CompressionResult {
  Multigraph graph;        // final compressed graph
  EvenSubgraph two_factor; // 2-factor of `graph` meeting the stopping rule
  ProvenanceLedger ledger;
  CompressionStats stats;
};

// Repeatedly: find a girth-constrained 2-factor, compress one plain
// 5-cycle, split the super-vertex off, until every cycle has length >= 6
// or contains a super-vertex or super-edge.
CompressionResult compression_loop(
    const Multigraph& g,
    TwoFactorStrategy strategy = TwoFactorStrategy::kAuto);

}  // namespace cubictour

#endif  // CUBICTOUR_COMPRESS_HPP
