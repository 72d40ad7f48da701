#ifndef CUBICTOUR_CONNECTIVITY_HPP
#define CUBICTOUR_CONNECTIVITY_HPP

#include <optional>

#include "cubictour/multigraph.hpp"

namespace cubictour {

// Unit-capacity max-flow scratch over a fixed graph, reusable across
// (source, sink) queries. Undirected edges become antiparallel arc pairs.
class FlowScratch {
 public:
  explicit FlowScratch(const Multigraph& g);

  // Max flow from s to t, but stops as soon as the value exceeds `cap`
  // (returns cap + 1 in that case).
  int max_flow_capped(VertexId s, VertexId t, int cap);

  // Vertices reachable from s in the residual graph of the last run.
  std::set<VertexId> residual_reachable(VertexId s) const;

 private:
  int index_of(VertexId v) const;
  bool bfs_augment(int s, int t);

  std::vector<VertexId> ids_;            // dense index -> vertex id
  std::map<VertexId, int> index_;        // vertex id -> dense index
  std::vector<int> arc_head_;            // arc -> dense head index
  std::vector<int> arc_residual_;        // arc -> residual capacity
  std::vector<std::vector<int>> out_;    // dense index -> arc list
  std::vector<int> parent_arc_;          // scratch for BFS
};

// Global min-cut weight counting multiplicities. Disconnected input gives 0.
// Computed as the minimum of max-flows from a fixed root to every other
// vertex. `edge_connectivity` runs the sweep with OpenMP when available;
// `edge_connectivity_serial` is the reference implementation kept for tests.
int edge_connectivity(const Multigraph& g);
int edge_connectivity_serial(const Multigraph& g);

// True iff the min cut is >= k; early-exits, cheaper than the exact value.
bool edge_connectivity_at_least(const Multigraph& g, int k);

// Finds a 3-edge cut both of whose sides induce at least one edge, or
// nothing if none exists. Preconditions: g cubic, edge connectivity 3.
// Triangles are scanned first; otherwise every spanning-tree edge is
// contracted and a rooted sweep looks for a weight-3 cut whose far side has
// at least two vertices. Deterministic scan order, first hit wins.
std::optional<CutSpec> find_essential_3cut(const Multigraph& g);
std::optional<CutSpec> find_essential_3cut_serial(const Multigraph& g);

// Throws RejectedInput unless g is connected, cubic, 3-edge-connected and
// has at least `min_n` vertices. The message carries the violated
// certificate (vertex of wrong degree, or a cut of weight < 3).
void validate_cubic_3ec(const Multigraph& g, int min_n = 4);

}  // namespace cubictour

#endif  // CUBICTOUR_CONNECTIVITY_HPP
