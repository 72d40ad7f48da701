#ifndef CUBICTOUR_EXPAND_HPP
#define CUBICTOUR_EXPAND_HPP

#include "cubictour/compress.hpp"
#include "cubictour/even_subgraph.hpp"
#include "cubictour/multigraph.hpp"

namespace cubictour {

// Replaces every super-edge carrying multiplicity by its two underlying
// edges, at the same multiplicity. Returns the intermediate host graph
// (super-edges swapped for their pairs) and the even subgraph over it.
// Super-vertex degrees rise from 2 to at most 4; nothing else changes.
std::pair<Multigraph, EvenSubgraph> replace_super_edges(
    const Multigraph& final_graph, const EvenSubgraph& x,
    const ProvenanceLedger& ledger);

// Internal gadget selector, exposed for direct testing. `external` marks
// which of the five cycle positions carry an active outside edge;
// `port_groups` partitions the active positions by which piece of the
// surrounding component (with the super-vertex deleted) their outside edge
// reaches. Returns multiplicities for the five cycle edges: the cheapest
// multiset (ties broken lexicographically) under `budget` copies that makes
// every position even, covers every position with degree >= 2, and joins
// all positions and pieces into one component.
std::optional<std::array<int, 5>> choose_gadget(
    const std::array<int, 5>& external,
    const std::vector<std::vector<int>>& port_groups, int budget);

// One record per expanded super-vertex, for the accounting checks.
struct ExpansionStep {
  VertexId sv = -1;
  int degree = 0;          // 2 or 4
  int vertices_added = 0;  // always 4
  int edges_added = 0;     // <= 5 (degree 2), <= 3 or 4 (degree 4)
  bool used_fallback = false;  // degree-4 gadget other than the 3-edge one
  bool even_after = false;
  bool connected_after = false;
};

struct ComponentAccounting {
  int k1 = 0;  // degree-2 super-vertices
  int k2 = 0;  // degree-4 super-vertices
  int k3 = 0;  // plain vertices
  int final_vertices = 0;
  int final_edges = 0;
  int bound = 0;  // floor(4 * final_vertices / 3) - 2
  bool bound_ok = false;
};

// Expands all super-vertices of a compressed 2-factor back into their
// 5-cycles, component by component, keeping each component even, spanning
// and connected. The result lives on the original graph.
class Expander {
 public:
  Expander(const Multigraph& original, const ProvenanceLedger& ledger);

  EvenSubgraph expand(const EvenSubgraph& final_two_factor);

  const std::vector<ExpansionStep>& steps() const { return steps_; }
  const std::vector<ComponentAccounting>& accounting() const {
    return accounting_;
  }

 private:
  const Multigraph& original_;
  const ProvenanceLedger& ledger_;
  std::map<VertexId, SuperVertexRecord> by_sv_;
  std::map<VertexId, VertexId> owner_;  // compressed original vertex -> sv

  std::vector<ExpansionStep> steps_;
  std::vector<ComponentAccounting> accounting_;
};

}  // namespace cubictour

#endif  // CUBICTOUR_EXPAND_HPP
