#ifndef CUBICTOUR_EVEN_SUBGRAPH_HPP
#define CUBICTOUR_EVEN_SUBGRAPH_HPP

#include "cubictour/multigraph.hpp"

namespace cubictour {

// Edge multiplicities {0, 1, 2} over a host graph. Represents 2-factors,
// even subgraphs and final Eulerian solutions. Only non-zero entries are
// stored.
class EvenSubgraph {
 public:
  EvenSubgraph() = default;
  explicit EvenSubgraph(const Multigraph& host) : host_(&host) {}

  const Multigraph& host() const;

  int multiplicity(EdgeId id) const;
  void set_multiplicity(EdgeId id, int mult);
  void add_multiplicity(EdgeId id, int delta);
  bool contains(EdgeId id) const { return multiplicity(id) > 0; }

  // Non-zero entries, ascending edge id.
  const std::map<EdgeId, int>& support() const { return mult_; }

  int total_edges() const;            // counting multiplicity
  int degree(VertexId v) const;       // counting multiplicity, loops twice
  bool all_even() const;
  bool is_two_factor() const;         // every host vertex has degree 2
  bool spanning() const;              // every host vertex has degree >= 2
  int max_multiplicity() const;

  // Connected components of the support, as sorted vertex lists. Vertices
  // of degree 0 are not part of any component.
  std::vector<std::vector<VertexId>> support_components() const;

  // Minimum component size; 0 for an empty subgraph.
  int sigma() const;

  bool connected_spanning() const;

  // Cycles of a 2-factor as edge-id sequences in traversal order.
  std::vector<std::vector<EdgeId>> cycles() const;

 private:
  const Multigraph* host_ = nullptr;
  std::map<EdgeId, int> mult_;
};

}  // namespace cubictour

#endif  // CUBICTOUR_EVEN_SUBGRAPH_HPP
