#ifndef CUBICTOUR_ASSEMBLE_HPP
#define CUBICTOUR_ASSEMBLE_HPP

#include "cubictour/expand.hpp"
#include "cubictour/oracle.hpp"

namespace cubictour {

// Connects vertex-disjoint even components into one spanning Eulerian
// sub-multigraph by doubling spanning-tree edges between them: 2(c-1)
// added edge copies for c parts. Parts must be connected, even and
// together span the host.
EvenSubgraph join_components(const std::vector<EvenSubgraph>& parts,
                             const Multigraph& g);

// Closed walk using every edge copy exactly once. `copy` distinguishes the
// two copies of a doubled edge.
struct Tour {
  struct Step {
    EdgeId edge;
    int copy;  // 0 or 1
  };
  std::vector<Step> circuit;

  int length() const { return static_cast<int>(circuit.size()); }
};

// Hierholzer's algorithm; h must be connected, spanning and even.
Tour euler_circuit(const EvenSubgraph& h);

struct SolveCertificate {
  int n = 0;
  int tour_edges = 0;
  int bound = 0;          // floor(4n/3) - 2
  bool bound_applies = false;  // n >= 6
  bool bound_ok = false;
  int components_joined = 0;
  CompressionStats compression;
  std::vector<ExpansionStep> expansion_steps;
  std::vector<ComponentAccounting> component_accounting;
  Verdict verdict;
};

struct Solution {
  EvenSubgraph subgraph;
  Tour tour;
  SolveCertificate certificate;
};

// Full pipeline: girth-constrained 2-factor, 5-cycle compression, super
// expansion, component joining, circuit extraction, verification.
Solution solve(const Multigraph& g,
               TwoFactorStrategy strategy = TwoFactorStrategy::kAuto);

}  // namespace cubictour

#endif  // CUBICTOUR_ASSEMBLE_HPP
