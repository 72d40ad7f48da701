#ifndef CUBICTOUR_ORACLE_HPP
#define CUBICTOUR_ORACLE_HPP

#include "cubictour/even_subgraph.hpp"
#include "cubictour/multigraph.hpp"

namespace cubictour {

struct OptResult {
  int opt = 0;
  EvenSubgraph witness;
};

// Exact minimum connected spanning even sub-multigraph, by branch and bound
// over multiplicity assignments {1, 2, 0} per edge in ascending id order.
// Refuses graphs larger than `vertex_cap`; this is not an approximation.
OptResult opt_eulerian(const Multigraph& g, int vertex_cap = 12);

struct Verdict {
  bool spanning = false;
  bool connected = false;
  bool all_even = false;
  bool multiplicity_ok = false;   // every multiplicity <= 2
  bool within_floor_bound = false;  // edges <= floor(4n/3) - 2 (n >= 6)
  bool within_43_bound = false;     // edges <= floor(4n/3)
  int n = 0;
  int edges = 0;
  int floor_bound = 0;  // floor(4n/3) - 2
  int bound_43 = 0;     // floor(4n/3)

  // Structural validity; the bound flags are reported alongside.
  bool valid() const {
    return spanning && connected && all_even && multiplicity_ok;
  }
};

// Checks the claimed solution h against g. Never throws on a bad solution;
// the verdict carries each failure.
Verdict verify(const Multigraph& g, const EvenSubgraph& h);

}  // namespace cubictour

#endif  // CUBICTOUR_ORACLE_HPP
