#ifndef CUBICTOUR_TWOFACTOR_HPP
#define CUBICTOUR_TWOFACTOR_HPP

#include <array>
#include <optional>

#include "cubictour/even_subgraph.hpp"
#include "cubictour/multigraph.hpp"

namespace cubictour {

// Two distinct edges sharing a degree-3 vertex that the 2-factor must
// contain. The far endpoints may coincide.
struct RequiredEdges {
  EdgeId e1 = -1;
  EdgeId e2 = -1;
};

// How find_girth5_two_factor realizes the construction.
//   kReduce: 4-cycle elimination by local gadgets, then one matching on the
//            girth-5 remainder, then undo (throws ReduceUnsupported when a
//            cycle admits no valid gadget).
//   kSearch: complete backtracking over constrained perfect matchings.
//   kAuto:   kReduce with automatic fallback to kSearch.
enum class TwoFactorStrategy { kAuto, kReduce, kSearch };

class ReduceUnsupported : public std::runtime_error {
 public:
  explicit ReduceUnsupported(const std::string& what)
      : std::runtime_error(what) {}
};

// Edges that must / must not appear in the 2-factor.
struct Constraints {
  std::set<EdgeId> require;
  std::set<EdgeId> exclude;
};

// 2-factor of g whose cycles all have length >= min(n, 5), containing the
// required edges when given. Input must be cubic and 3-edge-connected.
EvenSubgraph find_girth5_two_factor(
    const Multigraph& g, std::optional<RequiredEdges> req = std::nullopt,
    TwoFactorStrategy strategy = TwoFactorStrategy::kAuto);

// Complete constrained search; nullopt means no 2-factor with cycles
// >= min(n, 5) satisfies the constraints.
std::optional<EvenSubgraph> search_two_factor(const Multigraph& g,
                                              const Constraints& cons);

// --- essential-cut decomposition -----------------------------------------

struct CutDecomposition {
  Multigraph g1;       // cut side kept intact, far side contracted
  Multigraph g2;       // far side kept intact, cut side contracted
  VertexId merged1;    // contracted vertex inside g1
  VertexId merged2;    // contracted vertex inside g2
  std::array<EdgeId, 3> crossing;  // ascending; same ids live in g1 and g2
};

// Splits g at an essential 3-edge cut into two smaller cubic
// 3-edge-connected instances whose crossing edges keep their ids.
CutDecomposition decompose_at_3cut(const Multigraph& g, const CutSpec& cut);

// Merges 2-factors of the two sides back onto g. x1 must use exactly two
// of the crossing edges and x2 must use the same two.
EvenSubgraph combine_solutions(const Multigraph& g, const CutDecomposition& d,
                               const EvenSubgraph& x1, const EvenSubgraph& x2);

// --- 4-cycle elimination ---------------------------------------------------

// A 4-cycle with its surroundings: vertices in cycle order, cycle edges
// (c[i] joins v[i] and v[(i+1)%4]), the external edge and far endpoint at
// each cycle vertex.
struct FourCycle {
  std::array<VertexId, 4> v;
  std::array<EdgeId, 4> c;
  std::array<EdgeId, 4> f;
  std::array<VertexId, 4> far;
};

std::vector<FourCycle> enumerate_4cycles(const Multigraph& g);

// Which external pairing the replacement edges realize.
enum class GadgetOrientation { kAdjacentA, kAdjacentB, kOpposite };

// Ledger entry for one eliminated 4-cycle; `before` is the graph the
// reduction was applied to, which the undo restores onto. `pattern_ok`
// records (bit per pattern) which local traversal patterns were admissible
// under the constraints in force when the cycle was reduced; the lift may
// only realize one of them.
struct ReductionStep {
  Multigraph before;
  FourCycle cycle;
  GadgetOrientation orient;
  EdgeId eA = -1;
  EdgeId eB = -1;
  unsigned pattern_ok = 0;
  int pass = 0;  // required-edge count of the cycle when processed (0, 2, 1)
};

struct ReductionOutcome {
  Multigraph reduced;
  Constraints constraints;  // over ids of `reduced`; includes steering
  std::vector<ReductionStep> steps;
};

// Eliminates 4-cycles in the order: no required cycle edges first, then
// two, then one. Each step removes the four cycle vertices and rewires the
// external edges through two fresh edges, shrinking the graph by 4 vertices
// and 6 edges. The returned constraints steer the downstream 2-factor so
// that every step can be undone; solve the reduced instance under them.
// Throws ReduceUnsupported when some cycle admits no valid gadget.
ReductionOutcome eliminate_4cycles(const Multigraph& g,
                                   std::optional<RequiredEdges> req);

// Lifts a 2-factor of the reduced graph (satisfying the outcome's
// constraints) back through every step, newest first. The result is
// re-hosted on `original`.
EvenSubgraph undo_reductions(const Multigraph& original,
                             const std::vector<ReductionStep>& steps,
                             const EvenSubgraph& solved);

}  // namespace cubictour

#endif  // CUBICTOUR_TWOFACTOR_HPP
