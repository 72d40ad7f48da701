#ifndef CUBICTOUR_MATCHING_HPP
#define CUBICTOUR_MATCHING_HPP

#include "cubictour/even_subgraph.hpp"
#include "cubictour/multigraph.hpp"

namespace cubictour {

struct Matching {
  std::set<EdgeId> edges;

  bool is_perfect(const Multigraph& g) const {
    return static_cast<int>(edges.size()) * 2 == g.vertex_count();
  }
};

// Maximum-cardinality matching containing every `forced` edge and no
// `forbidden` edge. Forced edges must be pairwise non-adjacent and disjoint
// from `forbidden`; their endpoints are deleted before the blossom search
// and the edges are added back afterwards. Deterministic: vertices and
// edges are scanned in ascending id order.
Matching max_matching(const Multigraph& g, const std::set<EdgeId>& forced = {},
                      const std::set<EdgeId>& forbidden = {});

// E minus a perfect matching of a cubic graph: every vertex keeps degree 2.
EvenSubgraph two_factor_from_matching(const Multigraph& g, const Matching& m);

}  // namespace cubictour

#endif  // CUBICTOUR_MATCHING_HPP
