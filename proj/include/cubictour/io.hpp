#ifndef CUBICTOUR_IO_HPP
#define CUBICTOUR_IO_HPP

#include <iosfwd>
#include <string>

#include "cubictour/assemble.hpp"
#include "cubictour/multigraph.hpp"

namespace cubictour {

// Accepts either the JSON graph format {"n": ..., "edges": [[u, v], ...]}
// or the whitespace edge-list format (first line "n m", then m lines
// "u v"). Vertex ids are 0-based; repeated pairs are parallel edges;
// self-loops are rejected as problem instances. Edge ids follow input
// order. Malformed input raises RejectedInput with a line diagnostic.
Multigraph parse_graph(const std::string& text);

std::string emit_edge_list(const Multigraph& g);
std::string emit_graph_json(const Multigraph& g);

// Solution JSON: (u, v, multiplicity) triples in ascending edge-id order
// plus the certificate block. Field order is fixed; two identical runs
// produce byte-identical output.
std::string solution_to_json(const Multigraph& g, const Solution& sol);

// Reads the "solution" block back into an even subgraph over g, matching
// endpoint pairs to edges in ascending id order.
EvenSubgraph solution_from_json(const Multigraph& g, const std::string& text);

// DOT export of the solved graph; doubled edges drawn bold, unused edges
// dotted.
std::string solution_to_dot(const Multigraph& g, const EvenSubgraph& h);

std::string verdict_to_json(const Verdict& v);

}  // namespace cubictour

#endif  // CUBICTOUR_IO_HPP
