#ifndef CUBICTOUR_GENERATE_HPP
#define CUBICTOUR_GENERATE_HPP

#include <cstdint>
#include <string>

#include "cubictour/multigraph.hpp"

namespace cubictour {

// Named instances. Recognized names: k4, prism, petersen, moebius-kantor,
// k33, cube (alias q3).
Multigraph named_graph(const std::string& name);

// Cubic 3-edge-connected graph on n vertices, grown from K4 by repeatedly
// subdividing two distinct edges and joining the new vertices. Each growth
// step is validated to preserve edge connectivity 3 and re-drawn on
// failure. Deterministic per seed.
Multigraph random_cubic_3ec(int n, std::uint64_t seed);

// `name` or `random:n=<even>,seed=<s>`.
Multigraph generate(const std::string& spec);

}  // namespace cubictour

#endif  // CUBICTOUR_GENERATE_HPP
