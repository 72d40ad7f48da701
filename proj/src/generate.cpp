#include "cubictour/generate.hpp"

#include <random>

#include "cubictour/connectivity.hpp"

namespace cubictour {

namespace {

Multigraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  Multigraph g = Multigraph::with_vertices(n);
  for (const auto& [u, v] : pairs) g.add_edge(u, v);
  return g;
}

Multigraph k4() {
  return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Multigraph prism() {
  return from_pairs(6, {{0, 1}, {1, 2}, {2, 0},   // one triangle
                        {3, 4}, {4, 5}, {5, 3},   // the other
                        {0, 3}, {1, 4}, {2, 5}});
}

Multigraph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.push_back({i, (i + 1) % 5});          // outer cycle
    pairs.push_back({5 + i, 5 + (i + 2) % 5});  // pentagram
    pairs.push_back({i, 5 + i});                // spokes
  }
  return from_pairs(10, pairs);
}

Multigraph moebius_kantor() {
  // Generalized Petersen graph GP(8, 3); girth 6.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 8; ++i) {
    pairs.push_back({i, (i + 1) % 8});
    pairs.push_back({8 + i, 8 + (i + 3) % 8});
    pairs.push_back({i, 8 + i});
  }
  return from_pairs(16, pairs);
}

Multigraph k33() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) pairs.push_back({a, b});
  return from_pairs(6, pairs);
}

Multigraph cube() {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < 8; ++v)
    for (int bit : {1, 2, 4})
      if (v < (v ^ bit)) pairs.push_back({v, v ^ bit});
  return from_pairs(8, pairs);
}

}  // namespace

Multigraph named_graph(const std::string& name) {
  if (name == "k4") return k4();
  if (name == "prism") return prism();
  if (name == "petersen") return petersen();
  if (name == "moebius-kantor") return moebius_kantor();
  if (name == "k33") return k33();
  if (name == "cube" || name == "q3") return cube();
  throw RejectedInput("unknown graph name: " + name);
}

Multigraph random_cubic_3ec(int n, std::uint64_t seed) {
  if (n < 4) throw RejectedInput("random cubic graphs need n >= 4");
  if (n % 2 != 0)
    throw RejectedInput("cubic graphs need an even vertex count");

  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
  };

  Multigraph g = k4();
  while (g.vertex_count() < n) {
    // Subdivide two distinct edges and join the new vertices.
    bool grown = false;
    for (int attempt = 0; attempt < 256 && !grown; ++attempt) {
      std::vector<EdgeId> ids = g.edges();
      EdgeId e1 = ids[draw(ids.size())];
      EdgeId e2 = ids[draw(ids.size())];
      if (e1 == e2) continue;
      Multigraph h = g;
      Edge a = h.edge(e1), b = h.edge(e2);
      h.remove_edge(e1);
      h.remove_edge(e2);
      VertexId x = h.add_vertex();
      VertexId y = h.add_vertex();
      h.add_edge(a.u, x);
      h.add_edge(x, a.v);
      h.add_edge(b.u, y);
      h.add_edge(y, b.v);
      h.add_edge(x, y);
      if (!edge_connectivity_at_least(h, 3)) continue;
      g = std::move(h);
      grown = true;
    }
    if (!grown)
      throw InternalError("random growth failed to keep 3-edge-connectivity");
  }
  return g;
}

Multigraph generate(const std::string& spec) {
  if (spec.rfind("random:", 0) != 0) return named_graph(spec);
  int n = -1;
  std::uint64_t seed = 0;
  std::string rest = spec.substr(7);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    std::size_t next = rest.find(',', pos);
    std::string field = rest.substr(pos, next == std::string::npos
                                             ? std::string::npos
                                             : next - pos);
    auto eq = field.find('=');
    if (eq == std::string::npos)
      throw RejectedInput("malformed recipe field: " + field);
    std::string key = field.substr(0, eq), value = field.substr(eq + 1);
    try {
      if (key == "n")
        n = std::stoi(value);
      else if (key == "seed")
        seed = std::stoull(value);
      else
        throw RejectedInput("unknown recipe key: " + key);
    } catch (const std::logic_error&) {
      throw RejectedInput("malformed recipe value: " + field);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (n < 0) throw RejectedInput("recipe is missing n");
  return random_cubic_3ec(n, seed);
}

}  // namespace cubictour
