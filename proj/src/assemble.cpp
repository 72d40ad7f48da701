#include "cubictour/assemble.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cubictour/connectivity.hpp"
#include "cubictour/twofactor.hpp"

namespace cubictour {

EvenSubgraph join_components(const std::vector<EvenSubgraph>& parts,
                             const Multigraph& g) {
  std::map<VertexId, int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    auto comps = parts[p].support_components();
    if (comps.size() != 1)
      throw RejectedInput("join_components: part is not connected");
    for (VertexId v : comps.front()) {
      if (part_of.count(v))
        throw RejectedInput("join_components: parts are not vertex-disjoint");
      part_of[v] = static_cast<int>(p);
    }
    if (!parts[p].all_even())
      throw RejectedInput("join_components: part is not even");
  }
  for (VertexId v : g.vertices())
    if (!part_of.count(v))
      throw RejectedInput("join_components: parts do not span the graph");

  EvenSubgraph joined(g);
  for (const auto& part : parts)
    for (const auto& [id, m] : part.support()) joined.set_multiplicity(id, m);

  // Spanning tree over the part graph, edges by ascending id, doubled.
  std::vector<int> parent(parts.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int classes = static_cast<int>(parts.size());
  for (EdgeId id : g.edges()) {
    if (classes == 1) break;
    const Edge& e = g.edge(id);
    int a = find(part_of.at(e.u)), b = find(part_of.at(e.v));
    if (a == b) continue;
    parent[a] = b;
    --classes;
    joined.set_multiplicity(id, 2);
  }
  if (classes != 1)
    throw RejectedInput("join_components: host graph cannot connect the parts");
  return joined;
}

Tour euler_circuit(const EvenSubgraph& h) {
  if (!h.all_even()) throw RejectedInput("euler_circuit: degrees not all even");
  if (!h.connected_spanning())
    throw RejectedInput("euler_circuit: subgraph not connected and spanning");

  const Multigraph& g = h.host();
  // Copy list per vertex: (edge, copy) pairs, ascending.
  std::map<VertexId, std::vector<Tour::Step>> pockets;
  for (const auto& [id, m] : h.support()) {
    const Edge& e = g.edge(id);
    for (int copy = 0; copy < m; ++copy) {
      pockets[e.u].push_back({id, copy});
      if (e.v != e.u) pockets[e.v].push_back({id, copy});
    }
  }
  std::set<std::pair<EdgeId, int>> used;
  std::map<VertexId, std::size_t> cursor;

  std::vector<Tour::Step> circuit;
  std::vector<std::pair<VertexId, Tour::Step>> stack;
  VertexId start = g.min_vertex();
  stack.push_back({start, {-1, 0}});
  while (!stack.empty()) {
    VertexId at = stack.back().first;
    auto& cur = cursor[at];
    auto& pocket = pockets[at];
    while (cur < pocket.size() &&
           used.count({pocket[cur].edge, pocket[cur].copy}))
      ++cur;
    if (cur == pocket.size()) {
      if (stack.back().second.edge >= 0) circuit.push_back(stack.back().second);
      stack.pop_back();
    } else {
      Tour::Step step = pocket[cur];
      used.insert({step.edge, step.copy});
      stack.push_back({g.edge(step.edge).other(at), step});
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  Tour tour;
  tour.circuit = std::move(circuit);
  if (tour.length() != h.total_edges())
    throw InternalError("euler circuit missed edges");
  return tour;
}

Solution solve(const Multigraph& g, TwoFactorStrategy strategy) {
  validate_cubic_3ec(g);
  Solution sol;
  sol.certificate.n = g.vertex_count();
  sol.certificate.bound = 4 * g.vertex_count() / 3 - 2;
  sol.certificate.bound_applies = g.vertex_count() >= 6;

  EvenSubgraph assembled;
  if (g.vertex_count() == 4) {
    // K4: the only even connected spanning subgraphs are its 4-cycles.
    assembled = find_girth5_two_factor(g, std::nullopt, strategy);
    sol.certificate.components_joined = 1;
  } else {
    CompressionResult compressed = compression_loop(g, strategy);
    sol.certificate.compression = compressed.stats;

    Expander expander(g, compressed.ledger);
    EvenSubgraph expanded = expander.expand(compressed.two_factor);
    sol.certificate.expansion_steps = expander.steps();
    sol.certificate.component_accounting = expander.accounting();

    // Split into parts and join them.
    std::vector<EvenSubgraph> parts;
    for (const auto& comp : expanded.support_components()) {
      std::set<VertexId> members(comp.begin(), comp.end());
      EvenSubgraph part(g);
      for (const auto& [id, m] : expanded.support())
        if (members.count(g.edge(id).u)) part.set_multiplicity(id, m);
      parts.push_back(std::move(part));
    }
    sol.certificate.components_joined = static_cast<int>(parts.size());
    assembled = join_components(parts, g);
  }

  sol.tour = euler_circuit(assembled);
  sol.subgraph = std::move(assembled);
  sol.certificate.tour_edges = sol.tour.length();
  sol.certificate.verdict = verify(g, sol.subgraph);
  sol.certificate.bound_ok = !sol.certificate.bound_applies ||
                             sol.certificate.tour_edges <= sol.certificate.bound;
  if (!sol.certificate.verdict.valid())
    throw InternalError("solver output failed verification");
  if (!sol.certificate.bound_ok)
    throw InternalError("solver output exceeds the edge bound");
  return sol;
}

}  // namespace cubictour
