#include "cubictour/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace cubictour {

namespace {

using ordered_json = nlohmann::ordered_json;

Multigraph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                            const std::string& where) {
  if (n <= 0) throw RejectedInput(where + ": vertex count must be positive");
  Multigraph g = Multigraph::with_vertices(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw RejectedInput(where + ": edge " + std::to_string(i) +
                          " endpoint out of range");
    if (u == v)
      throw RejectedInput(where + ": edge " + std::to_string(i) +
                          " is a self-loop; not a valid problem instance");
    g.add_edge(u, v);
  }
  return g;
}

Multigraph parse_json_graph(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw RejectedInput(std::string("JSON parse error: ") + err.what());
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw RejectedInput("JSON graph: missing integer field \"n\"");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw RejectedInput("JSON graph: missing array field \"edges\"");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw RejectedInput("JSON graph: edges must be [u, v] integer pairs");
    pairs.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  return graph_from_pairs(doc["n"].get<int>(), pairs, "JSON graph");
}

Multigraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw RejectedInput("edge list: empty input");
  std::istringstream header(line);
  int n = 0, m = 0;
  if (!(header >> n >> m))
    throw RejectedInput("edge list line " + std::to_string(lineno) +
                        ": expected \"n m\"");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i) {
    if (!next_line())
      throw RejectedInput("edge list: expected " + std::to_string(m) +
                          " edges, got " + std::to_string(i));
    std::istringstream row(line);
    int u = 0, v = 0;
    if (!(row >> u >> v))
      throw RejectedInput("edge list line " + std::to_string(lineno) +
                          ": expected \"u v\"");
    pairs.push_back({u, v});
  }
  return graph_from_pairs(n, pairs, "edge list");
}

ordered_json certificate_to_json(const SolveCertificate& cert) {
  ordered_json c;
  c["n"] = cert.n;
  c["tour_edges"] = cert.tour_edges;
  c["bound"] = cert.bound;
  c["bound_applies"] = cert.bound_applies;
  c["bound_ok"] = cert.bound_ok;
  c["components_joined"] = cert.components_joined;
  c["compressions"] = cert.compression.compressions;
  c["split_offs"] = cert.compression.splits;
  c["split_candidates"] = cert.compression.split_candidates;
  ordered_json steps = ordered_json::array();
  for (const auto& s : cert.expansion_steps) {
    ordered_json step;
    step["super_vertex"] = s.sv;
    step["degree"] = s.degree;
    step["vertices_added"] = s.vertices_added;
    step["edges_added"] = s.edges_added;
    step["used_fallback"] = s.used_fallback;
    step["even_after"] = s.even_after;
    step["connected_after"] = s.connected_after;
    steps.push_back(step);
  }
  c["expansion_steps"] = steps;
  ordered_json comps = ordered_json::array();
  for (const auto& a : cert.component_accounting) {
    ordered_json comp;
    comp["k1"] = a.k1;
    comp["k2"] = a.k2;
    comp["k3"] = a.k3;
    comp["final_vertices"] = a.final_vertices;
    comp["final_edges"] = a.final_edges;
    comp["bound"] = a.bound;
    comp["bound_ok"] = a.bound_ok;
    comps.push_back(comp);
  }
  c["components"] = comps;
  ordered_json v;
  v["spanning"] = cert.verdict.spanning;
  v["connected"] = cert.verdict.connected;
  v["all_even"] = cert.verdict.all_even;
  v["multiplicity_ok"] = cert.verdict.multiplicity_ok;
  v["within_floor_bound"] = cert.verdict.within_floor_bound;
  v["within_43_bound"] = cert.verdict.within_43_bound;
  c["verdict"] = v;
  return c;
}

}  // namespace

Multigraph parse_graph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw RejectedInput("empty graph input");
  if (text[first] == '{') return parse_json_graph(text);
  return parse_edge_list(text);
}

std::string emit_edge_list(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (EdgeId id : g.edges()) {
    const Edge& e = g.edge(id);
    out << e.u << " " << e.v << "\n";
  }
  return out.str();
}

std::string emit_graph_json(const Multigraph& g) {
  ordered_json doc;
  doc["n"] = g.vertex_count();
  ordered_json edges = ordered_json::array();
  for (EdgeId id : g.edges()) {
    const Edge& e = g.edge(id);
    edges.push_back(ordered_json::array({e.u, e.v}));
  }
  doc["edges"] = edges;
  return doc.dump(2) + "\n";
}

std::string solution_to_json(const Multigraph& g, const Solution& sol) {
  ordered_json doc;
  doc["n"] = g.vertex_count();
  ordered_json edges = ordered_json::array();
  for (const auto& [id, m] : sol.subgraph.support()) {
    const Edge& e = g.edge(id);
    edges.push_back(ordered_json::array({e.u, e.v, m}));
  }
  doc["solution"] = ordered_json{{"edges", edges},
                                 {"edge_count", sol.subgraph.total_edges()}};
  doc["certificate"] = certificate_to_json(sol.certificate);
  return doc.dump(2) + "\n";
}

EvenSubgraph solution_from_json(const Multigraph& g, const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw RejectedInput(std::string("solution JSON parse error: ") + err.what());
  }
  if (!doc.contains("solution") || !doc["solution"].contains("edges"))
    throw RejectedInput("solution JSON: missing solution.edges");

  // Pool of edge ids per unordered endpoint pair, smallest first.
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> pool;
  for (EdgeId id : g.edges()) {
    const Edge& e = g.edge(id);
    auto key = std::minmax(e.u, e.v);
    pool[{key.first, key.second}].push_back(id);
  }

  EvenSubgraph h(g);
  for (const auto& item : doc["solution"]["edges"]) {
    if (!item.is_array() || item.size() != 3)
      throw RejectedInput("solution JSON: edges must be [u, v, mult] triples");
    int u = item[0].get<int>(), v = item[1].get<int>(), m = item[2].get<int>();
    if (m < 1 || m > 2)
      throw RejectedInput("solution JSON: multiplicity out of range");
    auto key = std::minmax(u, v);
    auto it = pool.find({key.first, key.second});
    if (it == pool.end() || it->second.empty())
      throw RejectedInput("solution JSON: edge (" + std::to_string(u) + ", " +
                          std::to_string(v) + ") not in graph");
    EdgeId id = it->second.front();
    it->second.erase(it->second.begin());
    h.set_multiplicity(id, m);
  }
  return h;
}

std::string solution_to_dot(const Multigraph& g, const EvenSubgraph& h) {
  std::ostringstream out;
  out << "graph solution {\n  node [shape=circle];\n";
  for (VertexId v : g.vertices()) out << "  " << v << ";\n";
  for (EdgeId id : g.edges()) {
    const Edge& e = g.edge(id);
    int m = h.multiplicity(id);
    out << "  " << e.u << " -- " << e.v;
    if (m == 2)
      out << " [color=\"black:black\", penwidth=2]";
    else if (m == 1)
      out << " [penwidth=2]";
    else
      out << " [style=dotted, color=gray]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string verdict_to_json(const Verdict& v) {
  ordered_json doc;
  doc["n"] = v.n;
  doc["edges"] = v.edges;
  doc["spanning"] = v.spanning;
  doc["connected"] = v.connected;
  doc["all_even"] = v.all_even;
  doc["multiplicity_ok"] = v.multiplicity_ok;
  doc["floor_bound"] = v.floor_bound;
  doc["within_floor_bound"] = v.within_floor_bound;
  doc["bound_43"] = v.bound_43;
  doc["within_43_bound"] = v.within_43_bound;
  doc["valid"] = v.valid();
  return doc.dump(2) + "\n";
}

}  // namespace cubictour
