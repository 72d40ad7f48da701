#include "cubictour/expand.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace cubictour {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::pair<Multigraph, EvenSubgraph> replace_super_edges(
    const Multigraph& final_graph, const EvenSubgraph& x,
    const ProvenanceLedger& ledger) {
  std::map<VertexId, VertexId> owner;
  for (const auto& rec : ledger.super_vertices())
    for (VertexId v : rec.cycle) owner[v] = rec.sv;
  auto resolve = [&](const Multigraph& g, VertexId v) {
    while (!g.has_vertex(v)) {
      auto it = owner.find(v);
      if (it == owner.end()) throw InternalError("unresolvable vertex");
      v = it->second;
    }
    return v;
  };

  Multigraph host = final_graph;
  std::map<EdgeId, int> mult = x.support();

  auto records = ledger.events;
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    const auto* split = std::get_if<ProvenanceLedger::SplitEvent>(&*it);
    if (!split) continue;
    const SuperEdgeRecord& rec = split->record;
    auto mit = mult.find(rec.se);
    if (mit == mult.end()) continue;  // unused super-edge stays put
    int m = mit->second;
    mult.erase(mit);
    host.remove_edge(rec.se);
    for (int i = 0; i < 2; ++i) {
      const Edge& recorded = split->replaced_endpoints[i];
      VertexId a = resolve(host, recorded.u);
      VertexId b = resolve(host, recorded.v);
      host.add_edge_with_id(rec.replaced[i], a, b);
      mult[rec.replaced[i]] += m;
    }
  }

  std::pair<Multigraph, EvenSubgraph> result{std::move(host), EvenSubgraph()};
  result.second = EvenSubgraph(result.first);
  for (const auto& [id, m] : mult) result.second.set_multiplicity(id, m);
  return result;
}

std::optional<std::array<int, 5>> choose_gadget(
    const std::array<int, 5>& external,
    const std::vector<std::vector<int>>& port_groups, int budget) {
  // All candidate multisets, cheapest first, lexicographic within a cost.
  std::vector<std::array<int, 5>> candidates;
  std::array<int, 5> m{};
  for (m[0] = 0; m[0] <= 2; ++m[0])
    for (m[1] = 0; m[1] <= 2; ++m[1])
      for (m[2] = 0; m[2] <= 2; ++m[2])
        for (m[3] = 0; m[3] <= 2; ++m[3])
          for (m[4] = 0; m[4] <= 2; ++m[4])
            if (m[0] + m[1] + m[2] + m[3] + m[4] <= budget)
              candidates.push_back(m);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) {
                     int sa = std::accumulate(a.begin(), a.end(), 0);
                     int sb = std::accumulate(b.begin(), b.end(), 0);
                     if (sa != sb) return sa < sb;
                     return a < b;
                   });

  for (const auto& cand : candidates) {
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i) {
      // cycle edge j joins positions j and (j+1)%5
      int internal = cand[(i + 4) % 5] + cand[i];
      if ((internal + external[i]) % 2 != 0) ok = false;
      if (internal + external[i] < 2) ok = false;
    }
    if (!ok) continue;

    Dsu dsu(5 + static_cast<int>(port_groups.size()));
    for (int j = 0; j < 5; ++j)
      if (cand[j] > 0) dsu.unite(j, (j + 1) % 5);
    for (std::size_t p = 0; p < port_groups.size(); ++p)
      for (int pos : port_groups[p]) dsu.unite(pos, 5 + static_cast<int>(p));
    int root = dsu.find(0);
    for (int j = 1; j < 5 && ok; ++j)
      if (dsu.find(j) != root) ok = false;
    for (std::size_t p = 0; p < port_groups.size() && ok; ++p)
      if (dsu.find(5 + static_cast<int>(p)) != root) ok = false;
    if (ok) return cand;
  }
  return std::nullopt;
}

Expander::Expander(const Multigraph& original, const ProvenanceLedger& ledger)
    : original_(original), ledger_(ledger) {
  for (const auto& rec : ledger.super_vertices()) {
    by_sv_[rec.sv] = rec;
    for (VertexId v : rec.cycle) owner_[v] = rec.sv;
  }
}

EvenSubgraph Expander::expand(const EvenSubgraph& final_two_factor) {
  steps_.clear();
  accounting_.clear();

  // Multiplicities keyed by original edge ids once super-edges are gone.
  std::map<EdgeId, int> mult = final_two_factor.support();
  {
    auto ordered = ledger_.super_edges();
    for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
      auto mit = mult.find(it->se);
      if (mit == mult.end()) continue;
      int m = mit->second;
      mult.erase(mit);
      for (EdgeId rep : it->replaced) mult[rep] += m;
    }
  }
  for (const auto& [id, m] : mult)
    if (!original_.has_edge(id))
      throw InternalError("non-original edge survived super-edge replacement");

  std::set<VertexId> pending;
  for (const auto& [sv, rec] : by_sv_) pending.insert(sv);

  auto resolve = [&](VertexId v) {
    auto it = owner_.find(v);
    if (it != owner_.end() && pending.count(it->second)) return it->second;
    return v;
  };
  auto adjacency = [&]() {
    std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> adj;
    for (const auto& [id, m] : mult) {
      const Edge& e = original_.edge(id);
      VertexId a = resolve(e.u), b = resolve(e.v);
      adj[a].push_back({b, id});
      adj[b].push_back({a, id});
    }
    return adj;
  };
  auto component_of = [&](VertexId start,
                          const std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>>& adj) {
    std::set<VertexId> comp{start};
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      auto it = adj.find(v);
      if (it == adj.end()) continue;
      for (const auto& [w, id] : it->second)
        if (comp.insert(w).second) queue.push_back(w);
    }
    return comp;
  };
  auto count_components = [&]() {
    auto adj = adjacency();
    std::set<VertexId> seen;
    int count = 0;
    for (const auto& [v, _] : adj) {
      if (seen.count(v)) continue;
      auto comp = component_of(v, adj);
      seen.insert(comp.begin(), comp.end());
      ++count;
    }
    return count;
  };
  auto degrees_even = [&]() {
    std::map<VertexId, int> deg;
    for (const auto& [id, m] : mult) {
      const Edge& e = original_.edge(id);
      deg[resolve(e.u)] += m;
      deg[resolve(e.v)] += m;
    }
    for (const auto& [v, d] : deg)
      if (d % 2 != 0) return false;
    return true;
  };

  // Walk components in deterministic order and expand their super-vertices.
  std::vector<std::set<VertexId>> comps;
  {
    auto adj = adjacency();
    std::set<VertexId> seen;
    for (const auto& [v, _] : adj) {
      if (seen.count(v)) continue;
      auto comp = component_of(v, adj);
      seen.insert(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  }

  for (auto& comp : comps) {
    ComponentAccounting acct;
    std::vector<VertexId> comp_svs;
    {
      auto adj = adjacency();
      for (VertexId v : comp) {
        if (by_sv_.count(v)) {
          int deg = 0;
          for (const auto& [w, id] : adj[v]) deg += mult.at(id);
          if (deg == 2)
            acct.k1 += 1;
          else if (deg == 4)
            acct.k2 += 1;
          else
            throw InternalError("super-vertex with degree " +
                                std::to_string(deg));
          comp_svs.push_back(v);
        } else {
          acct.k3 += 1;
        }
      }
    }
    std::sort(comp_svs.begin(), comp_svs.end());

    std::set<VertexId> comp_nodes = comp;
    for (VertexId sv : comp_svs) {
      const SuperVertexRecord& rec = by_sv_.at(sv);
      int components_before = count_components();

      // Active outside edges with their ports.
      struct Active {
        EdgeId id;
        int position;     // index into rec.cycle
        VertexId far;     // resolved far endpoint
      };
      std::vector<Active> active;
      for (const auto& [id, m] : mult) {
        const Edge& e = original_.edge(id);
        VertexId a = resolve(e.u), b = resolve(e.v);
        if (a != sv && b != sv) continue;
        if (a == sv && b == sv)
          throw InternalError("edge with both ends on one super-vertex");
        VertexId original_end = (a == sv) ? e.u : e.v;
        VertexId far = (a == sv) ? b : a;
        int pos = -1;
        for (int i = 0; i < 5; ++i)
          if (rec.cycle[i] == original_end) pos = i;
        if (pos < 0) throw InternalError("active edge misses the cycle");
        if (m != 1) throw InternalError("active edge with multiplicity != 1");
        active.push_back({id, pos, far});
      }
      int degree = static_cast<int>(active.size());
      if (degree != 2 && degree != 4)
        throw InternalError("expandable super-vertex must have degree 2 or 4");

      // Pieces of the component once sv is deleted.
      std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> adj_minus;
      for (const auto& [id, m] : mult) {
        const Edge& e = original_.edge(id);
        VertexId a = resolve(e.u), b = resolve(e.v);
        if (a == sv || b == sv) continue;
        adj_minus[a].push_back({b, id});
        adj_minus[b].push_back({a, id});
      }
      std::map<VertexId, int> piece_of;
      int piece_count = 0;
      for (const auto& act : active) {
        if (piece_of.count(act.far)) continue;
        std::set<VertexId> piece{act.far};
        std::deque<VertexId> queue{act.far};
        while (!queue.empty()) {
          VertexId v = queue.front();
          queue.pop_front();
          auto ait = adj_minus.find(v);
          if (ait == adj_minus.end()) continue;
          for (const auto& [w, id] : ait->second)
            if (piece.insert(w).second) queue.push_back(w);
        }
        for (VertexId v : piece)
          if (!piece_of.count(v)) piece_of[v] = piece_count;
        ++piece_count;
      }

      std::array<int, 5> external{};
      std::vector<std::vector<int>> groups(piece_count);
      for (const auto& act : active) {
        external[act.position] += 1;
        groups[piece_of.at(act.far)].push_back(act.position);
      }
      for (int e : external)
        if (e > 1) throw InternalError("two active edges share a port");

      int budget = (degree == 2) ? 5 : 4;
      auto gadget = choose_gadget(external, groups, budget);
      if (!gadget)
        throw InternalError(
            "no parity- and connectivity-preserving gadget within budget");

      for (int j = 0; j < 5; ++j)
        if ((*gadget)[j] > 0) mult[rec.cycle_edges[j]] += (*gadget)[j];
      pending.erase(sv);
      comp_nodes.erase(sv);
      for (VertexId v : rec.cycle) comp_nodes.insert(v);

      ExpansionStep step;
      step.sv = sv;
      step.degree = degree;
      step.vertices_added = 4;
      step.edges_added = std::accumulate(gadget->begin(), gadget->end(), 0);
      step.used_fallback = (degree == 4 && step.edges_added != 3);
      step.even_after = degrees_even();
      step.connected_after = (count_components() == components_before);
      steps_.push_back(step);
      if (!step.even_after)
        throw InternalError("expansion step broke parity");
      if (!step.connected_after)
        throw InternalError("expansion step disconnected a component");
    }

    acct.final_vertices = static_cast<int>(comp_nodes.size());
    acct.final_edges = 0;
    for (const auto& [id, m] : mult) {
      const Edge& e = original_.edge(id);
      if (comp_nodes.count(resolve(e.u))) acct.final_edges += m;
    }
    acct.bound = 4 * acct.final_vertices / 3 - 2;
    acct.bound_ok = acct.final_edges <= acct.bound;
    accounting_.push_back(acct);
  }

  EvenSubgraph out(original_);
  for (const auto& [id, m] : mult) out.set_multiplicity(id, m);
  return out;
}

}  // namespace cubictour
