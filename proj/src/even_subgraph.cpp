#include "cubictour/even_subgraph.hpp"

#include <algorithm>
#include <deque>

namespace cubictour {

const Multigraph& EvenSubgraph::host() const {
  if (!host_) throw InternalError("even subgraph without host");
  return *host_;
}

int EvenSubgraph::multiplicity(EdgeId id) const {
  auto it = mult_.find(id);
  return it == mult_.end() ? 0 : it->second;
}

void EvenSubgraph::set_multiplicity(EdgeId id, int mult) {
  if (mult < 0 || mult > 2) throw InternalError("multiplicity out of range");
  if (!host().has_edge(id)) throw InternalError("multiplicity on unknown edge");
  if (mult == 0)
    mult_.erase(id);
  else
    mult_[id] = mult;
}

void EvenSubgraph::add_multiplicity(EdgeId id, int delta) {
  set_multiplicity(id, multiplicity(id) + delta);
}

int EvenSubgraph::total_edges() const {
  int sum = 0;
  for (const auto& [id, m] : mult_) sum += m;
  return sum;
}

int EvenSubgraph::degree(VertexId v) const {
  int deg = 0;
  for (EdgeId id : host().incident(v)) deg += multiplicity(id);
  // incident() lists loops twice, so loop multiplicity already counts double
  return deg;
}

bool EvenSubgraph::all_even() const {
  for (VertexId v : host().vertices())
    if (degree(v) % 2 != 0) return false;
  return true;
}

bool EvenSubgraph::is_two_factor() const {
  for (VertexId v : host().vertices())
    if (degree(v) != 2) return false;
  return true;
}

bool EvenSubgraph::spanning() const {
  for (VertexId v : host().vertices())
    if (degree(v) < 2) return false;
  return true;
}

int EvenSubgraph::max_multiplicity() const {
  int best = 0;
  for (const auto& [id, m] : mult_) best = std::max(best, m);
  return best;
}

std::vector<std::vector<VertexId>> EvenSubgraph::support_components() const {
  std::vector<std::vector<VertexId>> out;
  std::set<VertexId> seen;
  for (VertexId start : host().vertices()) {
    if (seen.count(start) || degree(start) == 0) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (EdgeId id : host().incident(v)) {
        if (multiplicity(id) == 0) continue;
        VertexId w = host().edge(id).other(v);
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

int EvenSubgraph::sigma() const {
  auto comps = support_components();
  if (comps.empty()) return 0;
  std::size_t best = comps.front().size();
  for (const auto& c : comps) best = std::min(best, c.size());
  return static_cast<int>(best);
}

bool EvenSubgraph::connected_spanning() const {
  if (!spanning()) return false;
  return support_components().size() == 1;
}

std::vector<std::vector<EdgeId>> EvenSubgraph::cycles() const {
  if (!is_two_factor()) throw InternalError("cycles() needs a 2-factor");
  std::vector<std::vector<EdgeId>> out;
  std::set<EdgeId> used;
  for (VertexId start : host().vertices()) {
    EdgeId first = -1;
    for (EdgeId id : host().incident(start))
      if (contains(id) && !used.count(id)) {
        first = id;
        break;
      }
    if (first < 0) continue;
    std::vector<EdgeId> cycle;
    VertexId at = start;
    EdgeId via = first;
    do {
      cycle.push_back(via);
      used.insert(via);
      at = host().edge(via).other(at);
      EdgeId next = -1;
      for (EdgeId id : host().incident(at))
        if (contains(id) && !used.count(id)) {
          next = id;
          break;
        }
      via = next;
    } while (via >= 0);
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace cubictour
