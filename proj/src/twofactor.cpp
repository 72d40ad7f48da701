#include "cubictour/twofactor.hpp"

#include <algorithm>
#include <sstream>

#include "cubictour/connectivity.hpp"
#include "cubictour/matching.hpp"

namespace cubictour {

namespace {

// --- required-edge helpers -------------------------------------------------

VertexId required_anchor(const Multigraph& g, const RequiredEdges& req) {
  const Edge& a = g.edge(req.e1);
  const Edge& b = g.edge(req.e2);
  for (VertexId x : {a.u, a.v})
    if (b.touches(x)) return x;
  throw RejectedInput("required edges do not share a vertex");
}

void validate_required(const Multigraph& g, const RequiredEdges& req) {
  if (req.e1 == req.e2) throw RejectedInput("required edges must be distinct");
  if (!g.has_edge(req.e1) || !g.has_edge(req.e2))
    throw RejectedInput("required edge not in graph");
  VertexId anchor = required_anchor(g, req);
  if (g.degree(anchor) != 3)
    throw RejectedInput("required-edge anchor must have degree 3");
}

int min_cycle_threshold(const Multigraph& g) {
  return std::min(g.vertex_count(), 5);
}

void validate_result(const Multigraph& g, const EvenSubgraph& x,
                     const std::optional<RequiredEdges>& req) {
  if (!x.is_two_factor()) throw InternalError("result is not a 2-factor");
  if (x.sigma() < min_cycle_threshold(g))
    throw InternalError("result has a cycle shorter than min(n,5)");
  if (req && (!x.contains(req->e1) || !x.contains(req->e2)))
    throw InternalError("result misses a required edge");
}

// --- complete search over constrained matchings ----------------------------

std::optional<EvenSubgraph> search_impl(const Multigraph& g, int threshold,
                                        std::set<EdgeId> forced_m,
                                        std::set<EdgeId> forbidden_m) {
  // Coherence of the matching-side constraints.
  for (EdgeId id : forced_m)
    if (forbidden_m.count(id)) return std::nullopt;
  {
    std::set<VertexId> covered;
    for (EdgeId id : forced_m) {
      const Edge& e = g.edge(id);
      if (e.is_loop()) return std::nullopt;
      if (covered.count(e.u) || covered.count(e.v)) return std::nullopt;
      covered.insert(e.u);
      covered.insert(e.v);
    }
  }

  Matching m = max_matching(g, forced_m, forbidden_m);
  if (!m.is_perfect(g)) return std::nullopt;
  EvenSubgraph tf = two_factor_from_matching(g, m);

  // Shortest offending cycle; ties by smallest edge id.
  std::vector<EdgeId> offender;
  for (const auto& cycle : tf.cycles()) {
    if (static_cast<int>(cycle.size()) >= threshold) continue;
    EdgeId my_min = *std::min_element(cycle.begin(), cycle.end());
    if (offender.empty() || cycle.size() < offender.size() ||
        (cycle.size() == offender.size() &&
         my_min < *std::min_element(offender.begin(), offender.end())))
      offender = cycle;
  }
  if (offender.empty()) return tf;

  // Some edge of the offender must move into the matching. Branch on which
  // one is first (in offender order); earlier ones stay out.
  for (std::size_t i = 0; i < offender.size(); ++i) {
    EdgeId ci = offender[i];
    if (forbidden_m.count(ci)) continue;
    std::set<EdgeId> forced2 = forced_m;
    std::set<EdgeId> forbidden2 = forbidden_m;
    forced2.insert(ci);
    for (std::size_t j = 0; j < i; ++j) forbidden2.insert(offender[j]);
    auto sub = search_impl(g, threshold, std::move(forced2),
                           std::move(forbidden2));
    if (sub) return sub;
  }
  return std::nullopt;
}

// --- 4-cycle gadget tables --------------------------------------------------

// Local slots: bit i (0..3) = cycle edge c[i], bit 4+i = external f[i].
constexpr unsigned kPattern[6] = {
    0b00111110u,  // P1: f0 f1 + c1 c2 c3
    0b01101101u,  // P2: f1 f2 + c0 c2 c3
    0b11001011u,  // P3: f2 f3 + c0 c1 c3
    0b10010111u,  // P4: f3 f0 + c0 c1 c2
    0b11110101u,  // P5: all f + c0 c2
    0b11111010u,  // P6: all f + c1 c3
};

unsigned local_mask(const FourCycle& c, const std::set<EdgeId>& ids) {
  unsigned mask = 0;
  for (int i = 0; i < 4; ++i) {
    if (ids.count(c.c[i])) mask |= 1u << i;
    if (ids.count(c.f[i])) mask |= 1u << (4 + i);
  }
  return mask;
}

// Patterns consistent with the constraints restricted to the cycle.
std::array<bool, 6> compatible_patterns(const FourCycle& c,
                                        const Constraints& cons) {
  unsigned need = local_mask(c, cons.require);
  unsigned avoid = local_mask(c, cons.exclude);
  std::array<bool, 6> ok{};
  for (int p = 0; p < 6; ++p)
    ok[p] = (kPattern[p] & need) == need && (kPattern[p] & avoid) == 0;
  return ok;
}

std::pair<std::pair<VertexId, VertexId>, std::pair<VertexId, VertexId>>
gadget_pairs(const FourCycle& c, GadgetOrientation o) {
  switch (o) {
    case GadgetOrientation::kAdjacentA:
      return {{c.far[0], c.far[1]}, {c.far[2], c.far[3]}};
    case GadgetOrientation::kAdjacentB:
      return {{c.far[1], c.far[2]}, {c.far[3], c.far[0]}};
    case GadgetOrientation::kOpposite:
      return {{c.far[0], c.far[2]}, {c.far[1], c.far[3]}};
  }
  throw InternalError("bad orientation");
}

EdgeId edge_between(const Multigraph& g, VertexId x, VertexId y) {
  EdgeId best = -1;
  for (EdgeId id : g.incident(x)) {
    if (g.edge(id).other(x) == y && (best < 0 || id < best)) best = id;
  }
  return best;
}

// Applies one pairing gadget: deletes the four cycle vertices with their
// eight incident edges and joins the far endpoints by two fresh edges.
// Returns nothing when the gadget would break simplicity or
// 3-edge-connectivity.
std::optional<Multigraph> apply_gadget(const Multigraph& g,
                                       const FourCycle& c,
                                       GadgetOrientation o, EdgeId& out_a,
                                       EdgeId& out_b) {
  auto [p1, p2] = gadget_pairs(c, o);
  if (p1.first == p1.second || p2.first == p2.second) return std::nullopt;
  auto key1 = std::minmax(p1.first, p1.second);
  auto key2 = std::minmax(p2.first, p2.second);
  if (key1 == key2) return std::nullopt;
  if (edge_between(g, p1.first, p1.second) >= 0) return std::nullopt;
  if (edge_between(g, p2.first, p2.second) >= 0) return std::nullopt;

  Multigraph h = g;
  for (int i = 0; i < 4; ++i) h.remove_edge(c.c[i]);
  for (int i = 0; i < 4; ++i) h.remove_edge(c.f[i]);
  for (int i = 0; i < 4; ++i) h.remove_vertex(c.v[i]);
  out_a = h.add_edge(p1.first, p1.second);
  out_b = h.add_edge(p2.first, p2.second);
  if (!h.is_cubic()) throw InternalError("gadget broke 3-regularity");
  if (!h.is_connected()) return std::nullopt;
  if (!edge_connectivity_at_least(h, 3)) return std::nullopt;
  return h;
}

struct BranchChoice {
  std::vector<EdgeId> require;
  std::vector<EdgeId> exclude;
};

// Deterministic steering per orientation: most permissive compatible branch
// first. pат indices: orientation A lifts to P1/P3/P5, B to P2/P4/P6,
// opposite to P5/P6 (both replacement edges forced).
std::optional<BranchChoice> steering_for(GadgetOrientation o,
                                         const std::array<bool, 6>& ok,
                                         EdgeId eA, EdgeId eB) {
  auto pick = [&](int lone_a, int lone_b, int both) -> std::optional<BranchChoice> {
    if (ok[lone_a] && ok[both]) return BranchChoice{{eA}, {}};
    if (ok[lone_b] && ok[both]) return BranchChoice{{eB}, {}};
    if (ok[lone_a]) return BranchChoice{{eA}, {eB}};
    if (ok[lone_b]) return BranchChoice{{eB}, {eA}};
    if (ok[both]) return BranchChoice{{eA, eB}, {}};
    return std::nullopt;
  };
  switch (o) {
    case GadgetOrientation::kAdjacentA:
      return pick(0, 2, 4);
    case GadgetOrientation::kAdjacentB:
      return pick(1, 3, 5);
    case GadgetOrientation::kOpposite:
      if (ok[4] || ok[5]) return BranchChoice{{eA, eB}, {}};
      return std::nullopt;
  }
  throw InternalError("bad orientation");
}

}  // namespace

std::optional<EvenSubgraph> search_two_factor(const Multigraph& g,
                                              const Constraints& cons) {
  auto result = search_impl(g, min_cycle_threshold(g), cons.exclude,
                            cons.require);
  if (result)
    for (EdgeId id : cons.require)
      if (!result->contains(id))
        throw InternalError("search dropped a required edge");
  return result;
}

std::vector<FourCycle> enumerate_4cycles(const Multigraph& g) {
  std::vector<FourCycle> out;
  for (VertexId a : g.vertices()) {
    const auto& inc = g.incident(a);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        VertexId b = g.edge(inc[i]).other(a);
        VertexId d = g.edge(inc[j]).other(a);
        if (b == d || b == a || d == a) continue;
        if (b > d) std::swap(b, d);
        if (b < a) continue;
        for (EdgeId id : g.incident(b)) {
          VertexId cv = g.edge(id).other(b);
          if (cv == a || cv <= a) continue;
          if (edge_between(g, cv, d) < 0) continue;
          FourCycle fc;
          fc.v = {a, b, cv, d};
          bool dup = false;
          for (const auto& existing : out)
            if (existing.v == fc.v) dup = true;
          if (dup) continue;
          for (int k = 0; k < 4; ++k) {
            fc.c[k] = edge_between(g, fc.v[k], fc.v[(k + 1) % 4]);
            if (fc.c[k] < 0) throw InternalError("broken 4-cycle");
          }
          for (int k = 0; k < 4; ++k) {
            EdgeId ext = -1;
            for (EdgeId e : g.incident(fc.v[k])) {
              if (e != fc.c[k] && e != fc.c[(k + 3) % 4]) ext = e;
            }
            if (ext < 0) throw InternalError("cycle vertex without external");
            fc.f[k] = ext;
            fc.far[k] = g.edge(ext).other(fc.v[k]);
          }
          out.push_back(fc);
        }
      }
    }
  }
  return out;
}

ReductionOutcome eliminate_4cycles(const Multigraph& g,
                                   std::optional<RequiredEdges> req) {
  ReductionOutcome out;
  out.reduced = g;
  if (req) {
    validate_required(g, *req);
    out.constraints.require = {req->e1, req->e2};
  }

  for (;;) {
    Multigraph& current = out.reduced;
    if (current.vertex_count() == 4) break;
    int girth = current.girth();
    if (girth >= 5 || girth == 0) break;
    if (girth < 4)
      throw ReduceUnsupported("girth " + std::to_string(girth) +
                              " graph has no 4-cycle gadget");

    std::vector<FourCycle> cycles = enumerate_4cycles(current);
    if (cycles.empty()) throw InternalError("girth-4 graph with no 4-cycle");

    // Cycles with no required edges first, then two, then one. Steering
    // from earlier reductions can pile three or four required edges onto a
    // cycle; those classes come last.
    auto required_count = [&](const FourCycle& c) {
      int count = 0;
      for (EdgeId id : c.c)
        if (out.constraints.require.count(id)) ++count;
      return count;
    };
    auto min_edge = [](const FourCycle& c) {
      return *std::min_element(c.c.begin(), c.c.end());
    };
    const FourCycle* chosen = nullptr;
    int chosen_pass = -1;
    for (int pass : {0, 2, 1, 3, 4}) {
      for (const auto& c : cycles) {
        if (required_count(c) != pass) continue;
        if (!chosen || min_edge(c) < min_edge(*chosen)) {
          chosen = &c;
          chosen_pass = pass;
        }
      }
      if (chosen) break;
    }
    if (!chosen) throw InternalError("no 4-cycle in any pass");

    std::array<bool, 6> ok = compatible_patterns(*chosen, out.constraints);
    bool applied = false;
    for (GadgetOrientation o :
         {GadgetOrientation::kAdjacentA, GadgetOrientation::kAdjacentB,
          GadgetOrientation::kOpposite}) {
      EdgeId eA = -1, eB = -1;
      auto branch_probe = steering_for(o, ok, 0, 1);
      if (!branch_probe) continue;
      auto reduced = apply_gadget(current, *chosen, o, eA, eB);
      if (!reduced) continue;

      BranchChoice branch = *steering_for(o, ok, eA, eB);
      ReductionStep step;
      step.before = current;
      step.cycle = *chosen;
      step.orient = o;
      step.eA = eA;
      step.eB = eB;
      step.pass = chosen_pass;
      for (int p = 0; p < 6; ++p)
        if (ok[p]) step.pattern_ok |= 1u << p;

      Constraints next;
      std::set<EdgeId> local;
      for (int i = 0; i < 4; ++i) {
        local.insert(chosen->c[i]);
        local.insert(chosen->f[i]);
      }
      for (EdgeId id : out.constraints.require)
        if (!local.count(id)) next.require.insert(id);
      for (EdgeId id : out.constraints.exclude)
        if (!local.count(id)) next.exclude.insert(id);
      for (EdgeId id : branch.require) next.require.insert(id);
      for (EdgeId id : branch.exclude) next.exclude.insert(id);

      out.steps.push_back(std::move(step));
      out.constraints = std::move(next);
      out.reduced = std::move(*reduced);
      applied = true;
      break;
    }
    if (!applied)
      throw ReduceUnsupported("4-cycle admits no valid pairing gadget");
  }
  return out;
}

EvenSubgraph undo_reductions(const Multigraph& original,
                             const std::vector<ReductionStep>& steps,
                             const EvenSubgraph& solved) {
  std::map<EdgeId, int> current = solved.support();

  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const ReductionStep& step = *it;
    bool a = current.count(step.eA) != 0;
    bool b = current.count(step.eB) != 0;
    int pattern = -1;
    std::vector<int> candidates;
    switch (step.orient) {
      case GadgetOrientation::kAdjacentA:
        if (a && b) candidates = {4};
        else if (a) candidates = {0};
        else if (b) candidates = {2};
        break;
      case GadgetOrientation::kAdjacentB:
        if (a && b) candidates = {5};
        else if (a) candidates = {1};
        else if (b) candidates = {3};
        break;
      case GadgetOrientation::kOpposite:
        if (a && b) candidates = {4, 5};
        break;
    }
    if (candidates.empty())
      throw ReduceUnsupported("solution avoids the replacement edges");

    const int threshold = std::min(step.before.vertex_count(), 5);
    EvenSubgraph lifted;
    for (int cand : candidates) {
      if (!(step.pattern_ok & (1u << cand))) continue;
      EvenSubgraph trial(step.before);
      for (const auto& [id, m] : current) {
        if (id == step.eA || id == step.eB) continue;
        trial.set_multiplicity(id, m);
      }
      unsigned mask = kPattern[cand];
      for (int i = 0; i < 4; ++i) {
        if (mask & (1u << i)) trial.set_multiplicity(step.cycle.c[i], 1);
        if (mask & (1u << (4 + i))) trial.set_multiplicity(step.cycle.f[i], 1);
      }
      if (!trial.is_two_factor()) continue;
      if (trial.sigma() < threshold) continue;
      pattern = cand;
      lifted = std::move(trial);
      break;
    }
    if (pattern < 0)
      throw ReduceUnsupported("no liftable pattern keeps cycles long enough");
    current = lifted.support();
  }

  EvenSubgraph result(original);
  for (const auto& [id, m] : current) result.set_multiplicity(id, m);
  return result;
}

CutDecomposition decompose_at_3cut(const Multigraph& g, const CutSpec& cut) {
  CutSpec check = cut_around(g, cut.side);
  if (check.weight() != 3)
    throw RejectedInput("cut does not have weight 3");
  std::set<VertexId> far_side;
  for (VertexId v : g.vertices())
    if (!cut.side.count(v)) far_side.insert(v);
  if (cut.side.size() < 2 || far_side.size() < 2)
    throw RejectedInput("cut is not essential: a side has fewer than 2 vertices");
  auto induces_edge = [&](const std::set<VertexId>& side) {
    for (EdgeId id : g.edges()) {
      const Edge& e = g.edge(id);
      if (side.count(e.u) && side.count(e.v)) return true;
    }
    return false;
  };
  if (!induces_edge(cut.side) || !induces_edge(far_side))
    throw RejectedInput("cut is not essential: a side induces no edge");

  CutDecomposition d;
  auto [g1, m1] = contract(g, far_side);
  auto [g2, m2] = contract(g, cut.side);
  d.g1 = std::move(g1);
  d.g2 = std::move(g2);
  d.merged1 = m1;
  d.merged2 = m2;
  std::vector<EdgeId> crossing(check.crossing.begin(), check.crossing.end());
  std::sort(crossing.begin(), crossing.end());
  std::copy(crossing.begin(), crossing.end(), d.crossing.begin());
  return d;
}

EvenSubgraph combine_solutions(const Multigraph& g, const CutDecomposition& d,
                               const EvenSubgraph& x1, const EvenSubgraph& x2) {
  int used = 0;
  for (EdgeId id : d.crossing) {
    if (x1.multiplicity(id) != x2.multiplicity(id))
      throw InternalError("crossing-edge pairs disagree between the sides");
    if (x1.contains(id)) ++used;
  }
  if (used != 2)
    throw InternalError("expected exactly two used crossing edges, got " +
                        std::to_string(used));
  EvenSubgraph combined(g);
  for (const auto& [id, m] : x1.support()) combined.set_multiplicity(id, m);
  for (const auto& [id, m] : x2.support()) combined.set_multiplicity(id, m);
  return combined;
}

EvenSubgraph find_girth5_two_factor(const Multigraph& g,
                                    std::optional<RequiredEdges> req,
                                    TwoFactorStrategy strategy) {
  validate_cubic_3ec(g);
  if (req) validate_required(g, *req);

  if (g.vertex_count() > 4) {
    if (auto cut = find_essential_3cut(g)) {
      CutSpec oriented = *cut;
      if (req) {
        VertexId anchor = required_anchor(g, *req);
        if (!oriented.side.count(anchor)) {
          std::set<VertexId> flipped;
          for (VertexId v : g.vertices())
            if (!oriented.side.count(v)) flipped.insert(v);
          oriented.side = std::move(flipped);
        }
      }
      CutDecomposition d = decompose_at_3cut(g, oriented);
      EvenSubgraph x1 = find_girth5_two_factor(d.g1, req, strategy);
      std::vector<EdgeId> pair;
      for (EdgeId id : d.crossing)
        if (x1.contains(id)) pair.push_back(id);
      if (pair.size() != 2)
        throw InternalError("side solution uses wrong crossing count");
      EvenSubgraph x2 = find_girth5_two_factor(
          d.g2, RequiredEdges{pair[0], pair[1]}, strategy);
      EvenSubgraph combined = combine_solutions(g, d, x1, x2);
      validate_result(g, combined, req);
      return combined;
    }
  }

  Constraints cons;
  if (req) cons.require = {req->e1, req->e2};

  auto run_search = [&]() {
    auto found = search_two_factor(g, cons);
    if (!found)
      throw InternalError("no girth-constrained 2-factor exists; input bug");
    return *found;
  };

  EvenSubgraph result;
  if (g.vertex_count() == 4 || strategy == TwoFactorStrategy::kSearch) {
    result = run_search();
  } else {
    auto run_reduce = [&]() {
      ReductionOutcome outcome = eliminate_4cycles(g, req);
      auto sub = search_two_factor(outcome.reduced, outcome.constraints);
      if (!sub)
        throw ReduceUnsupported("steered reduction became infeasible");
      return undo_reductions(g, outcome.steps, *sub);
    };
    if (strategy == TwoFactorStrategy::kReduce) {
      result = run_reduce();
    } else {
      try {
        result = run_reduce();
      } catch (const ReduceUnsupported&) {
        result = run_search();
      }
    }
  }
  validate_result(g, result, req);
  return result;
}

}  // namespace cubictour
