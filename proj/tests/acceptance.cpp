// Acceptance suite: runs every acceptance criterion end to end and prints
// one PASS/FAIL line per criterion. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <vector>

#include "cubictour/assemble.hpp"
#include "cubictour/generate.hpp"
#include "cubictour/io.hpp"
#include "cubictour/oracle.hpp"
#include "cubictour/twofactor.hpp"

using namespace cubictour;

namespace {

struct Criterion {
  const char* label;
  bool (*run)(std::string& detail);
};

const char* kNamed[] = {"prism", "k33", "petersen", "moebius-kantor", "cube"};

// Solve results shared between criteria 1, 6 and 7.
struct SolveRecord {
  int n;
  SolveCertificate cert;
  double wall_ms;
};
std::vector<SolveRecord> g_solves;

bool run_one_solve(const Multigraph& g, std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  Solution sol = solve(g);
  auto stop = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(stop - start).count();
  g_solves.push_back({g.vertex_count(), sol.certificate, ms});

  const auto& c = sol.certificate;
  if (!c.verdict.valid()) {
    detail = "verification failed at n=" + std::to_string(c.n);
    return false;
  }
  if (c.n >= 6 && c.tour_edges > 4 * c.n / 3 - 2) {
    detail = "bound violated at n=" + std::to_string(c.n) + ": tour " +
             std::to_string(c.tour_edges);
    return false;
  }
  if (c.n == 200 && ms > 2000.0) {
    detail = "n=200 instance took " + std::to_string(ms) + " ms";
    return false;
  }
  return true;
}

// 1. Named instances plus 200 random instances with n in {10..200}: solve
//    output verifies and stays within floor(4n/3) - 2; n=200 under 2 s.
bool criterion_bound(std::string& detail) {
  for (const char* name : kNamed)
    if (!run_one_solve(named_graph(name), detail)) return false;

  int count = 0;
  for (int n = 10; n <= 200 && count < 192; n += 2) {
    for (int seed = 1; seed <= 2; ++seed, ++count)
      if (!run_one_solve(random_cubic_3ec(n, 10 * n + seed), detail))
        return false;
  }
  for (int seed = 3; count < 200; ++seed, ++count)
    if (!run_one_solve(random_cubic_3ec(200, 2000 + seed), detail))
      return false;
  detail = std::to_string(count) + " random + 5 named instances";
  return true;
}

// 2. + 3. Solver-to-optimum ratio at most 4/3 on everything the oracle can
//    handle, and the optimum is never below n.
bool criterion_ratio(std::string& detail) {
  std::vector<Multigraph> instances;
  for (const char* name : {"k4", "prism", "k33", "cube", "petersen"})
    instances.push_back(named_graph(name));
  instances.push_back(random_cubic_3ec(10, 42));
  instances.push_back(random_cubic_3ec(12, 43));

  for (const Multigraph& g : instances) {
    auto start = std::chrono::steady_clock::now();
    OptResult opt = opt_eulerian(g);
    auto stop = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(stop - start).count();
    if (s > 60.0) {
      detail = "oracle took " + std::to_string(s) + " s";
      return false;
    }
    Solution sol = solve(g);
    if (3 * sol.certificate.tour_edges > 4 * opt.opt) {
      detail = "ratio exceeded 4/3 at n=" + std::to_string(g.vertex_count());
      return false;
    }
  }
  detail = "7 instances";
  return true;
}

bool criterion_lower_bound(std::string& detail) {
  std::vector<Multigraph> instances;
  for (const char* name : {"k4", "prism", "k33", "cube", "petersen"})
    instances.push_back(named_graph(name));
  instances.push_back(random_cubic_3ec(10, 42));
  instances.push_back(random_cubic_3ec(12, 43));
  for (const Multigraph& g : instances) {
    OptResult opt = opt_eulerian(g);
    if (opt.opt < g.vertex_count()) {
      detail = "optimum below n at n=" + std::to_string(g.vertex_count());
      return false;
    }
  }
  detail = "optimum >= n on all 7 instances";
  return true;
}

// 4. opt(K33) = 6 and opt(K34) >= 8.
bool criterion_k3n(std::string& detail) {
  OptResult k33 = opt_eulerian(named_graph("k33"));
  Multigraph k34 = Multigraph::with_vertices(7);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 7; ++b) k34.add_edge(a, b);
  OptResult r34 = opt_eulerian(k34);
  detail = "opt(K33)=" + std::to_string(k33.opt) +
           ", opt(K34)=" + std::to_string(r34.opt);
  return k33.opt == 6 && r34.opt >= 8;
}

// 5. Girth-constrained 2-factors with required edges, on both the search
//    strategy and the default.
bool criterion_girth5(std::string& detail) {
  std::vector<Multigraph> instances;
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 100; ++i) {
    int n = 10 + 2 * static_cast<int>(rng() % 26);  // 10..60
    instances.push_back(random_cubic_3ec(n, rng()));
  }
  instances.push_back(named_graph("petersen"));
  instances.push_back(named_graph("cube"));

  long long checked = 0;
  for (const Multigraph& g : instances) {
    std::vector<VertexId> verts = g.vertices();
    for (int pick = 0; pick < 10; ++pick) {
      VertexId anchor = verts[rng() % verts.size()];
      const auto& inc = g.incident(anchor);
      int i = static_cast<int>(rng() % 3);
      int j = static_cast<int>(rng() % 3);
      if (i == j) j = (j + 1) % 3;
      RequiredEdges req{inc[i], inc[j]};
      for (TwoFactorStrategy strategy :
           {TwoFactorStrategy::kSearch, TwoFactorStrategy::kAuto}) {
        EvenSubgraph x = find_girth5_two_factor(g, req, strategy);
        int threshold = std::min(g.vertex_count(), 5);
        if (!x.is_two_factor() || x.sigma() < threshold ||
            !x.contains(req.e1) || !x.contains(req.e2)) {
          detail = "invalid 2-factor at n=" + std::to_string(g.vertex_count());
          return false;
        }
        ++checked;
      }
    }
  }
  detail = std::to_string(checked) + " constrained solves";
  return true;
}

// 6. Every split-off across the recorded runs examined at most 10 candidate
//    pairs and succeeded; compression_loop already validates the post-split
//    graph (cubic, 3-edge-connected) and would have thrown otherwise.
bool criterion_mader(std::string& detail) {
  long long splits = 0;
  for (const auto& rec : g_solves) {
    for (int tried : rec.cert.compression.split_candidates) {
      ++splits;
      if (tried < 1 || tried > 10) {
        detail = "split-off examined " + std::to_string(tried) + " pairs";
        return false;
      }
    }
    if (rec.cert.compression.splits !=
        static_cast<int>(rec.cert.compression.split_candidates.size())) {
      detail = "split bookkeeping mismatch";
      return false;
    }
  }
  if (splits == 0) {
    detail = "no split-offs observed; criterion not exercised";
    return false;
  }
  detail = std::to_string(splits) + " split-offs, all within 10 candidates";
  return true;
}

// 7. Expansion deltas: +4 vertices always; at most 5 edges for degree-2 and
//    4 for degree-4 expansions; parity and connectivity verified per step.
bool criterion_expansion(std::string& detail) {
  long long deg2 = 0, deg4 = 0;
  for (const auto& rec : g_solves) {
    for (const auto& step : rec.cert.expansion_steps) {
      if (step.vertices_added != 4) {
        detail = "expansion added " + std::to_string(step.vertices_added) +
                 " vertices";
        return false;
      }
      int limit = step.degree == 2 ? 5 : 4;
      if (step.edges_added > limit) {
        detail = "degree-" + std::to_string(step.degree) + " expansion added " +
                 std::to_string(step.edges_added) + " edges";
        return false;
      }
      if (!step.even_after || !step.connected_after) {
        detail = "per-step parity/connectivity check failed";
        return false;
      }
      (step.degree == 2 ? deg2 : deg4) += 1;
    }
  }
  if (deg2 + deg4 == 0) {
    detail = "no expansions observed; criterion not exercised";
    return false;
  }
  detail = std::to_string(deg2) + " degree-2 and " + std::to_string(deg4) +
           " degree-4 expansions";
  return true;
}

// 8. Identical inputs give byte-identical certificate JSON.
bool criterion_determinism(std::string& detail) {
  for (const char* spec : {"petersen", "random:n=50,seed=11"}) {
    Multigraph g1 = generate(spec);
    Multigraph g2 = generate(spec);
    std::string a = solution_to_json(g1, solve(g1));
    std::string b = solution_to_json(g2, solve(g2));
    if (a != b) {
      detail = std::string("outputs differ for ") + spec;
      return false;
    }
  }
  detail = "2 instances, byte-identical JSON";
  return true;
}

const Criterion kCriteria[] = {
    {"1 bound reproduction (tour <= floor(4n/3)-2)", criterion_bound},
    {"2 ratio vs optimum (<= 4/3)", criterion_ratio},
    {"3 lower-bound sanity (opt >= n)", criterion_lower_bound},
    {"4 K_{3,n} conclusion (opt(K33)=6, opt(K34)>=8)", criterion_k3n},
    {"5 girth-constrained 2-factor with required edges", criterion_girth5},
    {"6 Mader split-off within 10 candidates", criterion_mader},
    {"7 expansion deltas and per-step checks", criterion_expansion},
    {"8 determinism of certificate JSON", criterion_determinism},
};

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& err) {
      detail = std::string("exception: ") + err.what();
    }
    std::printf("criterion %-55s %s%s%s\n", c.label, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
