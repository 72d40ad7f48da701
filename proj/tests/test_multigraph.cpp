#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubictour/generate.hpp"
#include "cubictour/multigraph.hpp"
#include "test_util.hpp"

using namespace cubictour;

TEST_CASE("basic degrees and edge identities") {
  Multigraph g = Multigraph::with_vertices(3);
  EdgeId a = g.add_edge(0, 1);
  EdgeId b = g.add_edge(0, 1);  // parallel
  EdgeId c = g.add_edge(2, 2);  // loop
  CHECK(a != b);
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(2) == 2);  // loop counts twice
  CHECK(g.has_parallel_or_loop());
  g.remove_edge(b);
  CHECK(g.degree(0) == 1);
  g.remove_edge(c);
  CHECK(g.degree(2) == 0);
  g.remove_vertex(2);
  CHECK_FALSE(g.has_vertex(2));
}

TEST_CASE("cubic identity |E| = 3|V|/2") {
  for (const char* name : {"k4", "prism", "petersen", "moebius-kantor", "k33",
                           "cube"}) {
    Multigraph g = named_graph(name);
    CHECK(g.is_cubic());
    CHECK(2 * g.edge_count() == 3 * g.vertex_count());
  }
}

TEST_CASE("girth of the named graphs") {
  CHECK(named_graph("k4").girth() == 3);
  CHECK(named_graph("prism").girth() == 3);
  CHECK(named_graph("k33").girth() == 4);
  CHECK(named_graph("cube").girth() == 4);
  CHECK(named_graph("petersen").girth() == 5);
  CHECK(named_graph("moebius-kantor").girth() == 6);
}

TEST_CASE("girth sees loops and parallel pairs") {
  Multigraph g = Multigraph::with_vertices(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  CHECK(g.girth() == 2);
  g.add_edge(0, 0);
  CHECK(g.girth() == 1);
}

TEST_CASE("contract a prism triangle gives K4") {
  Multigraph prism = named_graph("prism");
  auto [g, merged] = contract(prism, {0, 1, 2});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 6);
  CHECK(g.is_cubic());
  CHECK_FALSE(g.has_parallel_or_loop());
  CHECK(g.degree(merged) == 3);
}

TEST_CASE("contract one vertex is the identity") {
  Multigraph g = named_graph("petersen");
  auto [h, merged] = contract(g, {4});
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.edge_count() == g.edge_count());
  for (EdgeId id : g.edges()) {
    CHECK(h.has_edge(id));
    Edge orig = g.edge(id);
    Edge now = h.edge(id);
    auto fix = [&](VertexId v) { return v == 4 ? merged : v; };
    CHECK(std::minmax(fix(orig.u), fix(orig.v)) == std::minmax(now.u, now.v));
  }
}

TEST_CASE("contract a Petersen 5-cycle leaves a degree-5 vertex") {
  Multigraph g = named_graph("petersen");
  auto [h, merged] = contract(g, {0, 1, 2, 3, 4});  // outer cycle
  CHECK(h.vertex_count() == 6);
  CHECK(h.degree(merged) == 5);
  // inner pentagram intact
  for (VertexId v : {5, 6, 7, 8, 9}) CHECK(h.degree(v) == 3);
}

TEST_CASE("contract rejects bad input") {
  Multigraph g = named_graph("k4");
  CHECK_THROWS_AS(contract(g, {}), RejectedInput);
  CHECK_THROWS_AS(contract(g, {99}), RejectedInput);
}

TEST_CASE("suppress a degree-2 path vertex") {
  Multigraph g = Multigraph::with_vertices(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  Multigraph h = suppress_degree2(g);
  CHECK(h.vertex_count() == 2);
  CHECK(h.edge_count() == 1);
  Edge e = h.edge(h.edges().front());
  CHECK(std::minmax(e.u, e.v) == std::minmax<VertexId>(0, 2));
}

TEST_CASE("suppress leaves cubic graphs alone") {
  Multigraph g = named_graph("petersen");
  Multigraph h = suppress_degree2(g);
  CHECK(h.vertex_count() == 10);
  CHECK(h.edge_count() == 15);
}

TEST_CASE("suppressing a 6-cycle collapses to a looped vertex") {
  Multigraph g = Multigraph::with_vertices(6);
  for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
  Multigraph h = suppress_degree2(g);
  CHECK(h.vertex_count() == 1);
  CHECK(h.edge_count() == 1);
  CHECK(h.edge(h.edges().front()).is_loop());
}

TEST_CASE("components and connectivity") {
  Multigraph g = Multigraph::with_vertices(5);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  auto comps = g.components();
  CHECK(comps.size() == 2);
  CHECK_FALSE(g.is_connected());
}

TEST_CASE("cut_around reports crossing edges") {
  Multigraph prism = named_graph("prism");
  CutSpec cut = cut_around(prism, {0, 1, 2});
  CHECK(cut.weight() == 3);
}
