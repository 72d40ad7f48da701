#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubictour/connectivity.hpp"
#include "cubictour/generate.hpp"
#include "test_util.hpp"

using namespace cubictour;

TEST_CASE("edge connectivity of named graphs") {
  CHECK(edge_connectivity(named_graph("k4")) == 3);
  CHECK(edge_connectivity(named_graph("petersen")) == 3);
  Multigraph c6 = Multigraph::with_vertices(6);
  for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  CHECK(edge_connectivity(c6) == 2);
}

TEST_CASE("disconnected graphs have connectivity 0") {
  Multigraph g = Multigraph::with_vertices(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK(edge_connectivity(g) == 0);
}

TEST_CASE("parallel and serial sweeps agree") {
  for (const char* name : {"k4", "prism", "petersen", "k33", "cube",
                           "moebius-kantor"}) {
    Multigraph g = named_graph(name);
    CHECK(edge_connectivity(g) == edge_connectivity_serial(g));
  }
  for (int seed = 0; seed < 8; ++seed) {
    Multigraph g = random_cubic_3ec(14, seed);
    CHECK(edge_connectivity(g) == edge_connectivity_serial(g));
  }
}

TEST_CASE("edge connectivity matches subset enumeration for small graphs") {
  for (int seed = 0; seed < 6; ++seed) {
    Multigraph g = random_cubic_3ec(10, 100 + seed);
    CHECK(edge_connectivity(g) == testutil::brute_edge_connectivity(g));
  }
  Multigraph prism = named_graph("prism");
  CHECK(edge_connectivity(prism) == testutil::brute_edge_connectivity(prism));
}

TEST_CASE("K4 has no essential 3-cut") {
  CHECK_FALSE(find_essential_3cut(named_graph("k4")).has_value());
}

TEST_CASE("the prism's essential cut is a triangle cut") {
  Multigraph prism = named_graph("prism");
  auto cut = find_essential_3cut(prism);
  REQUIRE(cut.has_value());
  CHECK(cut->weight() == 3);
  CHECK(cut->side.size() == 3);
  // crossing edges are the three matching edges between the triangles
  for (EdgeId id : cut->crossing) {
    const Edge& e = prism.edge(id);
    CHECK(cut->side.count(e.u) != cut->side.count(e.v));
  }
}

TEST_CASE("the Petersen graph has no essential 3-cut") {
  CHECK_FALSE(find_essential_3cut(named_graph("petersen")).has_value());
}

TEST_CASE("essential cut finder agrees with enumeration on small graphs") {
  for (const char* name : {"k4", "prism", "petersen", "k33", "cube"}) {
    Multigraph g = named_graph(name);
    CHECK(find_essential_3cut(g).has_value() ==
          testutil::brute_has_essential_3cut(g));
    CHECK(find_essential_3cut_serial(g).has_value() ==
          testutil::brute_has_essential_3cut(g));
  }
  for (int seed = 0; seed < 10; ++seed) {
    Multigraph g = random_cubic_3ec(12, 200 + seed);
    bool expected = testutil::brute_has_essential_3cut(g);
    auto found = find_essential_3cut(g);
    CHECK(found.has_value() == expected);
    if (found) {
      CHECK(found->weight() == 3);
      CHECK(found->side.size() >= 2);
      CHECK(g.vertex_count() - static_cast<int>(found->side.size()) >= 2);
      CHECK(cut_around(g, found->side).crossing == found->crossing);
    }
  }
}

TEST_CASE("a triangle piece joined to a 5-vertex piece exposes its 3-cut") {
  // Triangle {0,1,2} and a chorded 5-cycle {3..7}, joined by three edges.
  Multigraph g = Multigraph::with_vertices(8);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  g.add_edge(6, 7);
  g.add_edge(7, 3);
  g.add_edge(3, 5);  // chord; 4, 6, 7 keep a free slot
  g.add_edge(0, 4);
  g.add_edge(1, 6);
  g.add_edge(2, 7);
  REQUIRE(g.is_cubic());
  REQUIRE(edge_connectivity(g) == 3);
  auto cut = find_essential_3cut(g);
  REQUIRE(cut.has_value());
  CHECK(cut->weight() == 3);
  CHECK(testutil::brute_has_essential_3cut(g));
}

TEST_CASE("validate_cubic_3ec rejects bad inputs with a certificate") {
  Multigraph path = Multigraph::with_vertices(2);
  path.add_edge(0, 1);
  CHECK_THROWS_AS(validate_cubic_3ec(path), RejectedInput);

  Multigraph k4 = named_graph("k4");
  CHECK_NOTHROW(validate_cubic_3ec(k4));

  // K4 minus an edge: two degree-2 vertices
  Multigraph broken = Multigraph::with_vertices(4);
  broken.add_edge(0, 1);
  broken.add_edge(0, 2);
  broken.add_edge(0, 3);
  broken.add_edge(1, 2);
  broken.add_edge(1, 3);
  CHECK_THROWS_WITH_AS(validate_cubic_3ec(broken),
                       doctest::Contains("degree"), RejectedInput);

  // cubic but only 2-edge-connected: two K4-minus-edge blocks joined by 2
  Multigraph two_ec = Multigraph::with_vertices(8);
  two_ec.add_edge(0, 1);
  two_ec.add_edge(0, 2);
  two_ec.add_edge(0, 3);
  two_ec.add_edge(1, 2);
  two_ec.add_edge(1, 3);
  two_ec.add_edge(4, 5);
  two_ec.add_edge(4, 6);
  two_ec.add_edge(4, 7);
  two_ec.add_edge(5, 6);
  two_ec.add_edge(5, 7);
  two_ec.add_edge(2, 6);
  two_ec.add_edge(3, 7);
  REQUIRE(two_ec.is_cubic());
  CHECK_THROWS_WITH_AS(validate_cubic_3ec(two_ec),
                       doctest::Contains("edge connectivity"), RejectedInput);
}
