#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubictour/generate.hpp"
#include "cubictour/matching.hpp"
#include "test_util.hpp"

using namespace cubictour;

namespace {

bool is_valid_matching(const Multigraph& g, const Matching& m) {
  std::set<VertexId> covered;
  for (EdgeId id : m.edges) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) return false;
    if (covered.count(e.u) || covered.count(e.v)) return false;
    covered.insert(e.u);
    covered.insert(e.v);
  }
  return true;
}

}  // namespace

TEST_CASE("K4 has a perfect matching of size 2") {
  Multigraph g = named_graph("k4");
  Matching m = max_matching(g);
  CHECK(is_valid_matching(g, m));
  CHECK(m.edges.size() == 2);
  CHECK(m.is_perfect(g));
}

TEST_CASE("Petersen has a perfect matching of size 5") {
  Multigraph g = named_graph("petersen");
  Matching m = max_matching(g);
  CHECK(is_valid_matching(g, m));
  CHECK(m.edges.size() == 5);
  CHECK(m.is_perfect(g));
}

TEST_CASE("forced edge in K4 forces the complementary pair") {
  Multigraph g = named_graph("k4");
  for (EdgeId forced : g.edges()) {
    Matching m = max_matching(g, {forced});
    CHECK(is_valid_matching(g, m));
    CHECK(m.edges.count(forced) == 1);
    CHECK(m.is_perfect(g));
  }
}

TEST_CASE("forbidden edges never appear") {
  Multigraph g = named_graph("petersen");
  std::set<EdgeId> forbidden{0, 3, 7};
  Matching m = max_matching(g, {}, forbidden);
  CHECK(is_valid_matching(g, m));
  for (EdgeId id : forbidden) CHECK(m.edges.count(id) == 0);
}

TEST_CASE("forced edges must be pairwise non-adjacent") {
  Multigraph g = named_graph("k4");
  // edges 0 and 1 are (0,1) and (0,2): share vertex 0
  CHECK_THROWS_AS(max_matching(g, {0, 1}), RejectedInput);
  CHECK_THROWS_AS(max_matching(g, {0}, {0}), RejectedInput);
}

TEST_CASE("matching size equals brute force on small graphs") {
  for (const char* name : {"k4", "prism", "k33", "cube", "petersen"}) {
    Multigraph g = named_graph(name);
    CHECK(static_cast<int>(max_matching(g).edges.size()) ==
          testutil::brute_max_matching_size(g));
  }
  for (int seed = 0; seed < 8; ++seed) {
    Multigraph g = random_cubic_3ec(12, 300 + seed);
    CHECK(static_cast<int>(max_matching(g).edges.size()) ==
          testutil::brute_max_matching_size(g));
  }
}

TEST_CASE("matching handles non-cubic and odd graphs") {
  // path of 5 vertices: maximum matching 2
  Multigraph path = Multigraph::with_vertices(5);
  for (int i = 0; i < 4; ++i) path.add_edge(i, i + 1);
  CHECK(max_matching(path).edges.size() == 2);

  // triangle: maximum matching 1
  Multigraph tri = Multigraph::with_vertices(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  Matching m = max_matching(tri);
  CHECK(m.edges.size() == 1);
  CHECK_FALSE(m.is_perfect(tri));
}

TEST_CASE("parallel edges are distinct matching candidates") {
  Multigraph g = Multigraph::with_vertices(2);
  EdgeId a = g.add_edge(0, 1);
  g.add_edge(0, 1);
  Matching m = max_matching(g);
  CHECK(m.edges.size() == 1);
  CHECK(m.edges.count(a) == 1);  // ascending scan picks the smaller id

  Matching m2 = max_matching(g, {}, {a});
  CHECK(m2.edges.size() == 1);
  CHECK(m2.edges.count(a) == 0);
}

TEST_CASE("two-factor complement of K4 is a 4-cycle") {
  Multigraph g = named_graph("k4");
  Matching m = max_matching(g);
  EvenSubgraph tf = two_factor_from_matching(g, m);
  CHECK(tf.is_two_factor());
  CHECK(tf.total_edges() == 4);
  CHECK(testutil::cycle_lengths(tf) == std::vector<int>{4});
}

TEST_CASE("every Petersen 2-factor is two 5-cycles") {
  Multigraph g = named_graph("petersen");
  auto pms = testutil::enumerate_perfect_matchings(g);
  CHECK(pms.size() == 6);  // the Petersen graph has exactly six
  for (const auto& pm : pms) {
    Matching m;
    m.edges = pm;
    EvenSubgraph tf = two_factor_from_matching(g, m);
    CHECK(testutil::cycle_lengths(tf) == std::vector<int>{5, 5});
  }
}

TEST_CASE("prism triangle-to-triangle matching leaves two triangles") {
  Multigraph g = named_graph("prism");
  // the three cross edges are ids 6, 7, 8 in the construction
  Matching m;
  m.edges = {6, 7, 8};
  for (EdgeId id : m.edges) {
    const Edge& e = g.edge(id);
    CHECK(((e.u < 3) != (e.v < 3)));  // really the cross edges
  }
  EvenSubgraph tf = two_factor_from_matching(g, m);
  CHECK(testutil::cycle_lengths(tf) == std::vector<int>{3, 3});
}

TEST_CASE("two_factor_from_matching rejects imperfect matchings") {
  Multigraph g = named_graph("k4");
  Matching m;
  m.edges = {0};
  CHECK_THROWS_AS(two_factor_from_matching(g, m), RejectedInput);
}

TEST_CASE("two-factor invariants on random instances") {
  for (int seed = 0; seed < 10; ++seed) {
    Multigraph g = random_cubic_3ec(16, 400 + seed);
    Matching m = max_matching(g);
    REQUIRE(m.is_perfect(g));
    EvenSubgraph tf = two_factor_from_matching(g, m);
    CHECK(tf.is_two_factor());
    CHECK(tf.total_edges() == g.vertex_count());
  }
}
