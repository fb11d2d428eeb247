#include <doctest.h>

#include <sstream>

#include "hicm/graph.hpp"
#include "hicm/metrics.hpp"
#include "test_util.hpp"

using namespace hicm;

TEST_CASE("load_edge_list: smallest path") {
  Graph g = load_edge_list("a b\nb c");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.label(0) == "a");
  CHECK(g.label(2) == "c");
}

TEST_CASE("load_edge_list: drops self-loops and duplicates") {
  LoadSummary s;
  Graph g = load_edge_list("a a\na b\na b", &s);
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(s.self_loops_dropped == 1);
  CHECK(s.duplicates_dropped == 1);
}

TEST_CASE("load_edge_list: triangle adjacency is symmetric") {
  Graph g = load_edge_list("a b\nb c\nc a");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(0) == 2);
  for (NodeId u = 0; u < 3; ++u)
    for (const auto& nb : g.neighbors(u)) {
      bool back = false;
      for (const auto& nb2 : g.neighbors(nb.node)) back |= nb2.node == u;
      CHECK(back);
    }
}

TEST_CASE("load_edge_list: comments and reverse duplicates") {
  Graph g = load_edge_list("# header\n% other\nx y\ny x\n");
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("load_edge_list: malformed line reports line number") {
  CHECK_THROWS_WITH_AS(load_edge_list("a b\nc\n"), doctest::Contains("line 2"),
                       std::runtime_error);
  CHECK_THROWS_AS(load_edge_list("a b c\n"), std::runtime_error);
  CHECK_THROWS_AS(load_edge_list(""), std::runtime_error);
  CHECK_THROWS_AS(load_edge_list("# only comments\n"), std::runtime_error);
}

TEST_CASE("load_edge_list: identical text yields identical graphs") {
  const std::string text = "a b\nb c\nc d\nd a\nb d\n";
  Graph g1 = load_edge_list(text);
  Graph g2 = load_edge_list(text);
  REQUIRE(g1.node_count() == g2.node_count());
  REQUIRE(g1.edges() == g2.edges());
  for (NodeId u = 0; u < g1.node_count(); ++u) {
    REQUIRE(g1.degree(u) == g2.degree(u));
    for (std::size_t i = 0; i < g1.degree(u); ++i) {
      CHECK(g1.neighbors(u)[i].node == g2.neighbors(u)[i].node);
      CHECK(g1.neighbors(u)[i].out_draw == g2.neighbors(u)[i].out_draw);
    }
  }
}

TEST_CASE("edge list round-trips through export") {
  Graph g = load_edge_list("n1 n2\nn2 n3\nn3 n1\nn3 n4");
  std::ostringstream out;
  write_edge_list(g, out);
  Graph h = load_edge_list(out.str());
  CHECK(g.node_count() == h.node_count());
  CHECK(g.edges() == h.edges());
  for (NodeId u = 0; u < g.node_count(); ++u) CHECK(g.label(u) == h.label(u));
}
