#include "doctest.h"
#include "generators.hpp"
#include "olc/patterns.hpp"

using namespace olc;

TEST_CASE("catalog shapes") {
  auto pe1 = padded_edge(1);
  CHECK(pe1.graph.size() == 5);
  CHECK(pe1.graph.edge_count() == 1);
  CHECK(pe1.graph.has_edge(1, 3));

  CHECK(padded_fork(0).graph == olc::fork().graph);
  CHECK(edge_span(0).graph == OrderedGraph::build(2, {{0, 1}}));

  CHECK(fork_tail().graph.size() == 4);
  CHECK(fork_tail().graph.forward_neighbors(0) == std::vector<Vertex>{1, 2});
  CHECK(nested_pair().graph.has_edge(0, 3));
  CHECK(nested_pair().graph.has_edge(1, 2));
  CHECK(nested_pair().graph.edge_count() == 2);

  auto pf2 = padded_fork(2);
  CHECK(pf2.graph.size() == 5);
  CHECK(pf2.graph.has_edge(2, 3));
  CHECK(pf2.graph.has_edge(2, 4));

  CHECK_THROWS_AS(padded_fork(-1), InputError);
}

TEST_CASE("pattern_from_name") {
  CHECK(pattern_from_name("fork").graph == olc::fork().graph);
  CHECK(pattern_from_name("fork-tail").graph == fork_tail().graph);
  CHECK(pattern_from_name("nested-pair").graph == nested_pair().graph);
  CHECK(pattern_from_name("edge-span:2").graph == edge_span(2).graph);
  CHECK(pattern_from_name("padded-edge:1").graph == padded_edge(1).graph);
  CHECK(pattern_from_name("padded-fork:3").graph == padded_fork(3).graph);
  CHECK_THROWS_AS(pattern_from_name("triangle"), InputError);
  CHECK_THROWS_AS(pattern_from_name("edge-span:x"), InputError);
}

TEST_CASE("find_induced examples") {
  auto frk = OrderedGraph::build(3, {{0, 1}, {0, 2}});
  auto w = find_induced(frk, olc::fork());
  REQUIRE(w);
  CHECK(*w == std::vector<Vertex>{0, 1, 2});

  auto k4 = OrderedGraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(!find_induced(k4, nested_pair()));

  auto np = OrderedGraph::build(4, {{0, 3}, {1, 2}});
  auto w2 = find_induced(np, nested_pair());
  REQUIRE(w2);
  CHECK(*w2 == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("find_induced matches the definition-level brute force") {
  testgen::Rng rng(3);
  std::vector<Pattern> catalog;
  for (int l = 0; l <= 3; ++l) {
    catalog.push_back(edge_span(l));
    catalog.push_back(padded_edge(l));
    catalog.push_back(padded_fork(l));
  }
  catalog.push_back(olc::fork());
  catalog.push_back(fork_tail());
  catalog.push_back(nested_pair());

  for (int round = 0; round < 150; ++round) {
    const int n = 3 + static_cast<int>(rng() % 6);
    auto g = testgen::random_graph(n, 0.2 + 0.1 * (rng() % 6), rng);
    for (const auto& p : catalog) {
      auto a = find_induced(g, p);
      auto b = testgen::brute_find_induced(g, p);
      CHECK(a.has_value() == b.has_value());
      if (a && b) CHECK(*a == *b);  // both lexicographically smallest
    }
  }
}

TEST_CASE("contains_clique") {
  auto k5 = OrderedGraph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                                    {2, 3}, {2, 4}, {3, 4}});
  auto w = contains_clique(k5, 5);
  REQUIRE(w);
  CHECK(*w == std::vector<Vertex>{0, 1, 2, 3, 4});

  auto c5 = OrderedGraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(!contains_clique(c5, 3));
  CHECK(*contains_clique(c5, 1) == std::vector<Vertex>{0});
  CHECK_THROWS_AS(contains_clique(c5, 0), PreconditionError);
}

TEST_CASE("nested-pair fast detector agrees with find_induced") {
  testgen::Rng rng(17);
  for (int round = 0; round < 300; ++round) {
    const int n = 4 + static_cast<int>(rng() % 6);
    auto g = testgen::random_graph(n, 0.15 + 0.1 * (rng() % 7), rng);
    const bool fast = find_nested_pair(g).has_value();
    const bool slow = find_induced(g, nested_pair()).has_value();
    CHECK(fast == slow);
    if (auto w = find_nested_pair(g)) {
      auto [a, b, c, d] = *w;
      CHECK(a < b);
      CHECK(b < c);
      CHECK(c < d);
      CHECK(g.has_edge(a, d));
      CHECK(g.has_edge(b, c));
      CHECK(!g.has_edge(a, b));
      CHECK(!g.has_edge(a, c));
      CHECK(!g.has_edge(b, d));
      CHECK(!g.has_edge(c, d));
    }
  }
}
