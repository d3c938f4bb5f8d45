#include "doctest.h"
#include "generators.hpp"
#include "olc/core.hpp"
#include "olc/json_io.hpp"
#include "olc/patterns.hpp"

using namespace olc;

TEST_CASE("build_graph basics") {
  auto g = OrderedGraph::build(3, {{0, 1}, {0, 2}});
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 0));
  CHECK(!g.has_edge(1, 2));

  auto empty = OrderedGraph::build(2, {});
  CHECK(empty.edge_count() == 0);

  CHECK_THROWS_AS(OrderedGraph::build(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(OrderedGraph::build(2, {{0, 2}}), InputError);
  // duplicate pairs collapse
  auto dup = OrderedGraph::build(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("induced subgraphs") {
  auto k3 = OrderedGraph::build(3, {{0, 1}, {0, 2}, {1, 2}});
  auto e = k3.induced({0, 2});
  CHECK(e.size() == 2);
  CHECK(e.has_edge(0, 1));

  auto frk = OrderedGraph::build(3, {{0, 1}, {0, 2}});
  CHECK(frk.induced({0, 1, 2}) == frk);
  auto two = frk.induced({1, 2});
  CHECK(two.edge_count() == 0);

  CHECK_THROWS_AS(frk.induced({2, 1}), InputError);
  CHECK_THROWS_AS(frk.induced({0, 3}), InputError);
}

TEST_CASE("forward and backward neighbors") {
  auto frk = OrderedGraph::build(3, {{0, 1}, {0, 2}});
  CHECK(frk.forward_neighbors(0) == std::vector<Vertex>{1, 2});
  CHECK(frk.backward_neighbors(0).empty());
  CHECK(frk.forward_neighbors(2).empty());
  CHECK(frk.backward_neighbors(2) == std::vector<Vertex>{0});
  auto edgeless = OrderedGraph::build(3, {});
  CHECK(edgeless.forward_neighbors(1).empty());
  CHECK(edgeless.backward_neighbors(1).empty());
}

TEST_CASE("reverse relabels and is an involution") {
  auto frk = OrderedGraph::build(3, {{0, 1}, {0, 2}});
  auto rev = frk.reversed();
  CHECK(rev.has_edge(2, 1));
  CHECK(rev.has_edge(2, 0));
  CHECK(!rev.has_edge(0, 1));
  CHECK(rev.reversed() == frk);
  auto edgeless = OrderedGraph::build(4, {});
  CHECK(edgeless.reversed() == edgeless);

  testgen::Rng rng(7);
  for (int round = 0; round < 50; ++round) {
    auto g = testgen::random_graph(8, 0.4, rng);
    CHECK(g.reversed().reversed() == g);
  }
}

TEST_CASE("is_proper") {
  Instance edge{OrderedGraph::build(2, {{0, 1}}), {{1, 2}, {1, 2}}, std::nullopt};
  CHECK(is_proper(edge, {1, 2}));
  CHECK(!is_proper(edge, {1, 1}));
  Instance single{OrderedGraph(1), {{2}}, std::nullopt};
  CHECK(!is_proper(single, {1}));
  CHECK_THROWS_AS(is_proper(edge, {1}), InputError);
}

TEST_CASE("pattern freeness is preserved under simultaneous reversal") {
  testgen::Rng rng(11);
  std::vector<Pattern> catalog = {olc::fork(),          fork_tail(),     nested_pair(),
                                  edge_span(0),    edge_span(1),    edge_span(2),
                                  padded_edge(0),  padded_edge(1),  padded_fork(0),
                                  padded_fork(1),  padded_fork(2)};
  for (int round = 0; round < 60; ++round) {
    auto g = testgen::random_graph(8, 0.35, rng);
    for (const auto& p : catalog)
      CHECK(is_free(g, p) == is_free(g.reversed(), reverse(p)));
  }
}

TEST_CASE("instance JSON round trip with deterministic field order") {
  Instance edge{OrderedGraph::build(2, {{0, 1}}), {{1, 2}, {1, 2}}, std::nullopt};
  const auto j = instance_to_json(edge);
  CHECK(j.dump() == R"({"n":2,"edges":[[0,1]],"lists":[[1,2],[1,2]]})");
  const auto back = instance_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back == edge);

  CHECK_THROWS_AS(instance_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[1,0]],"lists":[[1],[1]]})")),
                  InputError);
  CHECK_THROWS_AS(instance_from_json(nlohmann::json::parse(R"({"n":1,"edges":[]})")), InputError);

  CHECK(coloring_to_json(Coloring{1, 2}).dump() == R"({"status":"sat","colors":[1,2]})");
  CHECK(coloring_to_json(std::nullopt).dump() == R"({"status":"unsat"})");
  CHECK(*coloring_from_json(nlohmann::json::parse(R"({"status":"sat","colors":[3]})")) ==
        Coloring{3});
  CHECK(!coloring_from_json(nlohmann::json::parse(R"({"status":"unsat"})")));
}
