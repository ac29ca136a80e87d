#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rainbow3/domination.hpp"
#include "rainbow3/errors.hpp"
#include "rainbow3/generators.hpp"

using namespace rainbow3;

TEST_CASE("check_domination examples") {
  const VertexSet zero{0};
  CHECK(check_domination(complete_graph(4), zero, DominationSpec::connected()));
  const VertexSet opposite{0, 3};
  CHECK(check_domination(cycle_graph(6), opposite, DominationSpec::plain()));
  CHECK_FALSE(check_domination(cycle_graph(6), opposite, DominationSpec::connected()));
  CHECK(check_domination(french_windmill(3).graph, zero, DominationSpec::connected_k_way(3)));
  CHECK_FALSE(check_domination(french_windmill(3).graph, zero, DominationSpec::connected_k_dominating(2)));
  CHECK_FALSE(check_domination(complete_graph(3), VertexSet{}, DominationSpec::plain()));
}

TEST_CASE("feet lists the neighbors inside D") {
  Graph g = complete_graph(5);
  const VertexSet d{1, 3};
  const auto in_d = membership(g, d);
  CHECK(feet(g, in_d, 0) == std::vector<Vertex>{1, 3});
}

TEST_CASE("min_connected_dominating_set examples") {
  for (std::size_t n = 3; n <= 7; ++n) CHECK(min_connected_dominating_set(complete_graph(n)).size() == 1);
  auto p5 = min_connected_dominating_set(path_graph(5));
  CHECK(p5.vertices == VertexSet{1, 2, 3});
  CHECK(p5.provenance == Provenance::Exact);
  CHECK(min_connected_dominating_set(cycle_graph(6)).size() == 4);
}

TEST_CASE("min_connected_dominating_set respects the vertex limit") {
  ExactSearchOptions opts;
  opts.max_vertices = 5;
  CHECK_THROWS_AS(min_connected_dominating_set(path_graph(6), opts), LimitExceeded);
}

TEST_CASE("property: exact CDS is valid and minimum against full enumeration") {
  for (const Graph& g : oracle::small_corpus()) {
    auto d = min_connected_dominating_set(g);
    CHECK(check_domination(g, d.vertices, DominationSpec::connected()));
    CHECK(d.size() == oracle::min_cds_size(g));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_min_degree(9 + seed % 4, 2, seed + 500);
    CHECK(min_connected_dominating_set(g).size() == oracle::min_cds_size(g));
  }
}

TEST_CASE("cds_heuristic") {
  CHECK(cds_heuristic(star_graph(5)).vertices == VertexSet{0});
  CHECK(cds_heuristic(complete_graph(4)).size() == 1);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_min_degree(8 + seed % 14, 3, seed);
    auto h = cds_heuristic(g);
    CHECK(h.provenance == Provenance::Heuristic);
    CHECK(check_domination(g, h.vertices, DominationSpec::connected()));
    CHECK(h.size() >= min_connected_dominating_set(g).size());
  }
}

TEST_CASE("three_way_dominating_set") {
  auto wm = three_way_dominating_set(french_windmill(3).graph);
  CHECK(wm.vertices == VertexSet{0});
  auto p3 = three_way_dominating_set(path_graph(3));
  CHECK(p3.vertices == VertexSet{0, 1, 2});
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_min_degree(8 + seed % 16, 1 + static_cast<int>(seed % 4), seed + 77);
    auto d = three_way_dominating_set(g);
    CHECK(check_domination(g, d.vertices, DominationSpec::connected_k_way(3)));
    if (g.min_degree() >= 3) CHECK(d.vertices == min_connected_dominating_set(g).vertices);
  }
}

TEST_CASE("min_connected_k_dominating_set") {
  auto k4 = min_connected_k_dominating_set(complete_graph(4), 3);
  REQUIRE(k4);
  CHECK(k4->size() == 3);
  auto k33 = min_connected_k_dominating_set(complete_bipartite(3, 3), 3);
  REQUIRE(k33);
  CHECK(k33->size() == 4);
  auto th = min_connected_k_dominating_set(threshold_example(6).graph, 3);
  REQUIRE(th);
  CHECK(th->vertices == VertexSet{0, 1, 2});
}

TEST_CASE("property: connected k-dominating implies connected k-way") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 300; ++round) {
    Graph g = random_min_degree(6 + rng() % 8, static_cast<int>(1 + rng() % 3), rng());
    VertexSet d;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (rng() % 2) d.push_back(v);
    const int k = static_cast<int>(1 + rng() % 3);
    if (check_domination(g, d, DominationSpec::connected_k_dominating(k)))
      CHECK(check_domination(g, d, DominationSpec::connected_k_way(k)));
  }
}

TEST_CASE("interval_dominating_path") {
  SUBCASE("pairwise overlapping intervals give one vertex") {
    const std::vector<Interval> ivs{{0, 10}, {1, 9}, {2, 8}, {3, 7}};
    CHECK(interval_dominating_path(ivs).size() == 1);
  }
  SUBCASE("staircase") {
    const std::vector<Interval> ivs{{0, 2}, {1, 3}, {2, 4}, {3, 5}};
    auto path = interval_dominating_path(ivs);
    Graph g = interval_graph(ivs);
    VertexSet d(path.begin(), path.end());
    std::sort(d.begin(), d.end());
    CHECK(check_domination(g, d, DominationSpec::connected()));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(g.adjacent(path[i], path[i + 1]));
  }
  SUBCASE("disconnected system is rejected") {
    const std::vector<Interval> ivs{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(interval_dominating_path(ivs), PreconditionError);
  }
}
