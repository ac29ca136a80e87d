#include <doctest.h>

#include "oracles.hpp"
#include "rainbow3/errors.hpp"
#include "rainbow3/generators.hpp"
#include "rainbow3/verify.hpp"

using namespace rainbow3;

TEST_CASE("exact_rx3 examples") {
  auto k3 = exact_rx3(complete_graph(3), 5);
  CHECK(k3.value == 2);
  auto k33 = exact_rx3(complete_bipartite(3, 3), 5);
  CHECK(k33.value == 3);
  CHECK(is_3_rainbow(complete_bipartite(3, 3), k33.coloring).verdict);
  CHECK(exact_rx3(path_graph(4), 5).value == 3);
}

TEST_CASE("exact_rx3 reports counts beyond kmax") {
  auto r = exact_rx3(complete_bipartite(3, 3), 2);
  CHECK_FALSE(r.value);
  CHECK(r.lower_bound == 3);
}

TEST_CASE("exact_rx3 limits and preconditions") {
  CHECK_THROWS_AS(exact_rx3(complete_graph(7), 5), LimitExceeded);
  CHECK_THROWS_AS(exact_rx3(complete_graph(4), 9), LimitExceeded);
  CHECK_THROWS_AS(exact_rx3(path_graph(2), 3), PreconditionError);
  ExactOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(exact_rx3(complete_bipartite(3, 3), 5, tiny), LimitExceeded);
}

TEST_CASE("property: exact_rx3 agrees with unreduced enumeration on small graphs") {
  std::size_t compared = 0;
  for (const Graph& g : oracle::small_corpus()) {
    if (g.num_edges() > 8 || g.num_vertices() > 7) continue;
    const auto r = exact_rx3(g, 6);
    REQUIRE(r.value);
    CHECK(*r.value == oracle::rx3(g, *r.value));
    ++compared;
  }
  CHECK(compared >= 10);
}

TEST_CASE("property: exact_rx3 sits between the Steiner diameter and n - 1") {
  for (const Graph& g : oracle::small_corpus()) {
    if (g.num_edges() > 14) continue;
    const int kmax = std::min<int>(8, static_cast<int>(g.num_vertices()) - 1);
    const auto r = exact_rx3(g, kmax);
    REQUIRE(r.value);
    CHECK(*r.value >= sdiam3(g).value);
    CHECK(*r.value >= 2);
    CHECK(*r.value <= static_cast<int>(g.num_vertices()) - 1);
    CHECK(r.coloring.num_colors() == static_cast<std::size_t>(*r.value));
    CHECK(is_3_rainbow(g, r.coloring).verdict);
  }
}

TEST_CASE("complete graphs solved exactly need 2 or 3 colors") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto r = exact_rx3(complete_graph(n), 4);
    REQUIRE(r.value);
    CHECK(*r.value >= 2);
    CHECK(*r.value <= 3);
  }
}
