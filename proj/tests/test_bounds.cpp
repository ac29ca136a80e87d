#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "rainbow3/bounds.hpp"
#include "rainbow3/errors.hpp"
#include "rainbow3/generators.hpp"

using namespace rainbow3;
using nlohmann::json;

TEST_CASE("threshold graph: the 3-dominating bound beats the three-way bound") {
  auto r = bounds_report(threshold_example(5).graph);
  REQUIRE(r.bound_a.value);
  REQUIRE(r.bound_c.value);
  CHECK(*r.bound_a.value == 5);
  CHECK(*r.bound_c.value == 6);
  CHECK(r.best == 5);
}

TEST_CASE("windmill: the three-way bound is best") {
  auto r = bounds_report(french_windmill(3).graph);
  REQUIRE(r.bound_c.value);
  CHECK(*r.bound_c.value == 6);
  CHECK(r.best == 6);
  CHECK(r.sdiam3.value >= 2);
  CHECK(r.gamma_c == 1);
  if (r.bound_a.value) CHECK(*r.bound_a.value > 6);
}

TEST_CASE("K4 collapses to small constants") {
  auto r = bounds_report(complete_graph(4));
  CHECK(r.gamma_c == 1);
  CHECK(r.sdiam3.value == 2);
  CHECK(r.best >= 2);
  CHECK(r.best <= 3);
}

TEST_CASE("bounds JSON schema") {
  auto j = nlohmann::ordered_json::parse(bounds_report_json(bounds_report(french_windmill(2).graph)));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "m", "delta", "n1", "n2", "gamma_c", "sdiam3", "bound_a", "bound_b",
                                         "bound_c", "corollary_bounds", "best"});
  CHECK(j["gamma_c"]["provenance"] == "exact");
  CHECK(j["bound_b"]["note"].get<std::string>().find("cited") != std::string::npos);
}

TEST_CASE("formula bound applicability follows the minimum degree") {
  auto r = bounds_report(path_graph(6));
  for (const auto& cb : r.corollary_bounds) {
    if (cb.name == "trivial_n_minus_1" || cb.name == "gamma_c_plus_n1_plus_n2_plus_5") CHECK(cb.applicable);
    if (cb.name == "three_quarters_n_plus_3") CHECK_FALSE(cb.applicable);
  }
  CHECK(r.n1 == 2);
  CHECK(r.n2 == 4);
  CHECK(r.best == 5);
}

TEST_CASE("property: best lies between the Steiner diameter and n - 1") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Graph g = random_min_degree(8 + seed % 14, 1 + static_cast<int>(seed % 5), seed);
    auto r = bounds_report(g);
    CHECK(r.best >= r.sdiam3.value);
    CHECK(r.best <= static_cast<long>(g.num_vertices()) - 1);
    long expect = static_cast<long>(g.num_vertices()) - 1;
    for (const auto* b : {&r.bound_a, &r.bound_b, &r.bound_c}) {
      if (!b->value) continue;
      CHECK(*b->value >= r.sdiam3.value);
      expect = std::min(expect, *b->value);
    }
    for (const auto& cb : r.corollary_bounds)
      if (cb.applicable && cb.in_best) expect = std::min(expect, static_cast<long>(std::floor(cb.value)));
    CHECK(r.best == expect);
  }
}

TEST_CASE("bounds need a connected graph") {
  CHECK_THROWS_AS(bounds_report(build_graph(4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}})),
                  PreconditionError);
}
