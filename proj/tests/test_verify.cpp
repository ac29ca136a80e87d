#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rainbow3/coloring.hpp"
#include "rainbow3/errors.hpp"
#include "rainbow3/generators.hpp"
#include "rainbow3/verify.hpp"

using namespace rainbow3;

namespace {

EdgeColoring uniform(const Graph& g, Color c) { return EdgeColoring(std::vector<Color>(g.num_edges(), c)); }

ColorTriple tri(ColorSet a, ColorSet b, ColorSet c) { return {std::move(a), std::move(b), std::move(c)}; }

}  // namespace

TEST_CASE("exists_rainbow_s_tree examples") {
  Graph p = path_graph(3);
  CHECK(exists_rainbow_s_tree(p, EdgeColoring(std::vector<Color>{1, 2}), {0, 1, 2}));
  CHECK_FALSE(exists_rainbow_s_tree(p, EdgeColoring(std::vector<Color>{1, 1}), {0, 1, 2}));
  Graph k3 = complete_graph(3);
  CHECK_FALSE(exists_rainbow_s_tree(k3, uniform(k3, 1), {0, 1, 2}));
}

TEST_CASE("exists_rainbow_s_tree refuses too many colors") {
  Graph p = path_graph(17);
  EdgeColoring c(p.num_edges());
  for (EdgeId e = 0; e < p.num_edges(); ++e) c.set(e, e + 1);
  CHECK_THROWS_AS(exists_rainbow_s_tree(p, c, {0, 8, 16}), LimitExceeded);
  RainbowTreeOptions wide;
  wide.max_colors = 20;
  CHECK(exists_rainbow_s_tree(p, c, {0, 8, 16}, wide));
}

TEST_CASE("property: subset DP and the walk-based check agree with subtree enumeration") {
  std::mt19937_64 rng(31337);
  std::size_t checked = 0;
  for (const Graph& g : oracle::small_corpus()) {
    if (g.num_vertices() > 7) continue;
    for (int round = 0; round < 4; ++round) {
      const Color colors = static_cast<Color>(1 + rng() % 4);
      EdgeColoring c(g.num_edges());
      for (EdgeId e = 0; e < g.num_edges(); ++e) c.set(e, static_cast<Color>(1 + rng() % colors));
      const auto n = static_cast<Vertex>(g.num_vertices());
      bool all = true;
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
          for (Vertex d = b + 1; d < n; ++d) {
            const bool expect = oracle::rainbow_tree_exists(g, c, {a, b, d});
            REQUIRE(exists_rainbow_s_tree(g, c, {a, b, d}) == expect);
            all = all && expect;
            ++checked;
          }
      CHECK(is_3_rainbow(g, c).verdict == all);
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("is_3_rainbow examples") {
  Graph k33 = complete_bipartite(3, 3);
  auto ok = is_3_rainbow(k33, spanning_tree_coloring(k33));
  CHECK(ok.verdict);
  CHECK_FALSE(ok.failing_triple);
  CHECK(ok.triples_checked == 20);

  Graph k4 = complete_graph(4);
  auto bad = is_3_rainbow(k4, uniform(k4, 1));
  CHECK_FALSE(bad.verdict);
  REQUIRE(bad.failing_triple);
  CHECK_FALSE(exists_rainbow_s_tree(k4, uniform(k4, 1), *bad.failing_triple));
}

TEST_CASE("verify_certificate") {
  // Vertex 3 outside D = {0, 1, 2}, legs colored 1, 2, 3.
  Graph g = complete_graph(4);
  EdgeColoring c(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) c.set(e, 4);
  c.set(*g.edge_id(3, 0), 1);
  c.set(*g.edge_id(3, 1), 2);
  c.set(*g.edge_id(3, 2), 3);
  const std::vector<char> in_d{1, 1, 1, 0};
  SafetyCertificate legs{3, {std::vector<Vertex>{3, 0}, std::vector<Vertex>{3, 1}, std::vector<Vertex>{3, 2}}};
  CHECK(verify_certificate(g, c, in_d, legs));

  c.set(*g.edge_id(3, 2), 1);
  CHECK_FALSE(verify_certificate(g, c, in_d, legs));  // repeated color

  // Two paths through the same outside vertex.
  Graph h = complete_graph(5);
  EdgeColoring ch(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) ch.set(e, e + 1);
  const std::vector<char> in_h{1, 1, 1, 0, 0};
  SafetyCertificate shared{3, {std::vector<Vertex>{3, 0}, std::vector<Vertex>{3, 4, 1}, std::vector<Vertex>{3, 4, 2}}};
  CHECK_FALSE(verify_certificate(h, ch, in_h, shared));
  SafetyCertificate fine{3, {std::vector<Vertex>{3, 0}, std::vector<Vertex>{3, 4, 1}, std::vector<Vertex>{3, 2}}};
  CHECK(verify_certificate(h, ch, in_h, fine));
  // First path must be a single leg.
  SafetyCertificate long_first{3, {std::vector<Vertex>{3, 4, 0}, std::vector<Vertex>{3, 1}, std::vector<Vertex>{3, 2}}};
  CHECK_FALSE(verify_certificate(h, ch, in_h, long_first));
}

TEST_CASE("class table shape") {
  const auto& table = class_table();
  const std::array<std::size_t, 7> sizes{7, 8, 9, 8, 3, 2, 4};
  std::size_t total = 0;
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(table[i].size() == sizes[i]);
    total += table[i].size();
    if (i >= 1)
      for (const auto& t : table[i]) CHECK(t[0] == ColorSet{static_cast<Color>(i)});
  }
  CHECK(total == 41);
}

TEST_CASE("class_membership examples") {
  CHECK(class_membership(tri({1}, {2, 4}, {3, 5})) == 1);
  CHECK(class_membership(tri({1}, {3, 5}, {2, 4})) == 1);
  CHECK(class_membership(tri({4}, {3, 6}, {1, 2, 5})) == 4);
  CHECK_FALSE(class_membership(tri({1}, {2, 3}, {4, 5})));
  // Two single-color paths: either may lead.
  CHECK(class_membership(tri({2}, {1}, {3, 6})) == 0);
}

TEST_CASE("pickable examples") {
  const auto u = tri({1}, {2, 4}, {5, 6});
  const auto v = tri({1}, {2, 5}, {4, 6});
  const auto w = tri({1}, {2, 6}, {4, 5});
  CHECK_FALSE(pickable(u, v, w));
  CHECK_FALSE(pickable_bruteforce(u, v, w));

  const auto a = tri({1}, {2, 4}, {3, 5});
  const auto b = tri({2}, {3, 6}, {1, 4});
  const auto c = tri({3}, {1, 5}, {2, 6});
  CHECK(pickable(a, b, c));
  CHECK(pickable_bruteforce(a, b, c));

  CHECK(pickable(a, a, a));
  CHECK(pickable_bruteforce(a, a, a));
}

TEST_CASE("property: pickable matches brute force on all class-table triples") {
  std::vector<ColorTriple> all;
  for (const auto& cls : class_table()) all.insert(all.end(), cls.begin(), cls.end());
  std::size_t mismatches = 0;
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all) mismatches += pickable(x, y, z) != pickable_bruteforce(x, y, z);
  CHECK(mismatches == 0);
  for (std::size_t i = 1; i < 7; ++i)
    for (const auto& x : class_table()[i])
      for (const auto& y : class_table()[i])
        for (const auto& z : class_table()[i]) CHECK(pickable_bruteforce(x, y, z));
}
