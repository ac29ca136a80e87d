// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "rainbow3/rainbow3.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  r3_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph round trip") {
  const uint32_t pairs[] = {0, 1, 1, 2, 2, 0};
  r3_graph* g = nullptr;
  REQUIRE(r3_graph_from_edges(3, pairs, 3, &g) == R3_OK);
  CHECK(r3_graph_num_vertices(g) == 3);
  CHECK(r3_graph_num_edges(g) == 3);
  char* text = nullptr;
  REQUIRE(r3_graph_format(g, &text) == R3_OK);
  r3_graph* h = nullptr;
  REQUIRE(r3_graph_parse(text, &h) == R3_OK);
  r3_string_free(text);
  CHECK(r3_graph_num_edges(h) == 3);
  r3_graph_free(g);
  r3_graph_free(h);
}

TEST_CASE("errors map to status codes") {
  r3_graph* g = nullptr;
  CHECK(r3_graph_parse("3 1\n0 9\n", &g) == R3_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(r3_last_error()).find("line 2") != std::string::npos);
  const uint32_t loop[] = {1, 1};
  CHECK(r3_graph_from_edges(2, loop, 1, &g) == R3_INVALID_ARGUMENT);
  CHECK(r3_graph_parse(nullptr, &g) == R3_INVALID_ARGUMENT);
  r3_family_params p;
  r3_family_params_init(&p);
  CHECK(r3_generate("no-such-family", &p, &g, nullptr) == R3_INVALID_ARGUMENT);
  CHECK(std::string(r3_status_name(R3_LIMIT)) == "limit exceeded");
}

TEST_CASE("windmill pipeline through the C API") {
  r3_family_params p;
  r3_family_params_init(&p);
  p.t = 3;
  r3_graph* g = nullptr;
  char* labels = nullptr;
  REQUIRE(r3_generate("french-windmill", &p, &g, &labels) == R3_OK);
  CHECK(take(labels).find("\"v0\": 0") != std::string::npos);

  const uint32_t dom[] = {0};
  r3_coloring* c = nullptr;
  REQUIRE(r3_color(g, R3_METHOD_THEOREM3, dom, 1, &c) == R3_OK);
  CHECK(r3_coloring_num_colors(c) == 6);
  int verdict = -1;
  char* json = nullptr;
  REQUIRE(r3_verify(c, &verdict, &json) == R3_OK);
  CHECK(verdict == 1);
  CHECK(take(json).find("\"verdict\": true") != std::string::npos);

  char* text = nullptr;
  REQUIRE(r3_coloring_format(c, &text) == R3_OK);
  r3_coloring* back = nullptr;
  REQUIRE(r3_coloring_parse(text, &back) == R3_OK);
  r3_string_free(text);
  CHECK(r3_coloring_num_colors(back) == 6);
  CHECK(r3_graph_num_edges(r3_coloring_graph(back)) == 18);
  r3_coloring_free(back);
  r3_coloring_free(c);

  const uint32_t bad_dom[] = {1};
  CHECK(r3_color(g, R3_METHOD_THEOREM3, bad_dom, 1, &c) == R3_PRECONDITION);
  REQUIRE(r3_color(g, R3_METHOD_THEOREM3, nullptr, 0, &c) == R3_OK);
  CHECK(r3_coloring_num_colors(c) == 6);
  r3_coloring_free(c);
  r3_graph_free(g);
}

TEST_CASE("exact, bounds and steiner reports") {
  r3_family_params p;
  r3_family_params_init(&p);
  p.s = 3;
  p.t = 3;
  r3_graph* g = nullptr;
  REQUIRE(r3_generate("complete-bipartite", &p, &g, nullptr) == R3_OK);
  int value = 0;
  char* json = nullptr;
  REQUIRE(r3_exact_rx3(g, 3, &value, &json) == R3_OK);
  CHECK(value == 3);
  r3_string_free(json);
  REQUIRE(r3_exact_rx3(g, 2, &value, nullptr) == R3_OK);
  CHECK(value == -1);
  CHECK(r3_exact_rx3(g, 99, &value, nullptr) == R3_LIMIT);

  REQUIRE(r3_bounds_report(g, &json) == R3_OK);
  CHECK(take(json).find("\"corollary_bounds\"") != std::string::npos);
  REQUIRE(r3_steiner_report(g, &json) == R3_OK);
  CHECK(take(json).find("\"sdiam3\": 3") != std::string::npos);
  r3_graph_free(g);
}

TEST_CASE("interval graphs") {
  r3_graph* g = nullptr;
  char* labels = nullptr;
  REQUIRE(r3_interval_graph("0 2\n1 3\n2 4\n3 5\n", &g, &labels) == R3_OK);
  CHECK(r3_graph_num_vertices(g) == 4);
  CHECK(take(labels).find("\"p1\"") != std::string::npos);
  r3_graph_free(g);
}
