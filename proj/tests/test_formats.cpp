#include <doctest.h>

#include <json.hpp>

#include "rainbow3/coloring.hpp"
#include "rainbow3/errors.hpp"
#include "rainbow3/formats.hpp"
#include "rainbow3/generators.hpp"

using namespace rainbow3;
using nlohmann::json;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list("# triangle\n3 3\n0 1\n1 2 # inline\n\n2 0\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(parse_edge_list(format_edge_list(g)).edges().size() == 3);
  CHECK(format_edge_list(parse_edge_list(format_edge_list(g))) == format_edge_list(g));
}

TEST_CASE("edge list errors name the line") {
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("3 2\n0 1\n") > 0);             // too few edges
  CHECK(parse_error_line("3 1\n0 5\n") == 2);            // out of range
  CHECK(parse_error_line("3 1\n1 1\n") == 2);            // self-loop
  CHECK(parse_error_line("3 2\n0 1\n1 0\n") == 3);       // duplicate
  CHECK(parse_error_line("3 1\n0 x\n") == 2);            // garbage
  CHECK(parse_error_line("3 1\n0 1\n1 2\n") == 3);       // extra edge
  CHECK(parse_error_line("3 1\n0 1 2\n") == 2);          // extra field
}

TEST_CASE("coloring round trip keeps header and certificates") {
  auto wm = french_windmill(2);
  const VertexSet d{0};
  auto r = theorem3_coloring(wm.graph, d);
  const std::string text = format_coloring(wm.graph, r, d);
  CHECK(text.rfind("# method theorem3\n", 0) == 0);
  ColoringFile f = parse_coloring(text);
  CHECK(f.method == "theorem3");
  CHECK(f.vertices == 7);
  CHECK(f.dom == d);
  CHECK(f.dom_size == 1u);
  CHECK(f.total_colors == r.coloring.num_colors());
  CHECK(f.certificates == r.certificates);
  CHECK(f.coloring.num_colors() == r.coloring.num_colors());
  CHECK(format_coloring(f) == text);
  auto report = verify_coloring_file(f);
  CHECK(report.verdict);
}

TEST_CASE("verify reports a broken certificate") {
  auto wm = french_windmill(2);
  const VertexSet d{0};
  auto r = theorem3_coloring(wm.graph, d);
  ColoringFile f = parse_coloring(format_coloring(wm.graph, r, d));
  std::swap(f.certificates[0].paths[1], f.certificates[0].paths[0]);
  auto report = verify_coloring_file(f);
  CHECK_FALSE(report.verdict);
  CHECK(report.failing_certificate == f.certificates[0].vertex);
  json j = json::parse(verify_report_json(report));
  CHECK(j["verdict"] == false);
  CHECK(j["witness"]["certificate"] == f.certificates[0].vertex);
}

TEST_CASE("verify JSON schema") {
  Graph k4 = complete_graph(4);
  VerifyReport bad = is_3_rainbow(k4, EdgeColoring(std::vector<Color>(6, 1)));
  auto j = nlohmann::ordered_json::parse(verify_report_json(bad));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"verdict", "witness", "triples_checked", "colors"});
  CHECK(j["witness"]["triple"].size() == 3);
  CHECK(j["colors"] == 1);
  VerifyReport ok = is_3_rainbow(k4, spanning_tree_coloring(k4));
  CHECK(json::parse(verify_report_json(ok))["witness"].is_null());
}

TEST_CASE("coloring parse errors") {
  CHECK_THROWS_AS(parse_coloring("# method spanning\n# vertices 3\n0 1 1\n1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("# method spanning\n# vertices 3\n0 1 1\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("# method theorem3\n# vertices 3\n# dom 7\n0 1 1\n"), ParseError);
  ColoringFile f = parse_coloring("# method spanning\n# vertices 3\n0 1 1\n1 2 2\n");
  CHECK(f.graph.num_edges() == 2);
  CHECK(verify_coloring_file(f).verdict);
}

TEST_CASE("intervals") {
  auto iv = parse_intervals("0 2\n1 3\n# note\n2.5 4\n");
  REQUIRE(iv.size() == 3);
  CHECK(iv[2].lo == doctest::Approx(2.5));
  CHECK_THROWS_AS(parse_intervals("3 1\n"), ParseError);
  CHECK_THROWS_AS(parse_intervals("1\n"), ParseError);
}

TEST_CASE("labels JSON is sorted by name") {
  auto wm = french_windmill(1);
  json j = json::parse(labels_json(wm.labels));
  CHECK(j["v0"] == 0);
  CHECK(j.size() == 4);
}
