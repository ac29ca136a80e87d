#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rainbow3/coloring.hpp"
#include "rainbow3/domination.hpp"
#include "rainbow3/edge_coloring.hpp"
#include "rainbow3/graph.hpp"
#include "rainbow3/verify.hpp"

namespace rainbow3 {

// Edge list: "n m" then m lines "u v"; '#' starts a comment. Throws
// ParseError naming the line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

// Coloring file: '#' header lines
//   # method <name>
//   # vertices <n>
//   # dom_size <|D|>
//   # inner_colors <d>
//   # total_colors <k>
//   # dom <v> <v> ...
//   # cert <v> : <path> : <path> : <path>
// followed by one "u v color" line per edge.
struct ColoringFile {
  std::string method;
  std::size_t vertices = 0;
  std::optional<std::size_t> dom_size;
  std::optional<std::size_t> inner_colors;
  std::optional<std::size_t> total_colors;
  std::optional<VertexSet> dom;
  std::vector<SafetyCertificate> certificates;
  Graph graph;
  EdgeColoring coloring;
};

ColoringFile parse_coloring(std::istream& in);
ColoringFile parse_coloring(const std::string& text);
std::string format_coloring(const Graph& g, const ColoringResult& result, std::span<const Vertex> dom);
std::string format_coloring(const ColoringFile& file);

// One "lo hi" pair per line, lo <= hi.
std::vector<Interval> parse_intervals(std::istream& in);
std::vector<Interval> parse_intervals(const std::string& text);

std::string labels_json(const std::map<std::string, Vertex>& labels);

// {verdict, witness, triples_checked, colors}; the witness is null, a
// failing triple, or a failing certificate vertex.
std::string verify_report_json(const VerifyReport& report);

// Checks the coloring, then any certificates it carries against its D.
VerifyReport verify_coloring_file(const ColoringFile& file);

}  // namespace rainbow3
