#include "rainbow3/formats.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rainbow3/errors.hpp"

namespace rainbow3 {

namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

template <typename T>
T integer(const std::string& tok, std::size_t line, const char* what) {
  T value{};
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  return value;
}

double real(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, "expected a number, got '" + tok + "'");
}

Vertex vertex_in_range(const std::string& tok, std::size_t line, std::size_t n) {
  const auto v = integer<std::uint64_t>(tok, line, "a vertex id");
  if (v >= n) throw ParseError(line, "vertex " + tok + " is out of range for n = " + std::to_string(n));
  return static_cast<Vertex>(v);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens(strip_comment(line));
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError(lineno, "expected two integers, got " + std::to_string(tok.size()) + " fields");
    if (!header) {
      header = {integer<std::size_t>(tok[0], lineno, "a vertex count"),
                integer<std::size_t>(tok[1], lineno, "an edge count")};
      continue;
    }
    if (edges.size() == header->second)
      throw ParseError(lineno, "more edge lines than the declared " + std::to_string(header->second));
    const Vertex u = vertex_in_range(tok[0], lineno, header->first);
    const Vertex v = vertex_in_range(tok[1], lineno, header->first);
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second)
      throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(u, v);
  }
  if (!header) throw ParseError(std::max<std::size_t>(lineno, 1), "missing 'n m' header");
  if (edges.size() != header->second)
    throw ParseError(lineno, "declared " + std::to_string(header->second) + " edges, found " +
                                 std::to_string(edges.size()));
  return Graph(header->first, edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

ColoringFile parse_coloring(std::istream& in) {
  ColoringFile file;
  std::optional<std::size_t> declared_n;
  std::size_t dom_line = 0;
  std::vector<std::array<std::uint64_t, 3>> rows;
  std::vector<std::size_t> row_lines;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> cert_lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      auto tok = tokens(line.substr(hash + 1));
      if (!tokens(line.substr(0, hash)).empty()) throw ParseError(lineno, "trailing comment after data");
      if (tok.empty()) continue;
      const std::string& key = tok[0];
      auto single = [&](const char* what) {
        if (tok.size() != 2) throw ParseError(lineno, "'" + key + "' takes one value");
        return integer<std::size_t>(tok[1], lineno, what);
      };
      if (key == "method") {
        if (tok.size() != 2) throw ParseError(lineno, "'method' takes one value");
        file.method = tok[1];
      } else if (key == "vertices") {
        declared_n = single("a vertex count");
      } else if (key == "dom_size") {
        file.dom_size = single("a set size");
      } else if (key == "inner_colors") {
        file.inner_colors = single("a color count");
      } else if (key == "total_colors") {
        file.total_colors = single("a color count");
      } else if (key == "dom") {
        VertexSet d;
        for (std::size_t i = 1; i < tok.size(); ++i) d.push_back(integer<Vertex>(tok[i], lineno, "a vertex id"));
        file.dom = std::move(d);
        dom_line = lineno;
      } else if (key == "cert") {
        cert_lines.emplace_back(lineno, std::vector<std::string>(tok.begin() + 1, tok.end()));
      }
      continue;
    }
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok.size() != 3) throw ParseError(lineno, "expected 'u v color', got " + std::to_string(tok.size()) + " fields");
    std::array<std::uint64_t, 3> row{};
    for (std::size_t i = 0; i < 3; ++i) row[i] = integer<std::uint64_t>(tok[i], lineno, "a non-negative integer");
    if (row[2] == 0) throw ParseError(lineno, "colors must be positive");
    if (row[2] > 0xffffffffu) throw ParseError(lineno, "color out of range");
    rows.push_back(row);
    row_lines.push_back(lineno);
  }

  std::size_t n = declared_n.value_or(0);
  if (!declared_n)
    for (const auto& r : rows) n = std::max<std::size_t>(n, std::max(r[0], r[1]) + 1);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r[0] >= n || r[1] >= n)
      throw ParseError(row_lines[i], "vertex out of range for " + std::to_string(n) + " vertices");
    const auto u = static_cast<Vertex>(r[0]), v = static_cast<Vertex>(r[1]);
    if (u == v) throw ParseError(row_lines[i], "self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second)
      throw ParseError(row_lines[i], "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(u, v);
  }
  file.vertices = n;
  file.graph = Graph(n, edges);
  file.coloring = EdgeColoring(file.graph.num_edges());
  for (const auto& r : rows)
    file.coloring.set(*file.graph.edge_id(static_cast<Vertex>(r[0]), static_cast<Vertex>(r[1])),
                      static_cast<Color>(r[2]));

  if (file.dom)
    for (Vertex v : *file.dom)
      if (v >= n) throw ParseError(dom_line, "dom vertex " + std::to_string(v) + " is out of range");
  for (const auto& [ln, tok] : cert_lines) {
    SafetyCertificate cert;
    std::size_t part = 0;
    if (tok.empty()) throw ParseError(ln, "empty certificate");
    cert.vertex = vertex_in_range(tok[0], ln, n);
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] == ":") {
        ++part;
        if (part > 3) throw ParseError(ln, "a certificate has three paths");
        continue;
      }
      if (part == 0) throw ParseError(ln, "expected ':' after the certificate vertex");
      cert.paths[part - 1].push_back(vertex_in_range(tok[i], ln, n));
    }
    if (part != 3) throw ParseError(ln, "a certificate has three paths");
    file.certificates.push_back(std::move(cert));
  }
  return file;
}

ColoringFile parse_coloring(const std::string& text) {
  std::istringstream in(text);
  return parse_coloring(in);
}

std::string format_coloring(const ColoringFile& file) {
  std::ostringstream out;
  if (!file.method.empty()) out << "# method " << file.method << '\n';
  out << "# vertices " << file.graph.num_vertices() << '\n';
  if (file.dom_size) out << "# dom_size " << *file.dom_size << '\n';
  if (file.inner_colors) out << "# inner_colors " << *file.inner_colors << '\n';
  out << "# total_colors " << file.total_colors.value_or(file.coloring.num_colors()) << '\n';
  if (file.dom) {
    out << "# dom";
    for (Vertex v : *file.dom) out << ' ' << v;
    out << '\n';
  }
  for (const SafetyCertificate& cert : file.certificates) {
    out << "# cert " << cert.vertex;
    for (const auto& path : cert.paths) {
      out << " :";
      for (Vertex v : path) out << ' ' << v;
    }
    out << '\n';
  }
  for (EdgeId e = 0; e < file.graph.num_edges(); ++e) {
    const Edge& ed = file.graph.edge(e);
    out << ed.u << ' ' << ed.v << ' ' << file.coloring[e] << '\n';
  }
  return out.str();
}

std::string format_coloring(const Graph& g, const ColoringResult& result, std::span<const Vertex> dom) {
  ColoringFile file;
  file.method = result.report.method;
  file.graph = g;
  file.coloring = result.coloring;
  file.total_colors = result.report.total_colors;
  if (result.report.method != "spanning") {
    file.dom_size = result.report.dom_size;
    file.inner_colors = result.report.inner_colors;
    VertexSet d(dom.begin(), dom.end());
    std::sort(d.begin(), d.end());
    file.dom = std::move(d);
    file.certificates = result.certificates;
  }
  return format_coloring(file);
}

std::vector<Interval> parse_intervals(std::istream& in) {
  std::vector<Interval> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens(strip_comment(line));
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError(lineno, "expected 'lo hi'");
    Interval iv{real(tok[0], lineno), real(tok[1], lineno)};
    if (!(iv.lo <= iv.hi)) throw ParseError(lineno, "interval has lo > hi");
    out.push_back(iv);
  }
  return out;
}

std::vector<Interval> parse_intervals(const std::string& text) {
  std::istringstream in(text);
  return parse_intervals(in);
}

std::string labels_json(const std::map<std::string, Vertex>& labels) {
  ojson j = ojson::object();
  for (const auto& [name, v] : labels) j[name] = v;
  return j.dump(2) + "\n";
}

std::string verify_report_json(const VerifyReport& report) {
  ojson j;
  j["verdict"] = report.verdict;
  if (report.failing_triple) {
    j["witness"] = {{"triple", *report.failing_triple}};
  } else if (report.failing_certificate) {
    j["witness"] = {{"certificate", *report.failing_certificate}};
  } else {
    j["witness"] = nullptr;
  }
  j["triples_checked"] = report.triples_checked;
  j["colors"] = report.colors;
  return j.dump(2) + "\n";
}

VerifyReport verify_coloring_file(const ColoringFile& file) {
  VerifyReport report = is_3_rainbow(file.graph, file.coloring);
  if (!report.verdict || !file.dom) return report;
  const std::vector<char> in_d = membership(file.graph, *file.dom);
  for (const SafetyCertificate& cert : file.certificates) {
    if (!verify_certificate(file.graph, file.coloring, in_d, cert)) {
      report.verdict = false;
      report.failing_certificate = cert.vertex;
      break;
    }
  }
  return report;
}

}  // namespace rainbow3
