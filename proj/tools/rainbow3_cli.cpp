// Command-line front end; talks to the library only through the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow3/rainbow3.h"

namespace {

constexpr int kFalse = 1;
constexpr int kError = 2;

struct Failure {
  std::string message;
};

struct StringDeleter {
  void operator()(char* s) const { r3_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(r3_graph* g) const { r3_graph_free(g); }
};
using GraphPtr = std::unique_ptr<r3_graph, GraphDeleter>;

struct ColoringDeleter {
  void operator()(r3_coloring* c) const { r3_coloring_free(c); }
};
using ColoringPtr = std::unique_ptr<r3_coloring, ColoringDeleter>;

void check(r3_status status, const std::string& context) {
  if (status != R3_OK) throw Failure{context + ": " + r3_status_name(status) + ": " + r3_last_error()};
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw Failure{"cannot open '" + path + "'"};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{"cannot write '" + path + "'"};
  out << text;
}

GraphPtr load_graph(const std::string& path) {
  r3_graph* g = nullptr;
  check(r3_graph_parse(read_input(path).c_str(), &g), path.empty() ? "<stdin>" : path);
  return GraphPtr(g);
}

std::vector<uint32_t> read_vertex_list(const std::string& path) {
  std::istringstream in(read_input(path));
  std::vector<uint32_t> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line.substr(0, line.find('#')));
    for (std::string tok; fields >> tok;) {
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(tok, &used);
        if (used != tok.size() || tok[0] == '-') throw std::invalid_argument(tok);
        out.push_back(static_cast<uint32_t>(v));
      } catch (const std::exception&) {
        throw Failure{path + ": line " + std::to_string(lineno) + ": expected a vertex id, got '" + tok + "'"};
      }
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-rainbow colorings from dominating sets"};
  app.require_subcommand(1);

  std::string input, output;

  auto* gen = app.add_subcommand("gen", "generate a graph family as an edge list");
  std::string family, labels_path, intervals_path;
  r3_family_params params;
  r3_family_params_init(&params);
  gen->add_option("family", family,
                  "complete | complete-bipartite | path | cycle | star | gstar | threshold | chain | "
                  "french-windmill | random | interval")
      ->required();
  gen->add_option("--n", params.n, "vertex count (complete, path, cycle, random) or leaves (star)");
  gen->add_option("--s", params.s, "first side (complete-bipartite)");
  gen->add_option("--t", params.t, "second side, copies or independent vertices");
  gen->add_option("--k", params.k, "left side size (chain)");
  gen->add_option("--m", params.m, "number of middle blocks (gstar)");
  gen->add_option("--delta", params.delta, "minimum degree (gstar, random)");
  gen->add_option("--seed", params.seed, "random seed");
  gen->add_option("--intervals", intervals_path, "interval file (interval family)");
  gen->add_option("-o,--output", output, "edge list destination (default stdout)");
  gen->add_option("--labels", labels_path, "label map destination (default <output>.labels.json)");

  auto* color = app.add_subcommand("color", "color a graph");
  std::string method = "theorem3", dom = "auto";
  color->add_option("input", input, "edge list (default stdin)");
  color->add_option("--method", method, "theorem3 | theorem4 | spanning")
      ->check(CLI::IsMember({"theorem3", "theorem4", "spanning"}));
  color->add_option("--dom", dom, "auto, or a file of dominating-set vertex ids");
  color->add_option("-o,--output", output, "coloring destination (default stdout)");

  auto* verify = app.add_subcommand("verify", "check that a coloring is 3-rainbow");
  verify->add_option("input", input, "coloring file (default stdin)");

  auto* exact = app.add_subcommand("exact", "exact 3-rainbow index by exhaustive search");
  int kmax = 8;
  exact->add_option("input", input, "edge list (default stdin)");
  exact->add_option("--kmax", kmax, "largest color count to try")->required();

  auto* bounds = app.add_subcommand("bounds", "upper and lower bounds report");
  bounds->add_option("input", input, "edge list (default stdin)");

  auto* steiner = app.add_subcommand("steiner", "3-Steiner diameter and an extremal triple");
  steiner->add_option("input", input, "edge list (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (gen->parsed()) {
      r3_graph* raw = nullptr;
      char* labels_raw = nullptr;
      if (family == "interval") {
        if (intervals_path.empty()) throw Failure{"interval family needs --intervals"};
        check(r3_interval_graph(read_input(intervals_path).c_str(), &raw, &labels_raw), intervals_path);
      } else {
        check(r3_generate(family.c_str(), &params, &raw, &labels_raw), "gen " + family);
      }
      GraphPtr g(raw);
      CString labels(labels_raw);
      char* text = nullptr;
      check(r3_graph_format(g.get(), &text), "format");
      CString edge_list(text);
      write_output(output, edge_list.get());
      if (labels_path.empty() && !output.empty() && output != "-") labels_path = output + ".labels.json";
      if (!labels_path.empty()) write_output(labels_path, labels.get());
      return 0;
    }
    if (color->parsed()) {
      GraphPtr g = load_graph(input);
      const r3_method m = method == "theorem4"   ? R3_METHOD_THEOREM4
                          : method == "spanning" ? R3_METHOD_SPANNING
                                                 : R3_METHOD_THEOREM3;
      std::vector<uint32_t> d;
      if (dom != "auto") d = read_vertex_list(dom);
      r3_coloring* raw = nullptr;
      check(r3_color(g.get(), m, dom == "auto" ? nullptr : d.data(), d.size(), &raw), "color");
      ColoringPtr c(raw);
      char* text = nullptr;
      check(r3_coloring_format(c.get(), &text), "format");
      CString out(text);
      write_output(output, out.get());
      return 0;
    }
    if (verify->parsed()) {
      r3_coloring* raw = nullptr;
      check(r3_coloring_parse(read_input(input).c_str(), &raw), input.empty() ? "<stdin>" : input);
      ColoringPtr c(raw);
      int verdict = 0;
      char* json = nullptr;
      check(r3_verify(c.get(), &verdict, &json), "verify");
      CString out(json);
      std::cout << out.get();
      return verdict ? 0 : kFalse;
    }
    if (exact->parsed()) {
      GraphPtr g = load_graph(input);
      int value = -1;
      char* json = nullptr;
      check(r3_exact_rx3(g.get(), kmax, &value, &json), "exact");
      CString out(json);
      std::cout << out.get();
      return value >= 0 ? 0 : kFalse;
    }
    if (bounds->parsed() || steiner->parsed()) {
      GraphPtr g = load_graph(input);
      char* json = nullptr;
      check(bounds->parsed() ? r3_bounds_report(g.get(), &json) : r3_steiner_report(g.get(), &json),
            bounds->parsed() ? "bounds" : "steiner");
      CString out(json);
      std::cout << out.get();
      return 0;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kError;
  }
  return kError;
}
