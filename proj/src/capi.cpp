#include "rainbow3/rainbow3.h"

#include <cstring>
#include <json.hpp>
#include <new>
#include <string>

#include "rainbow3/bounds.hpp"
#include "rainbow3/coloring.hpp"
#include "rainbow3/domination.hpp"
#include "rainbow3/errors.hpp"
#include "rainbow3/formats.hpp"
#include "rainbow3/generators.hpp"
#include "rainbow3/verify.hpp"

struct r3_graph {
  rainbow3::Graph g;
};

struct r3_coloring {
  rainbow3::ColoringFile file;
  r3_graph graph;
};

namespace {

using namespace rainbow3;

thread_local std::string last_error;

r3_status fail(r3_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
r3_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return R3_OK;
  } catch (const ParseError& e) {
    return fail(R3_PARSE, e.what());
  } catch (const InvalidInput& e) {
    return fail(R3_INVALID_ARGUMENT, e.what());
  } catch (const PreconditionError& e) {
    return fail(R3_PRECONDITION, e.what());
  } catch (const LimitExceeded& e) {
    return fail(R3_LIMIT, e.what());
  } catch (const InternalError& e) {
    return fail(R3_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(R3_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(R3_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* name) {
  if (!p) throw InvalidInput(std::string(name) + " must not be null");
}

std::size_t param(int64_t value, const char* family, const char* name) {
  if (value < 0) throw InvalidInput(std::string(family) + " needs a non-negative --" + name);
  return static_cast<std::size_t>(value);
}

LabeledGraph generate(const std::string& family, const r3_family_params& p) {
  std::string f = family;
  for (char& ch : f)
    if (ch == '_') ch = '-';
  const char* name = family.c_str();
  if (f == "complete") return {complete_graph(param(p.n, name, "n")), {}};
  if (f == "complete-bipartite") return {complete_bipartite(param(p.s, name, "s"), param(p.t, name, "t")), {}};
  if (f == "path") return {path_graph(param(p.n, name, "n")), {}};
  if (f == "cycle") return {cycle_graph(param(p.n, name, "n")), {}};
  if (f == "star") return {star_graph(param(p.n, name, "n")), {}};
  if (f == "gstar") return gstar(static_cast<int>(p.delta), static_cast<int>(p.m));
  if (f == "threshold") return threshold_example(static_cast<int>(p.t));
  if (f == "chain") return chain_example(static_cast<int>(p.k), static_cast<int>(p.t));
  if (f == "french-windmill" || f == "windmill") return french_windmill(static_cast<int>(p.t));
  if (f == "random") {
    if (p.delta < 0) throw InvalidInput("random needs a non-negative --delta");
    return {random_min_degree(param(p.n, name, "n"), static_cast<int>(p.delta), p.seed), {}};
  }
  throw InvalidInput("unknown family '" + family + "'");
}

VertexSet auto_dom(const Graph& g, r3_method method) {
  if (method == R3_METHOD_THEOREM4) {
    const ExactSearchOptions limits;
    auto d = g.num_vertices() <= limits.max_vertices ? min_connected_k_dominating_set(g, 3)
                                                     : connected_k_dominating_heuristic(g, 3);
    if (!d) throw PreconditionError("the graph has no connected 3-dominating set");
    return d->vertices;
  }
  return three_way_dominating_set(g).vertices;
}

}  // namespace

extern "C" {

const char* r3_last_error(void) { return last_error.c_str(); }

const char* r3_status_name(r3_status status) {
  switch (status) {
    case R3_OK: return "ok";
    case R3_INVALID_ARGUMENT: return "invalid argument";
    case R3_PARSE: return "parse error";
    case R3_PRECONDITION: return "precondition failed";
    case R3_LIMIT: return "limit exceeded";
    case R3_INTERNAL: return "internal error";
    case R3_IO: return "i/o error";
  }
  return "unknown status";
}

void r3_string_free(char* s) { std::free(s); }

r3_status r3_graph_from_edges(size_t n, const uint32_t* pairs, size_t m, r3_graph** out) {
  return guarded([&] {
    need(out, "out");
    if (m > 0) need(pairs, "pairs");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (size_t i = 0; i < m; ++i) edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = new r3_graph{Graph(n, edges)};
  });
}

r3_status r3_graph_parse(const char* edge_list, r3_graph** out) {
  return guarded([&] {
    need(edge_list, "edge_list");
    need(out, "out");
    *out = new r3_graph{parse_edge_list(std::string(edge_list))};
  });
}

r3_status r3_graph_format(const r3_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(format_edge_list(g->g));
  });
}

size_t r3_graph_num_vertices(const r3_graph* g) { return g ? g->g.num_vertices() : 0; }
size_t r3_graph_num_edges(const r3_graph* g) { return g ? g->g.num_edges() : 0; }
void r3_graph_free(r3_graph* g) { delete g; }

void r3_family_params_init(r3_family_params* p) {
  if (!p) return;
  p->delta = p->m = p->t = p->k = p->n = p->s = -1;
  p->seed = 0;
}

r3_status r3_generate(const char* family, const r3_family_params* params, r3_graph** out, char** labels_json) {
  return guarded([&] {
    need(family, "family");
    need(params, "params");
    need(out, "out");
    LabeledGraph lg = generate(family, *params);
    std::string labels = labels_json ? rainbow3::labels_json(lg.labels) : std::string();
    *out = new r3_graph{std::move(lg.graph)};
    if (labels_json) *labels_json = dup(labels);
  });
}

r3_status r3_interval_graph(const char* intervals, r3_graph** out, char** labels_json) {
  return guarded([&] {
    need(intervals, "intervals");
    need(out, "out");
    const auto ivs = parse_intervals(std::string(intervals));
    Graph g = interval_graph(ivs);
    std::map<std::string, Vertex> labels;
    const auto path = interval_dominating_path(ivs);
    for (std::size_t i = 0; i < path.size(); ++i) labels["p" + std::to_string(i + 1)] = path[i];
    std::string text = labels_json ? rainbow3::labels_json(labels) : std::string();
    *out = new r3_graph{std::move(g)};
    if (labels_json) *labels_json = dup(text);
  });
}

r3_status r3_color(const r3_graph* g, r3_method method, const uint32_t* dom, size_t dom_len, r3_coloring** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    ColoringResult result;
    VertexSet d;
    if (method == R3_METHOD_SPANNING) {
      result.coloring = spanning_tree_coloring(g->g);
      result.report.method = "spanning";
      result.report.total_colors = result.coloring.num_colors();
    } else if (method == R3_METHOD_THEOREM3 || method == R3_METHOD_THEOREM4) {
      if (dom) {
        d.assign(dom, dom + dom_len);
        for (Vertex v : d)
          if (v >= g->g.num_vertices()) throw InvalidInput("dominating set vertex " + std::to_string(v) + " is out of range");
      } else {
        d = auto_dom(g->g, method);
      }
      result = method == R3_METHOD_THEOREM3 ? theorem3_coloring(g->g, d) : theorem4_coloring(g->g, d);
    } else {
      throw InvalidInput("unknown coloring method");
    }
    auto* c = new r3_coloring;
    c->file = parse_coloring(format_coloring(g->g, result, d));
    c->graph.g = c->file.graph;
    *out = c;
  });
}

r3_status r3_coloring_format(const r3_coloring* c, char** out) {
  return guarded([&] {
    need(c, "coloring");
    need(out, "out");
    *out = dup(format_coloring(c->file));
  });
}

r3_status r3_coloring_parse(const char* text, r3_coloring** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    auto* c = new r3_coloring;
    try {
      c->file = parse_coloring(std::string(text));
    } catch (...) {
      delete c;
      throw;
    }
    c->graph.g = c->file.graph;
    *out = c;
  });
}

size_t r3_coloring_num_colors(const r3_coloring* c) { return c ? c->file.coloring.num_colors() : 0; }
const r3_graph* r3_coloring_graph(const r3_coloring* c) { return c ? &c->graph : nullptr; }
void r3_coloring_free(r3_coloring* c) { delete c; }

r3_status r3_verify(const r3_coloring* c, int* verdict, char** json) {
  return guarded([&] {
    need(c, "coloring");
    need(verdict, "verdict");
    const VerifyReport report = verify_coloring_file(c->file);
    *verdict = report.verdict ? 1 : 0;
    if (json) *json = dup(verify_report_json(report));
  });
}

r3_status r3_exact_rx3(const r3_graph* g, int kmax, int* value, char** json) {
  return guarded([&] {
    need(g, "graph");
    need(value, "value");
    const ExactResult r = exact_rx3(g->g, kmax);
    *value = r.value ? *r.value : -1;
    if (json) {
      nlohmann::ordered_json j;
      j["value"] = r.value ? nlohmann::ordered_json(*r.value) : nlohmann::ordered_json(nullptr);
      j["kmax"] = kmax;
      j["lower_bound"] = r.lower_bound;
      j["nodes"] = r.nodes;
      *json = dup(j.dump(2) + "\n");
    }
  });
}

r3_status r3_bounds_report(const r3_graph* g, char** json) {
  return guarded([&] {
    need(g, "graph");
    need(json, "json");
    *json = dup(bounds_report_json(bounds_report(g->g)));
  });
}

r3_status r3_steiner_report(const r3_graph* g, char** json) {
  return guarded([&] {
    need(g, "graph");
    need(json, "json");
    const SteinerDiameter s = sdiam3(g->g);
    nlohmann::ordered_json j;
    j["sdiam3"] = s.value;
    j["triple"] = s.triple;
    j["diameter"] = diameter(g->g);
    *json = dup(j.dump(2) + "\n");
  });
}

}  // extern "C"
