#include "rainbow3/bounds.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "rainbow3/errors.hpp"

namespace rainbow3 {

namespace {

using ojson = nlohmann::ordered_json;

DominationBound from_set(const Graph& g, std::optional<DominatingSet> dom, long extra, const InnerOptions& inner) {
  DominationBound out;
  if (!dom) return out;
  out.inner_colors = inner_coloring(g, dom->vertices, 0, inner).colors;
  out.value = static_cast<long>(out.inner_colors) + extra;
  out.dom = std::move(dom);
  return out;
}

ojson bound_json(const DominationBound& b) {
  ojson j;
  j["value"] = b.value ? ojson(*b.value) : ojson(nullptr);
  if (b.dom) {
    j["dom_size"] = b.dom->size();
    j["d"] = b.inner_colors;
    j["provenance"] = to_string(b.dom->provenance);
    j["dominating_set"] = b.dom->vertices;
  }
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

}  // namespace

BoundsReport bounds_report(const Graph& g, const BoundsOptions& opts) {
  if (g.num_vertices() < 3) throw PreconditionError("bounds need at least three vertices");
  if (!is_connected(g)) throw PreconditionError("bounds need a connected graph");
  BoundsReport r;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.delta = g.min_degree();
  for (Vertex v = 0; v < r.n; ++v) {
    if (g.degree(v) == 1) ++r.n1;
    if (g.degree(v) == 2) ++r.n2;
  }
  const bool exact = r.n <= opts.exact.max_vertices;
  const DominatingSet cds = exact ? min_connected_dominating_set(g, opts.exact) : cds_heuristic(g);
  r.gamma_c = cds.size();
  r.gamma_c_provenance = cds.provenance;
  r.sdiam3 = sdiam3(g);

  r.bound_a = from_set(g,
                       exact ? min_connected_k_dominating_set(g, 3, opts.exact)
                             : connected_k_dominating_heuristic(g, 3),
                       3, opts.inner);

  // The cited 2-dominating bound also needs every outside vertex to have
  // degree at least 3; adding the low-degree vertices keeps the set
  // connected and 2-dominating.
  std::optional<DominatingSet> two =
      exact ? min_connected_k_dominating_set(g, 2, opts.exact) : connected_k_dominating_heuristic(g, 2);
  if (two) {
    for (Vertex v = 0; v < r.n; ++v)
      if (g.degree(v) < 3) two->vertices.push_back(v);
    std::sort(two->vertices.begin(), two->vertices.end());
    two->vertices.erase(std::unique(two->vertices.begin(), two->vertices.end()), two->vertices.end());
  }
  r.bound_b = from_set(g, std::move(two), 4, opts.inner);
  r.bound_b.note = "cited, not constructed";

  ThreeWayOptions tw;
  tw.exact = opts.exact;
  tw.allow_exact = exact;
  r.bound_c = from_set(g, three_way_dominating_set(g, tw), 6, opts.inner);

  const double n = static_cast<double>(r.n);
  const double delta = static_cast<double>(r.delta);
  r.corollary_bounds = {
      {"gamma_c_plus_5", static_cast<double>(r.gamma_c) + 5, r.delta >= 3, true},
      {"three_quarters_n_plus_3", 0.75 * n + 3, r.delta >= 3, true},
      {"three_fifths_n_plus_17_fifths", 0.6 * n + 3.4, r.delta >= 4, true},
      {"half_n_plus_3", 0.5 * n + 3, r.delta >= 5, true},
      {"gamma_c_plus_n1_plus_n2_plus_5", static_cast<double>(r.gamma_c + r.n1 + r.n2) + 5, true, true},
      {"trivial_n_minus_1", n - 1, true, true},
      {"asymptotic_min_degree", n * std::log(delta + 1) / (delta + 1) + 5, r.delta >= 3, false},
  };

  r.best = static_cast<long>(r.n) - 1;
  for (const DominationBound* b : {&r.bound_a, &r.bound_b, &r.bound_c})
    if (b->value) r.best = std::min(r.best, *b->value);
  for (const FormulaBound& c : r.corollary_bounds)
    if (c.applicable && c.in_best) r.best = std::min(r.best, static_cast<long>(std::floor(c.value + 1e-9)));
  return r;
}

std::string bounds_report_json(const BoundsReport& r) {
  ojson j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.delta;
  j["n1"] = r.n1;
  j["n2"] = r.n2;
  j["gamma_c"] = {{"value", r.gamma_c}, {"provenance", to_string(r.gamma_c_provenance)}};
  j["sdiam3"] = {{"value", r.sdiam3.value}, {"triple", r.sdiam3.triple}};
  j["bound_a"] = bound_json(r.bound_a);
  j["bound_b"] = bound_json(r.bound_b);
  j["bound_c"] = bound_json(r.bound_c);
  ojson cor = ojson::array();
  for (const FormulaBound& c : r.corollary_bounds) {
    ojson e;
    e["name"] = c.name;
    e["value"] = c.value;
    e["applicable"] = c.applicable;
    e["in_best"] = c.in_best;
    cor.push_back(std::move(e));
  }
  j["corollary_bounds"] = std::move(cor);
  j["best"] = r.best;
  return j.dump(2) + "\n";
}

}  // namespace rainbow3
