#include "rainbow3/coloring.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <tuple>

#include "rainbow3/domination.hpp"
#include "rainbow3/errors.hpp"
#include "rainbow3/verify.hpp"

namespace rainbow3 {

namespace {

VertexSet sorted_set(std::span<const Vertex> d) {
  VertexSet out(d.begin(), d.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeId must_edge(const Graph& g, Vertex u, Vertex v) {
  auto e = g.edge_id(u, v);
  if (!e) throw InternalError("expected an edge between " + std::to_string(u) + " and " + std::to_string(v));
  return *e;
}

// Copies the inner coloring onto the G[D] edges of c.
std::size_t apply_inner(const Graph& g, std::span<const Vertex> d, Color offset, const InnerOptions& opts,
                        EdgeColoring& c, bool& exact) {
  InnerColoring inner = inner_coloring(g, d, offset, opts);
  for (EdgeId e = 0; e < inner.subgraph.num_edges(); ++e) {
    const Edge& se = inner.subgraph.edge(e);
    c.set(must_edge(g, d[se.u], d[se.v]), inner.coloring[e]);
  }
  exact = inner.exact;
  return inner.colors;
}

// (f_v, e_v) colors of the periodic step for a non-root vertex.
std::pair<Color, Color> periodic_colors(SubtreeKind kind, int height) {
  static constexpr std::array<std::pair<Color, Color>, 3> type_two{{{4, 2}, {5, 3}, {6, 1}}};
  static constexpr std::array<std::pair<Color, Color>, 3> type_one{{{6, 2}, {4, 1}, {5, 3}}};
  const auto idx = static_cast<std::size_t>(height % 3);
  return kind == SubtreeKind::TypeII ? type_two[idx] : type_one[idx];
}

Vertex foot(const Graph& g, const Stage1State& st, Vertex v) {
  const Edge& e = g.edge(*st.leg[v]);
  return e.u == v ? e.v : e.u;
}

SafetyCertificate make_certificate(Vertex v, std::vector<Vertex> p1, std::vector<Vertex> p2,
                                   std::vector<Vertex> p3) {
  SafetyCertificate cert;
  cert.vertex = v;
  cert.paths = {std::move(p1), std::move(p2), std::move(p3)};
  return cert;
}

std::vector<Vertex> leg_path(const Graph& g, const Stage1State& st, std::initializer_list<Vertex> prefix) {
  std::vector<Vertex> path(prefix);
  path.push_back(foot(g, st, path.back()));
  return path;
}

}  // namespace

EdgeColoring spanning_tree_coloring(const Graph& h) {
  EdgeColoring c(h.num_edges());
  if (h.num_vertices() == 0) return c;
  if (!is_connected(h)) throw PreconditionError("spanning-tree coloring needs a connected graph");
  std::vector<char> seen(h.num_vertices(), 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  Color next = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    auto nbrs = h.neighbors(v);
    auto eids = h.incident_edges(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (seen[nbrs[i]]) continue;
      seen[nbrs[i]] = 1;
      c.set(eids[i], next++);
      queue.push_back(nbrs[i]);
    }
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (c[e] == kUncolored) c.set(e, 1);
  return c;
}

InnerColoring inner_coloring(const Graph& g, std::span<const Vertex> d, Color offset, const InnerOptions& opts) {
  if (d.empty()) throw InvalidInput("inner coloring needs a nonempty vertex set");
  if (!induces_connected(g, d)) throw PreconditionError("the set does not induce a connected subgraph");
  InnerColoring out;
  out.subgraph = g.induced(d);
  const std::size_t k = out.subgraph.num_vertices();
  EdgeColoring base;
  if (k <= 2) {
    base = spanning_tree_coloring(out.subgraph);
    out.exact = true;
  } else if (out.subgraph.num_edges() <= opts.max_edges) {
    ExactOptions eo;
    eo.max_edges = opts.max_edges;
    eo.node_budget = opts.node_budget;
    try {
      ExactResult r = exact_rx3(out.subgraph, std::min<int>(eo.max_kmax, static_cast<int>(k) - 1), eo);
      if (r.value) {
        base = std::move(r.coloring);
        out.exact = true;
      }
    } catch (const LimitExceeded&) {
    }
  }
  if (!out.exact) base = spanning_tree_coloring(out.subgraph);
  out.coloring = EdgeColoring(base.size());
  for (EdgeId e = 0; e < base.size(); ++e) out.coloring.set(e, base[e] + offset);
  out.colors = out.coloring.num_colors();
  return out;
}

ColoringResult theorem4_coloring(const Graph& g, std::span<const Vertex> d, const InnerOptions& inner) {
  const VertexSet dv = sorted_set(d);
  if (!check_domination(g, dv, DominationSpec::connected_k_dominating(3)))
    throw PreconditionError("D is not a connected 3-dominating set");
  const std::vector<char> in_d = membership(g, dv);
  ColoringResult out;
  out.coloring = EdgeColoring(g.num_edges());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_d[v]) continue;
    SafetyCertificate cert{v, {}};
    auto nbrs = g.neighbors(v);
    auto eids = g.incident_edges(v);
    Color next = 1;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!in_d[nbrs[i]]) continue;
      if (next <= 3) cert.paths[next - 1] = {v, nbrs[i]};
      out.coloring.set(eids[i], std::min<Color>(next, 3));
      ++next;
    }
    out.certificates.push_back(std::move(cert));
  }
  out.report.method = "theorem4";
  out.report.dom_size = dv.size();
  out.report.inner_colors = apply_inner(g, dv, 3, inner, out.coloring, out.report.inner_exact);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (out.coloring[e] == kUncolored) out.coloring.set(e, 1);
  out.report.total_colors = out.coloring.num_colors();
  return out;
}

std::vector<Vertex> order_dangerous(std::span<const Vertex> a, const BfsTree& tree) {
  std::vector<Vertex> out(a.begin(), a.end());
  std::sort(out.begin(), out.end(), [&](Vertex x, Vertex y) {
    return std::make_tuple(-static_cast<long>(tree.branch[x]), tree.height[x], tree.position[x]) <
           std::make_tuple(-static_cast<long>(tree.branch[y]), tree.height[y], tree.position[y]);
  });
  return out;
}

void stage1_periodic(const Graph& g, const std::vector<char>& in_d, const BfsTree& tree, EdgeColoring& c,
                     Stage1State& st) {
  if (tree.order.size() < 3 || tree.first_level.size() < 2)
    throw PreconditionError("periodic coloring needs a root with two neighbors in its component");
  for (Vertex v : tree.order) {
    auto nbrs = g.neighbors(v);
    auto eids = g.incident_edges(v);
    for (std::size_t i = 0; i < nbrs.size() && !st.leg[v]; ++i)
      if (in_d[nbrs[i]]) st.leg[v] = eids[i];
    if (!st.leg[v]) throw PreconditionError("vertex " + std::to_string(v) + " has no neighbor in D");
    Color e_color = 2;
    if (v != tree.root) {
      auto [f, e] = periodic_colors(tree.kind[v], tree.height[v]);
      c.set(must_edge(g, v, *tree.parent[v]), f);
      e_color = e;
    }
    c.set(*st.leg[v], e_color);
    st.initial_leg_color[v] = e_color;
  }

  std::vector<Vertex> a;
  for (Vertex v : tree.order) {
    if (v == tree.root) {
      const Vertex v1 = tree.first_level.front();
      const Vertex vk = tree.first_level.back();
      st.certificate[v] =
          SafetyCertificate{v, {leg_path(g, st, {v}), leg_path(g, st, {v, v1}), leg_path(g, st, {v, vk})}};
      st.flagged[v] = 1;
      continue;
    }
    const Vertex p = *tree.parent[v];
    if (!tree.is_leaf(v)) {
      const Vertex child = tree.children[v].front();
      st.certificate[v] =
          SafetyCertificate{v, {leg_path(g, st, {v}), leg_path(g, st, {v, p}), leg_path(g, st, {v, child})}};
      st.flagged[v] = 1;
      continue;
    }
    // A leaf with a spare leg takes the smallest color missing from its two
    // existing paths on that leg.
    std::optional<std::size_t> spare;
    auto nbrs = g.neighbors(v);
    auto eids = g.incident_edges(v);
    for (std::size_t i = 0; i < nbrs.size() && !spare; ++i)
      if (in_d[nbrs[i]] && c[eids[i]] == kUncolored) spare = i;
    if (!spare) {
      a.push_back(v);
      continue;
    }
    const std::array<Color, 3> used{c[*st.leg[v]], c[must_edge(g, v, p)], c[*st.leg[p]]};
    Color pick = 1;
    while (std::find(used.begin(), used.end(), pick) != used.end()) ++pick;
    c.set(eids[*spare], pick);
    st.certificate[v] =
        SafetyCertificate{v, {leg_path(g, st, {v}), {v, nbrs[*spare]}, leg_path(g, st, {v, p})}};
    st.flagged[v] = 1;
  }
  for (Vertex v : order_dangerous(a, tree)) st.dangerous.push_back(v);
}

namespace {

struct Row {
  int case_id, mod, delta;
  bool rec;
  Color edge_color, leg_recolor;
};

// (case, h(w) mod 3, h(v) - h(w), e_v recolored) -> color of wv and the new
// color of e_w (0 = keep).
constexpr Row kStage2Table[] = {
    {1, 0, 0, false, 5, 0},  {1, 0, 1, false, 5, 0},  {1, 1, 0, false, 6, 0},  {1, 1, 1, false, 4, 6},
    {1, 2, 0, false, 2, 4},  {1, 2, 1, false, 5, 0},

    {2, 0, -1, false, 5, 0}, {2, 0, -1, true, 5, 0},  {2, 0, 0, false, 6, 5},  {2, 0, 0, true, 6, 0},
    {2, 0, 1, false, 6, 0},  {2, 1, -1, false, 6, 0}, {2, 1, -1, true, 6, 0},  {2, 1, 0, false, 4, 6},
    {2, 1, 0, true, 4, 0},   {2, 1, 1, false, 4, 0},  {2, 2, -1, false, 4, 0}, {2, 2, -1, true, 4, 0},
    {2, 2, 0, false, 5, 4},  {2, 2, 0, true, 5, 0},   {2, 2, 1, false, 5, 0},

    {3, 0, -1, false, 4, 0}, {3, 0, -1, true, 4, 0},  {3, 0, 0, false, 5, 4},  {3, 0, 0, true, 5, 0},
    {3, 0, 1, false, 5, 0},  {3, 1, -1, false, 5, 0}, {3, 1, -1, true, 5, 0},  {3, 1, 0, false, 6, 5},
    {3, 1, 0, true, 6, 0},   {3, 1, 1, false, 6, 0},  {3, 2, -1, false, 6, 0}, {3, 2, -1, true, 6, 0},
    {3, 2, 0, false, 4, 6},  {3, 2, 0, true, 4, 0},   {3, 2, 1, false, 4, 0},

    {4, 0, -1, false, 5, 0}, {4, 0, -1, true, 5, 0},  {4, 0, 0, false, 5, 0},  {4, 0, 0, true, 4, 0},
    {4, 1, -1, false, 5, 0}, {4, 1, -1, true, 6, 0},  {4, 1, 0, false, 6, 0},  {4, 1, 0, true, 3, 0},
    {4, 2, -1, false, 4, 6}, {4, 2, -1, true, 4, 0},  {4, 2, 0, false, 3, 6},  {4, 2, 0, true, 6, 0},
};

const std::map<Stage2Key, Stage2Action>& stage2_table() {
  static const std::map<Stage2Key, Stage2Action> table = [] {
    std::map<Stage2Key, Stage2Action> t;
    for (const Row& r : kStage2Table) t[{r.case_id, r.mod, r.delta, r.rec}] = {r.edge_color, r.leg_recolor};
    return t;
  }();
  return table;
}

std::string describe(const Stage2Key& k) {
  return "case " + std::to_string(k.case_id) + ", height mod 3 = " + std::to_string(k.height_mod3) +
         ", height difference " + std::to_string(k.delta) + ", partner leg " +
         (k.partner_recolored ? "recolored" : "original");
}

// Certificate for x after x and its partner y were joined: a single leg,
// a route up the tree (through the parent or grandparent) and a route
// through y (directly or through y's parent). Among the routes that verify,
// one whose color triple is in the class table is preferred.
std::optional<SafetyCertificate> join_certificate(const Graph& g, const EdgeColoring& c,
                                                  const std::vector<char>& in_d, const BfsTree& tree,
                                                  const Stage1State& st, Vertex x, Vertex y) {
  std::vector<std::vector<Vertex>> up, across;
  const Vertex p = *tree.parent[x];
  up.push_back(leg_path(g, st, {x, p}));
  if (tree.parent[p]) up.push_back(leg_path(g, st, {x, p, *tree.parent[p]}));
  across.push_back(leg_path(g, st, {x, y}));
  if (tree.parent[y] && *tree.parent[y] != x) across.push_back(leg_path(g, st, {x, y, *tree.parent[y]}));

  std::optional<SafetyCertificate> fallback;
  for (const auto& a : up) {
    for (const auto& b : across) {
      SafetyCertificate cert{x, {leg_path(g, st, {x}), a, b}};
      if (!verify_certificate(g, c, in_d, cert)) continue;
      auto colors = certificate_colors(g, c, cert);
      if (colors && class_membership(*colors)) return cert;
      if (!fallback) fallback = cert;
    }
  }
  return fallback;
}

void color_small_component(const Graph& g, const std::vector<char>& in_d, const VertexSet& comp, EdgeColoring& c,
                           Stage1State& st) {
  auto legs_of = [&](Vertex v) {
    std::vector<std::pair<Vertex, EdgeId>> out;
    auto nbrs = g.neighbors(v);
    auto eids = g.incident_edges(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      if (in_d[nbrs[i]]) out.emplace_back(nbrs[i], eids[i]);
    return out;
  };
  if (comp.size() == 1) {
    const Vertex v = comp[0];
    auto legs = legs_of(v);
    if (legs.size() < 3) throw PreconditionError("vertex " + std::to_string(v) + " has fewer than three legs");
    for (std::size_t i = 0; i < legs.size(); ++i) c.set(legs[i].second, static_cast<Color>(std::min<std::size_t>(i + 1, 3)));
    st.leg[v] = legs[0].second;
    st.initial_leg_color[v] = 1;
    st.certificate[v] = make_certificate(v, {v, legs[0].first}, {v, legs[1].first}, {v, legs[2].first});
    st.flagged[v] = 1;
    return;
  }
  const Vertex u = comp[0], v = comp[1];
  auto lu = legs_of(u);
  auto lv = legs_of(v);
  if (lu.size() < 2 || lv.size() < 2) throw PreconditionError("isolated edge endpoint with fewer than two legs");
  for (std::size_t i = 0; i < lu.size(); ++i) c.set(lu[i].second, i == 0 ? 1 : 2);
  for (std::size_t i = 0; i < lv.size(); ++i) c.set(lv[i].second, i == 0 ? 2 : 3);
  c.set(must_edge(g, u, v), 4);
  st.leg[u] = lu[0].second;
  st.initial_leg_color[u] = 1;
  st.leg[v] = lv[0].second;
  st.initial_leg_color[v] = 2;
  st.certificate[u] = make_certificate(u, {u, lu[0].first}, {u, lu[1].first}, {u, v, lv[1].first});
  st.certificate[v] = make_certificate(v, {v, lv[0].first}, {v, lv[1].first}, {v, u, lu[0].first});
  st.flagged[u] = st.flagged[v] = 1;
}

void stage2(const Graph& g, const std::vector<char>& in_d, const BfsTree& tree, std::span<const Vertex> a,
            EdgeColoring& c, Stage1State& st, const Theorem3Options& opts, ColoringReport& report) {
  for (Vertex w : a) {
    if (st.flagged[w]) continue;
    std::optional<Vertex> best_one, best_two;
    auto better = [&](const std::optional<Vertex>& cur, Vertex cand) {
      return !cur || std::make_pair(tree.height[cand], cand) < std::make_pair(tree.height[*cur], *cur);
    };
    auto nbrs = g.neighbors(w);
    auto eids = g.incident_edges(w);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex u = nbrs[i];
      if (!tree.contains(u) || c[eids[i]] != kUncolored) continue;
      if (tree.kind[u] == SubtreeKind::TypeI && better(best_one, u)) best_one = u;
      if (tree.kind[u] == SubtreeKind::TypeII && better(best_two, u)) best_two = u;
    }
    if (!best_one && !best_two)
      throw InternalError("dangerous leaf " + std::to_string(w) + " has no uncolored edge inside its component");
    const bool w_type_two = tree.kind[w] == SubtreeKind::TypeII;
    const Vertex v = best_one ? *best_one : *best_two;
    Stage2Key key;
    key.case_id = w_type_two ? (best_one ? 1 : 2) : (best_one ? 3 : 4);
    key.height_mod3 = tree.height[w] % 3;
    key.delta = tree.height[v] - tree.height[w];
    key.partner_recolored = st.recolored(v, c);
    auto action = stage2_action(key);
    if (!action)
      throw InternalError("no rule for leaf " + std::to_string(w) + " joined to " + std::to_string(v) + " (" +
                          describe(key) + ")");
    c.set(must_edge(g, w, v), action->edge_color);
    if (action->leg_recolor != kUncolored) c.set(*st.leg[w], action->leg_recolor);
    // A first-level leaf that recolors its leg reroutes the root's second
    // path through the partner.
    if (key.case_id == 3 && key.height_mod3 == 1 && key.delta == 0 && !key.partner_recolored &&
        tree.height[w] == 1) {
      st.certificate[tree.root]->paths[1] = leg_path(g, st, {tree.root, v});
    }

    auto cert_w = join_certificate(g, c, in_d, tree, st, w, v);
    if (!cert_w) throw InternalError("leaf " + std::to_string(w) + " is not safe after " + describe(key));
    st.certificate[w] = std::move(cert_w);
    st.flagged[w] = 1;
    if (!st.flagged[v]) {
      auto cert_v = join_certificate(g, c, in_d, tree, st, v, w);
      if (!cert_v) throw InternalError("partner " + std::to_string(v) + " is not safe after " + describe(key));
      st.certificate[v] = std::move(cert_v);
      st.flagged[v] = 1;
    }
    ++report.stage2_steps;
    ++report.case_counts[static_cast<std::size_t>(key.case_id - 1)];
    if (opts.test_mode) {
      for (Vertex x : tree.order)
        if (st.flagged[x] && !verify_certificate(g, c, in_d, *st.certificate[x])) ++report.safety_violations;
    }
  }
}

}  // namespace

std::optional<Stage2Action> stage2_action(const Stage2Key& key) {
  const auto& table = stage2_table();
  auto it = table.find(key);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::vector<Stage2Key> stage2_keys() {
  std::vector<Stage2Key> out;
  for (const auto& [k, a] : stage2_table()) out.push_back(k);
  return out;
}

ColoringResult theorem3_coloring(const Graph& g, std::span<const Vertex> d, const Theorem3Options& opts) {
  const VertexSet dv = sorted_set(d);
  if (!check_domination(g, dv, DominationSpec::connected_k_way(3)))
    throw PreconditionError("D is not a connected three-way dominating set");
  const std::vector<char> in_d = membership(g, dv);
  ColoringResult out;
  out.report.method = "theorem3";
  out.report.dom_size = dv.size();
  EdgeColoring& c = out.coloring;
  c = EdgeColoring(g.num_edges());
  Stage1State st(g.num_vertices());

  for (const VertexSet& comp : components_minus(g, dv)) {
    if (comp.size() <= 2) {
      color_small_component(g, in_d, comp, c, st);
      continue;
    }
    Vertex root = comp.front();
    for (Vertex v : comp) {
      const auto inside = std::count_if(g.neighbors(v).begin(), g.neighbors(v).end(),
                                        [&](Vertex u) { return std::binary_search(comp.begin(), comp.end(), u); });
      if (inside >= 2) {
        root = v;
        break;
      }
    }
    const BfsTree tree = bfs_tree(g, comp, root);
    const std::size_t first = st.dangerous.size();
    stage1_periodic(g, in_d, tree, c, st);
    const std::vector<Vertex> a(st.dangerous.begin() + static_cast<std::ptrdiff_t>(first), st.dangerous.end());
    stage2(g, in_d, tree, a, c, st, opts, out.report);
  }

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (c[e] == kUncolored && !(in_d[ed.u] && in_d[ed.v])) c.set(e, 1);
  }
  out.report.inner_colors = apply_inner(g, dv, 6, opts.inner, c, out.report.inner_exact);
  out.report.total_colors = c.num_colors();

  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_d[v]) continue;
    if (!st.certificate[v]) throw InternalError("vertex " + std::to_string(v) + " ended without a certificate");
    out.certificates.push_back(*st.certificate[v]);
  }
  return out;
}

}  // namespace rainbow3
