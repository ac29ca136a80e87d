#include "rainbow3/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>

#include "rainbow3/errors.hpp"

namespace rainbow3 {

std::string to_string(const DominationSpec& spec) {
  const std::string k = "(" + std::to_string(spec.k) + ")";
  switch (spec.kind) {
    case DominationKind::Plain: return "Plain";
    case DominationKind::Connected: return "Connected";
    case DominationKind::KWay: return "KWay" + k;
    case DominationKind::KDominating: return "KDominating" + k;
    case DominationKind::ConnectedKWay: return "ConnectedKWay" + k;
    case DominationKind::ConnectedKDominating: return "ConnectedKDominating" + k;
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Exact: return "exact";
    case Provenance::Heuristic: return "heuristic";
    case Provenance::UserSupplied: return "user";
  }
  return "?";
}

std::vector<Vertex> feet(const Graph& g, const std::vector<char>& in_d, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v))
    if (in_d[w]) out.push_back(w);
  return out;
}

bool check_domination(const Graph& g, std::span<const Vertex> d, const DominationSpec& spec) {
  if (d.empty()) return false;
  const std::vector<char> in_d = membership(g, d);
  const bool needs_connected = spec.kind == DominationKind::Connected ||
                               spec.kind == DominationKind::ConnectedKWay ||
                               spec.kind == DominationKind::ConnectedKDominating;
  const bool k_way = spec.kind == DominationKind::KWay || spec.kind == DominationKind::ConnectedKWay;
  const bool k_dom = spec.kind == DominationKind::KDominating || spec.kind == DominationKind::ConnectedKDominating;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_d[v]) continue;
    std::size_t inside = 0;
    for (Vertex w : g.neighbors(v)) inside += in_d[w] ? 1 : 0;
    if (inside == 0) return false;
    if (k_way && g.degree(v) < static_cast<std::size_t>(spec.k)) return false;
    if (k_dom && inside < static_cast<std::size_t>(spec.k)) return false;
  }
  if (needs_connected) {
    VertexSet sorted(d.begin(), d.end());
    std::sort(sorted.begin(), sorted.end());
    if (!induces_connected(g, sorted)) return false;
  }
  return true;
}

DominatingSet make_dominating_set(const Graph& g, VertexSet d, const DominationSpec& spec, Provenance provenance) {
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  if (!check_domination(g, d, spec)) {
    throw PreconditionError("vertex set is not a " + to_string(spec) + " dominating set");
  }
  return DominatingSet{std::move(d), spec, provenance};
}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

struct BitGraph {
  std::size_t n = 0;
  std::vector<Mask> open;
  std::vector<Mask> closed;
  Mask all = 0;

  explicit BitGraph(const Graph& g) : n(g.num_vertices()), open(n, 0), closed(n, 0) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) open[v] |= bit(w);
      closed[v] = open[v] | bit(v);
      all |= bit(v);
    }
  }

  bool connected(Mask s) const {
    if (s == 0) return false;
    Mask seen = s & (~s + 1);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= open[static_cast<std::size_t>(std::countr_zero(f))];
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == s;
  }
};

VertexSet to_set(Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

// Lexicographic enumeration of subsets by increasing size. `viable` prunes a
// partial choice given the first undecided id; `accept` judges a complete
// choice. Returns the first accepted subset.
std::optional<Mask> first_subset(std::size_t n, const std::function<bool(Mask, std::size_t)>& viable,
                                 const std::function<bool(Mask)>& accept) {
  std::function<std::optional<Mask>(std::size_t, std::size_t, Mask)> rec =
      [&](std::size_t start, std::size_t remaining, Mask chosen) -> std::optional<Mask> {
    if (remaining == 0) {
      if (viable(chosen, n) && accept(chosen)) return chosen;
      return std::nullopt;
    }
    if (!viable(chosen, start)) return std::nullopt;
    for (std::size_t v = start; v + remaining <= n; ++v) {
      if (auto hit = rec(v + 1, remaining - 1, chosen | bit(static_cast<Vertex>(v)))) return hit;
    }
    return std::nullopt;
  };
  for (std::size_t size = 1; size <= n; ++size) {
    if (auto hit = rec(0, size, 0)) return hit;
  }
  return std::nullopt;
}

void check_exact_limits(const Graph& g, const ExactSearchOptions& opts) {
  const std::size_t limit = std::min<std::size_t>(opts.max_vertices, 64);
  if (g.num_vertices() > limit) {
    throw LimitExceeded("exact dominating-set search limited to " + std::to_string(limit) + " vertices, graph has " +
                        std::to_string(g.num_vertices()));
  }
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
}

}  // namespace

DominatingSet min_connected_dominating_set(const Graph& g, const ExactSearchOptions& opts) {
  check_exact_limits(g, opts);
  const BitGraph bg(g);
  const std::size_t n = bg.n;
  // cover_from[i]: everything that vertices i..n-1 could still dominate.
  std::vector<Mask> cover_from(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) cover_from[i] = cover_from[i + 1] | bg.closed[i];

  auto covered = [&](Mask s) {
    Mask c = 0;
    for (; s; s &= s - 1) c |= bg.closed[static_cast<std::size_t>(std::countr_zero(s))];
    return c;
  };
  auto viable = [&](Mask chosen, std::size_t start) { return (covered(chosen) | cover_from[start]) == bg.all; };
  auto accept = [&](Mask chosen) { return bg.connected(chosen); };

  auto hit = first_subset(n, viable, accept);
  if (!hit) throw InternalError("no connected dominating set in a connected graph");
  return DominatingSet{to_set(*hit), DominationSpec::connected(), Provenance::Exact};
}

std::optional<DominatingSet> min_connected_k_dominating_set(const Graph& g, int k, const ExactSearchOptions& opts) {
  check_exact_limits(g, opts);
  if (k < 1) throw InvalidInput("k must be positive");
  const BitGraph bg(g);
  const std::size_t n = bg.n;
  std::vector<Mask> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] | bit(static_cast<Vertex>(i));

  // Every vertex already decided to stay outside must still be able to reach
  // k neighbors among the chosen and undecided vertices.
  auto viable = [&](Mask chosen, std::size_t start) {
    const Mask possible = chosen | suffix[start];
    for (std::size_t u = 0; u < start; ++u) {
      if (chosen & bit(static_cast<Vertex>(u))) continue;
      if (std::popcount(bg.open[u] & possible) < k) return false;
    }
    return true;
  };
  auto accept = [&](Mask chosen) { return bg.connected(chosen); };

  auto hit = first_subset(n, viable, accept);
  if (!hit) return std::nullopt;
  return DominatingSet{to_set(*hit), DominationSpec::connected_k_dominating(k), Provenance::Exact};
}

DominatingSet cds_heuristic(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  Vertex root = 0;
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(root)) root = v;

  std::vector<char> in_tree(n, 0), expanded(n, 0);
  std::size_t tree_size = 1;
  in_tree[root] = 1;
  auto expand = [&](Vertex v) {
    expanded[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (!in_tree[w]) {
        in_tree[w] = 1;
        ++tree_size;
      }
    }
  };
  expand(root);
  while (tree_size < n) {
    Vertex best = 0;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_tree[v] || expanded[v]) continue;
      std::size_t gain = 0;
      for (Vertex w : g.neighbors(v)) gain += in_tree[w] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best_gain == 0) throw InternalError("greedy spanning tree stalled");
    expand(best);
  }
  VertexSet d;
  for (Vertex v = 0; v < n; ++v)
    if (expanded[v]) d.push_back(v);
  if (!check_domination(g, d, DominationSpec::connected())) {
    throw InternalError("greedy spanning tree produced an invalid connected dominating set");
  }
  return DominatingSet{std::move(d), DominationSpec::connected(), Provenance::Heuristic};
}

std::optional<DominatingSet> connected_k_dominating_heuristic(const Graph& g, int k) {
  const auto spec = DominationSpec::connected_k_dominating(k);
  VertexSet d(g.num_vertices());
  for (Vertex v = 0; v < d.size(); ++v) d[v] = v;
  if (!check_domination(g, d, spec)) return std::nullopt;
  for (std::size_t i = d.size(); i-- > 0;) {
    VertexSet trial;
    trial.reserve(d.size() - 1);
    for (Vertex v : d)
      if (v != static_cast<Vertex>(i)) trial.push_back(v);
    if (check_domination(g, trial, spec)) d = std::move(trial);
  }
  return DominatingSet{std::move(d), spec, Provenance::Heuristic};
}

DominatingSet three_way_dominating_set(const Graph& g, const ThreeWayOptions& opts) {
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  const std::size_t n = g.num_vertices();
  DominatingSet base = (opts.allow_exact && n <= std::min<std::size_t>(opts.exact.max_vertices, 64))
                           ? min_connected_dominating_set(g, opts.exact)
                           : cds_heuristic(g);
  std::vector<char> in_d = membership(g, base.vertices);
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < 3) in_d[v] = 1;

  auto current = [&] {
    VertexSet d;
    for (Vertex v = 0; v < n; ++v)
      if (in_d[v]) d.push_back(v);
    return d;
  };
  VertexSet d = current();
  while (!induces_connected(g, d)) {
    // Grow from the part of G[D] holding the smallest vertex to the nearest
    // vertex of D outside it, adding the path interior.
    std::vector<char> part(n, 0);
    std::vector<Vertex> stack{d.front()};
    part[d.front()] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (in_d[w] && !part[w]) {
          part[w] = 1;
          stack.push_back(w);
        }
    }
    std::vector<std::int64_t> prev(n, -2);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
      if (part[v]) {
        prev[v] = -1;
        queue.push_back(v);
      }
    std::optional<Vertex> target;
    for (std::size_t head = 0; head < queue.size() && !target; ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (prev[w] != -2) continue;
        prev[w] = queue[head];
        if (in_d[w]) {
          target = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (!target) throw InternalError("cannot reconnect three-way dominating set");
    for (std::int64_t v = prev[*target]; v >= 0 && !part[static_cast<std::size_t>(v)]; v = prev[static_cast<std::size_t>(v)]) {
      in_d[static_cast<std::size_t>(v)] = 1;
    }
    d = current();
  }
  const auto spec = DominationSpec::connected_k_way(3);
  if (!check_domination(g, d, spec)) throw InternalError("three-way dominating set failed its own check");
  return DominatingSet{std::move(d), spec, base.provenance};
}

Graph interval_graph(std::span<const Interval> intervals) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].lo > intervals[i].hi) {
      throw InvalidInput("interval " + std::to_string(i) + " has lo > hi");
    }
    for (std::size_t j = i + 1; j < intervals.size(); ++j) {
      if (std::max(intervals[i].lo, intervals[j].lo) <= std::min(intervals[i].hi, intervals[j].hi)) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(intervals.size(), edges);
}

std::vector<Vertex> interval_dominating_path(std::span<const Interval> intervals) {
  if (intervals.empty()) throw InvalidInput("no intervals");
  for (std::size_t i = 0; i < intervals.size(); ++i)
    if (intervals[i].lo > intervals[i].hi) throw InvalidInput("interval " + std::to_string(i) + " has lo > hi");

  double min_right = std::numeric_limits<double>::infinity();
  double max_left = -std::numeric_limits<double>::infinity();
  for (const Interval& iv : intervals) {
    min_right = std::min(min_right, iv.hi);
    max_left = std::max(max_left, iv.lo);
  }
  // Among intervals starting at or before `reach`, the one ending furthest
  // right (smallest index on ties).
  auto furthest = [&](double reach) {
    std::optional<Vertex> best;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      if (intervals[i].lo > reach) continue;
      if (!best || intervals[i].hi > intervals[*best].hi) best = static_cast<Vertex>(i);
    }
    return *best;
  };
  std::vector<Vertex> path{furthest(min_right)};
  double right = intervals[path.back()].hi;
  while (right < max_left) {
    const Vertex next = furthest(right);
    if (intervals[next].hi <= right) throw PreconditionError("interval graph is disconnected");
    path.push_back(next);
    right = intervals[next].hi;
  }
  return path;
}

}  // namespace rainbow3
