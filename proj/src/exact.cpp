#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "rainbow3/coloring.hpp"
#include "rainbow3/errors.hpp"
#include "rainbow3/verify.hpp"

namespace rainbow3 {

namespace {

using EdgeMask = std::uint32_t;

// For every vertex triple, the edge sets of its minimal S-trees: trees whose
// leaves all lie in S. Any rainbow S-tree contains one of these, rainbow as
// well, so a triple is served iff one of its minimal trees is rainbow.
struct MinimalTrees {
  std::vector<std::array<Vertex, 3>> triples;
  std::vector<std::vector<EdgeMask>> trees;  // by triple, sorted by size
};

MinimalTrees minimal_trees(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  MinimalTrees out;
  std::vector<std::size_t> triple_index(n * n * n, 0);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        triple_index[(a * n + b) * n + c] = out.triples.size();
        out.triples.push_back({a, b, c});
      }
  out.trees.resize(out.triples.size());

  std::vector<int> deg(n);
  std::vector<Vertex> uf(n);
  auto find = [&](Vertex x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (EdgeMask f = 1; f < (EdgeMask{1} << m); ++f) {
    std::fill(deg.begin(), deg.end(), 0);
    std::iota(uf.begin(), uf.end(), Vertex{0});
    bool acyclic = true;
    for (EdgeMask rest = f; rest; rest &= rest - 1) {
      const Edge& e = g.edge(static_cast<EdgeId>(std::countr_zero(rest)));
      ++deg[e.u];
      ++deg[e.v];
      const Vertex ru = find(e.u), rv = find(e.v);
      if (ru == rv) {
        acyclic = false;
        break;
      }
      uf[ru] = rv;
    }
    if (!acyclic) continue;
    std::vector<Vertex> verts, leaves;
    for (Vertex v = 0; v < n; ++v) {
      if (deg[v] == 0) continue;
      verts.push_back(v);
      if (deg[v] == 1) leaves.push_back(v);
    }
    // A forest with |V| - 1 edges is a tree.
    if (verts.size() != static_cast<std::size_t>(std::popcount(f)) + 1 || leaves.size() > 3) continue;
    auto add = [&](Vertex a, Vertex b, Vertex c) {
      std::array<Vertex, 3> s{a, b, c};
      std::sort(s.begin(), s.end());
      out.trees[triple_index[(s[0] * n + s[1]) * n + s[2]]].push_back(f);
    };
    if (leaves.size() == 3) {
      add(leaves[0], leaves[1], leaves[2]);
    } else {
      for (Vertex x : verts)
        if (x != leaves[0] && x != leaves[1]) add(leaves[0], leaves[1], x);
    }
  }
  for (auto& list : out.trees)
    std::stable_sort(list.begin(), list.end(),
                     [](EdgeMask a, EdgeMask b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

class Search {
 public:
  Search(const Graph& g, const MinimalTrees& trees, int k, std::size_t budget, std::size_t& nodes)
      : g_(g), k_(k), budget_(budget), nodes_(nodes), color_(g.num_edges(), 0) {
    const std::size_t m = g.num_edges();
    by_edge_.resize(m);
    usable_.resize(trees.triples.size());
    hint_.assign(trees.triples.size(), 0);
    for (std::size_t t = 0; t < trees.triples.size(); ++t) {
      EdgeMask touched = 0;
      for (EdgeMask f : trees.trees[t])
        if (std::popcount(f) <= k) {
          usable_[t].push_back(f);
          touched |= f;
        }
      for (std::size_t e = 0; e < m; ++e)
        if (touched >> e & 1) by_edge_[e].push_back(t);
    }
  }

  bool feasible_at_root() const {
    return std::none_of(usable_.begin(), usable_.end(), [](const auto& l) { return l.empty(); });
  }

  bool run(std::size_t edge, int used) {
    if (++nodes_ > budget_) throw LimitExceeded("exact search node budget exhausted");
    if (edge == color_.size()) return true;
    const int top = std::min(used + 1, k_);
    for (int c = 0; c < top; ++c) {
      color_[edge] = static_cast<std::uint8_t>(c);
      colored_ = (EdgeMask{1} << (edge + 1)) - 1;
      if (consistent(edge) && run(edge + 1, std::max(used, c + 1))) return true;
    }
    colored_ = (EdgeMask{1} << edge) - 1;
    return false;
  }

  EdgeColoring coloring() const {
    EdgeColoring out(color_.size());
    for (EdgeId e = 0; e < color_.size(); ++e) out.set(e, Color{color_[e]} + 1);
    return out;
  }

 private:
  bool distinct(EdgeMask f) const {
    std::uint32_t seen = 0;
    for (EdgeMask rest = f & colored_; rest; rest &= rest - 1) {
      const std::uint32_t bit = std::uint32_t{1} << color_[static_cast<std::size_t>(std::countr_zero(rest))];
      if (seen & bit) return false;
      seen |= bit;
    }
    return true;
  }

  bool consistent(std::size_t edge) {
    const EdgeMask bit = EdgeMask{1} << edge;
    for (std::size_t t : by_edge_[edge]) {
      const auto& list = usable_[t];
      const EdgeMask h = list[hint_[t]];
      if (!(h & bit) || distinct(h)) continue;
      bool found = false;
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (distinct(list[i])) {
          hint_[t] = i;
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  const Graph& g_;
  int k_;
  std::size_t budget_;
  std::size_t& nodes_;
  std::vector<std::uint8_t> color_;
  EdgeMask colored_ = 0;
  std::vector<std::vector<std::size_t>> by_edge_;
  std::vector<std::vector<EdgeMask>> usable_;
  std::vector<std::size_t> hint_;
};

void check_limits(const Graph& g, int kmax, const ExactOptions& opts) {
  if (g.num_vertices() < 3) throw PreconditionError("exact rx3 needs at least three vertices");
  if (!is_connected(g)) throw PreconditionError("exact rx3 needs a connected graph");
  const std::size_t cap = std::min<std::size_t>(opts.max_edges, 20);
  if (g.num_edges() > cap) {
    throw LimitExceeded("graph has " + std::to_string(g.num_edges()) + " edges, exact limit is " +
                        std::to_string(cap));
  }
  if (kmax > opts.max_kmax) {
    throw LimitExceeded("kmax " + std::to_string(kmax) + " exceeds limit " + std::to_string(opts.max_kmax));
  }
}

// Searches for a 3-rainbow coloring with at most k colors.
std::optional<EdgeColoring> search_with(const Graph& g, const MinimalTrees& trees, int k, const ExactOptions& opts,
                                        std::size_t& nodes) {
  if (k < 1) return std::nullopt;
  Search s(g, trees, k, opts.node_budget, nodes);
  if (!s.feasible_at_root() || !s.run(0, 0)) return std::nullopt;
  EdgeColoring c = s.coloring();
  if (!is_3_rainbow(g, c).verdict) throw InternalError("exact search produced a coloring that fails verification");
  return c;
}

}  // namespace

ExactResult exact_rx3(const Graph& g, int kmax, const ExactOptions& opts) {
  check_limits(g, kmax, opts);
  ExactResult result;
  result.lower_bound = std::max(2, sdiam3(g).value);
  const int trivial = static_cast<int>(g.num_vertices()) - 1;
  if (result.lower_bound > kmax) return result;
  const MinimalTrees trees = minimal_trees(g);
  for (int k = result.lower_bound; k <= kmax; ++k) {
    if (k >= trivial) {
      result.value = trivial;
      result.coloring = spanning_tree_coloring(g);
      return result;
    }
    if (auto c = search_with(g, trees, k, opts, result.nodes)) {
      result.value = k;
      result.coloring = std::move(*c);
      return result;
    }
  }
  return result;
}

bool no_rainbow_coloring_with(const Graph& g, int colors, const ExactOptions& opts) {
  check_limits(g, colors, opts);
  if (colors >= static_cast<int>(g.num_vertices()) - 1) return false;
  std::size_t nodes = 0;
  return !search_with(g, minimal_trees(g), colors, opts, nodes).has_value();
}

}  // namespace rainbow3
