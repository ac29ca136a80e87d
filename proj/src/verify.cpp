#include "rainbow3/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "rainbow3/errors.hpp"

namespace rainbow3 {

namespace {

using Mask = std::uint64_t;

// Dense color indices 0..K-1 for the colors of a total coloring.
struct ColorIndex {
  std::vector<std::uint8_t> of_edge;
  std::size_t count = 0;
};

ColorIndex index_colors(const Graph& g, const EdgeColoring& c, std::size_t limit) {
  if (c.size() != g.num_edges()) {
    throw InvalidInput("coloring has " + std::to_string(c.size()) + " entries for a graph with " +
                       std::to_string(g.num_edges()) + " edges");
  }
  if (!c.is_total()) throw InvalidInput("coloring leaves an edge uncolored");
  const std::vector<Color> palette = c.palette();
  if (palette.size() > limit) {
    throw LimitExceeded("coloring uses " + std::to_string(palette.size()) + " colors, limit is " +
                        std::to_string(limit));
  }
  ColorIndex idx;
  idx.count = palette.size();
  idx.of_edge.resize(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    idx.of_edge[e] = static_cast<std::uint8_t>(std::lower_bound(palette.begin(), palette.end(), c[e]) - palette.begin());
  }
  return idx;
}

// Inserts m into an antichain of minimal masks unless a subset is present;
// drops any supersets of m.
bool insert_minimal(std::vector<Mask>& antichain, Mask m) {
  for (Mask x : antichain)
    if ((x & m) == x) return false;
  std::erase_if(antichain, [m](Mask x) { return (m & x) == m; });
  antichain.push_back(m);
  return true;
}

}  // namespace

bool exists_rainbow_s_tree(const Graph& g, const EdgeColoring& c, std::array<Vertex, 3> terminals,
                           const RainbowTreeOptions& opts) {
  const std::size_t n = g.num_vertices();
  for (Vertex t : terminals)
    if (t >= n) throw InvalidInput("terminal " + std::to_string(t) + " is not in the graph");
  const ColorIndex idx = index_colors(g, c, std::min<std::size_t>(opts.max_colors, 64));

  // dp[X][v]: minimal color sets of rainbow connected subgraphs holding the
  // terminals in X together with v.
  std::array<std::vector<std::vector<Mask>>, 8> dp;
  for (auto& layer : dp) layer.assign(n, {});
  for (int i = 0; i < 3; ++i) insert_minimal(dp[1u << i][terminals[static_cast<std::size_t>(i)]], 0);

  const std::array<unsigned, 7> order{1, 2, 4, 3, 5, 6, 7};
  for (unsigned x : order) {
    if (std::popcount(x) > 1) {
      for (unsigned a = (x - 1) & x; a > 0; a = (a - 1) & x) {
        const unsigned b = x & ~a;
        if (a > b) continue;
        for (Vertex v = 0; v < n; ++v)
          for (Mask ma : dp[a][v])
            for (Mask mb : dp[b][v])
              if ((ma & mb) == 0) insert_minimal(dp[x][v], ma | mb);
      }
    }
    if (x == 7) break;
    // Extend by fresh-colored edges in order of set size.
    std::vector<std::vector<std::pair<Vertex, Mask>>> buckets(idx.count + 2);
    for (Vertex v = 0; v < n; ++v)
      for (Mask m : dp[x][v]) buckets[static_cast<std::size_t>(std::popcount(m))].emplace_back(v, m);
    for (std::size_t size = 0; size < buckets.size(); ++size) {
      for (std::size_t i = 0; i < buckets[size].size(); ++i) {
        const auto [v, m] = buckets[size][i];
        const auto& here = dp[x][v];
        if (std::find(here.begin(), here.end(), m) == here.end()) continue;
        auto nbrs = g.neighbors(v);
        auto eids = g.incident_edges(v);
        for (std::size_t j = 0; j < nbrs.size(); ++j) {
          const Mask colour = Mask{1} << idx.of_edge[eids[j]];
          if (m & colour) continue;
          if (insert_minimal(dp[x][nbrs[j]], m | colour) && size + 1 < buckets.size()) {
            buckets[size + 1].emplace_back(nbrs[j], m | colour);
          }
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!dp[7][v].empty()) return true;
  return false;
}

VerifyReport is_3_rainbow(const Graph& g, const EdgeColoring& c) {
  const std::size_t n = g.num_vertices();
  const ColorIndex idx = index_colors(g, c, 64);
  VerifyReport report;
  report.colors = idx.count;

  // reach[s][v]: minimal color sets of rainbow walks from s to v. Walks are
  // grown one edge (one new color) at a time, so sets arrive by size and a
  // subset test suffices.
  std::vector<std::vector<std::vector<Mask>>> reach(n, std::vector<std::vector<Mask>>(n));
  for (Vertex s = 0; s < n; ++s) {
    auto& r = reach[s];
    r[s].push_back(0);
    std::vector<std::pair<Vertex, Mask>> frontier{{s, 0}};
    while (!frontier.empty()) {
      std::vector<std::pair<Vertex, Mask>> next;
      for (const auto& [v, m] : frontier) {
        auto nbrs = g.neighbors(v);
        auto eids = g.incident_edges(v);
        for (std::size_t j = 0; j < nbrs.size(); ++j) {
          const Mask colour = Mask{1} << idx.of_edge[eids[j]];
          if (m & colour) continue;
          const Mask grown = m | colour;
          auto& target = r[nbrs[j]];
          bool dominated = false;
          for (Mask x : target)
            if ((x & grown) == x) {
              dominated = true;
              break;
            }
          if (dominated) continue;
          target.push_back(grown);
          next.emplace_back(nbrs[j], grown);
        }
      }
      frontier = std::move(next);
    }
  }

  auto triple_ok = [&](Vertex a, Vertex b, Vertex cc) {
    for (Vertex m = 0; m < n; ++m) {
      for (Mask ma : reach[a][m])
        for (Mask mb : reach[b][m]) {
          if (ma & mb) continue;
          const Mask ab = ma | mb;
          for (Mask mc : reach[cc][m])
            if ((mc & ab) == 0) return true;
        }
    }
    return false;
  };

  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex cc = b + 1; cc < n; ++cc) {
        ++report.triples_checked;
        if (!triple_ok(a, b, cc)) {
          report.verdict = false;
          report.failing_triple = std::array<Vertex, 3>{a, b, cc};
          return report;
        }
      }
  return report;
}

std::optional<ColorTriple> certificate_colors(const Graph& g, const EdgeColoring& c, const SafetyCertificate& cert) {
  ColorTriple out;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& path = cert.paths[i];
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      auto e = g.edge_id(path[j], path[j + 1]);
      if (!e || c[*e] == kUncolored) return std::nullopt;
      out[i].push_back(c[*e]);
    }
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

bool verify_certificate(const Graph& g, const EdgeColoring& c, const std::vector<char>& in_d,
                        const SafetyCertificate& cert) {
  const Vertex v = cert.vertex;
  if (v >= g.num_vertices() || in_d[v]) return false;
  std::vector<Vertex> inner_all;
  std::vector<Color> colors;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& path = cert.paths[i];
    if (path.size() < 2 || path.front() != v || !in_d[path.back()]) return false;
    if (i == 0 && path.size() != 2) return false;
    std::vector<Vertex> inner(path.begin() + 1, path.end() - 1);
    for (Vertex w : inner)
      if (w >= g.num_vertices() || in_d[w] || w == v) return false;
    std::sort(inner.begin(), inner.end());
    if (std::adjacent_find(inner.begin(), inner.end()) != inner.end()) return false;
    inner_all.insert(inner_all.end(), inner.begin(), inner.end());
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      auto e = g.edge_id(path[j], path[j + 1]);
      if (!e || c[*e] == kUncolored) return false;
      colors.push_back(c[*e]);
    }
  }
  // No path may touch an inner vertex of another.
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      const auto& pi = cert.paths[i];
      const auto& pj = cert.paths[j];
      for (std::size_t a = 1; a + 1 < pi.size(); ++a)
        if (std::find(pj.begin(), pj.end(), pi[a]) != pj.end()) return false;
    }
  }
  std::sort(colors.begin(), colors.end());
  return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

namespace {

// Parses the compact notation {1,24,35}: each token is a set of digits.
ColorTriple triple(const char* a, const char* b, const char* c) {
  ColorTriple t;
  const char* parts[3] = {a, b, c};
  for (std::size_t i = 0; i < 3; ++i) {
    for (const char* p = parts[i]; *p; ++p) t[i].push_back(static_cast<Color>(*p - '0'));
    std::sort(t[i].begin(), t[i].end());
  }
  return t;
}

bool disjoint(const ColorSet& a, const ColorSet& b) {
  for (Color x : a)
    if (std::binary_search(b.begin(), b.end(), x)) return false;
  return true;
}

bool same_pair(const ColorSet& a1, const ColorSet& a2, const ColorSet& b1, const ColorSet& b2) {
  return (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
}

}  // namespace

const std::array<std::vector<ColorTriple>, 7>& class_table() {
  static const std::array<std::vector<ColorTriple>, 7> table{{
      {triple("1", "2", "3"), triple("1", "2", "34"), triple("1", "2", "36"), triple("2", "3", "14"),
       triple("2", "3", "15"), triple("1", "3", "24"), triple("1", "3", "25")},
      {triple("1", "24", "35"), triple("1", "36", "24"), triple("1", "36", "25"), triple("1", "24", "56"),
       triple("1", "36", "45"), triple("1", "36", "245"), triple("1", "24", "356"), triple("1", "346", "25")},
      {triple("2", "36", "14"), triple("2", "14", "35"), triple("2", "14", "56"), triple("2", "36", "15"),
       triple("2", "36", "45"), triple("2", "46", "35"), triple("2", "36", "145"), triple("2", "14", "356"),
       triple("2", "346", "15")},
      {triple("3", "15", "26"), triple("3", "25", "16"), triple("3", "15", "46"), triple("3", "25", "46"),
       triple("3", "15", "24"), triple("3", "25", "14"), triple("3", "25", "146"), triple("3", "15", "246")},
      {triple("4", "36", "15"), triple("4", "36", "25"), triple("4", "36", "125")},
      {triple("5", "14", "26"), triple("5", "24", "16")},
      {triple("6", "25", "34"), triple("6", "15", "34"), triple("6", "15", "24"), triple("6", "245", "13")},
  }};
  return table;
}

std::optional<int> class_membership(const ColorTriple& t) {
  const auto& table = class_table();
  for (std::size_t first = 0; first < 3; ++first) {
    if (first != 0 && t[first].size() != 1) continue;
    if (first != 0 && t[0].size() != 1) continue;
    const ColorSet& a = t[first];
    const ColorSet& b = t[(first + 1) % 3];
    const ColorSet& c = t[(first + 2) % 3];
    for (std::size_t cls = 0; cls < table.size(); ++cls)
      for (const ColorTriple& entry : table[cls])
        if (entry[0] == a && same_pair(entry[1], entry[2], b, c)) return static_cast<int>(cls);
  }
  return std::nullopt;
}

bool pickable(const ColorTriple& cu, const ColorTriple& cv, const ColorTriple& cw) {
  const std::array<const ColorTriple*, 3> xs{&cu, &cv, &cw};
  if (!(cu[0] == cv[0] && cv[0] == cw[0])) return true;  // (C1)
  // A vertex with two single-edge paths can always be completed.
  for (const ColorTriple* x : xs)
    if ((*x)[1].size() == 1 || (*x)[2].size() == 1) return true;
  // (C2)
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      for (std::size_t s = 1; s < 3; ++s)
        for (std::size_t t = 1; t < 3; ++t)
          if (disjoint((*xs[i])[s], (*xs[j])[t])) return true;
  return false;
}

bool pickable_bruteforce(const ColorTriple& cu, const ColorTriple& cv, const ColorTriple& cw) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        ColorSet all;
        all.insert(all.end(), cu[i].begin(), cu[i].end());
        all.insert(all.end(), cv[j].begin(), cv[j].end());
        all.insert(all.end(), cw[k].begin(), cw[k].end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) == all.end()) return true;
      }
  return false;
}

}  // namespace rainbow3
