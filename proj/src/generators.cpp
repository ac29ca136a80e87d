#include "rainbow3/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rainbow3/errors.hpp"

namespace rainbow3 {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace

Graph complete_graph(std::size_t n) {
  EdgeList edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(vx(u), vx(v));
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t s, std::size_t t) {
  EdgeList edges;
  for (std::size_t u = 0; u < s; ++u)
    for (std::size_t v = 0; v < t; ++v) edges.emplace_back(vx(u), vx(s + v));
  return Graph(s + t, edges);
}

Graph path_graph(std::size_t n) {
  EdgeList edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(vx(v - 1), vx(v));
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "a cycle needs at least 3 vertices");
  EdgeList edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(vx(v), vx((v + 1) % n));
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  EdgeList edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.emplace_back(0, vx(v));
  return Graph(leaves + 1, edges);
}

LabeledGraph gstar(int delta, int m) {
  require(delta >= 3, "gstar needs delta >= 3");
  require(m >= 0, "gstar needs m >= 0");
  LabeledGraph out;
  std::vector<std::vector<Vertex>> blocks;
  std::size_t next = 0;
  for (int i = 0; i <= m + 1; ++i) {
    const int size = (i == 0 || i == m + 1) ? delta + 2 : delta + 1;
    std::vector<Vertex> block;
    for (int j = 1; j <= size; ++j) {
      out.labels["x" + std::to_string(i) + "," + std::to_string(j)] = vx(next);
      block.push_back(vx(next++));
    }
    blocks.push_back(std::move(block));
  }
  EdgeList edges;
  for (const auto& block : blocks)
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = a + 1; b < block.size(); ++b)
        if (!(a == 0 && b == 1)) edges.emplace_back(block[a], block[b]);
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) edges.emplace_back(blocks[i][1], blocks[i + 1][0]);
  out.graph = Graph(next, edges);
  return out;
}

LabeledGraph threshold_example(int t) {
  require(t >= 1, "threshold_example needs t >= 1");
  LabeledGraph out;
  EdgeList edges{{0, 1}, {0, 2}, {1, 2}};
  for (int y = 0; y < 3; ++y) out.labels["y" + std::to_string(y + 1)] = vx(static_cast<std::size_t>(y));
  for (int i = 1; i <= t; ++i) {
    const Vertex x = vx(static_cast<std::size_t>(2 + i));
    out.labels["x" + std::to_string(i)] = x;
    for (Vertex y = 0; y < 3; ++y) edges.emplace_back(y, x);
  }
  out.graph = Graph(static_cast<std::size_t>(t) + 3, edges);
  return out;
}

LabeledGraph chain_example(int k, int t) {
  require(k >= 4 && t >= 4, "chain_example needs k >= 4 and t >= 4");
  LabeledGraph out;
  const auto ku = static_cast<std::size_t>(k);
  const auto tu = static_cast<std::size_t>(t);
  for (std::size_t i = 0; i < ku; ++i) out.labels["a" + std::to_string(i + 1)] = vx(i);
  for (std::size_t j = 0; j < tu; ++j) out.labels["b" + std::to_string(j + 1)] = vx(ku + j);
  EdgeList edges;
  for (std::size_t i = 0; i < ku; ++i) {
    const std::size_t reach = i + 3 < ku ? 3 : tu;
    for (std::size_t j = 0; j < reach; ++j) edges.emplace_back(vx(i), vx(ku + j));
  }
  out.graph = Graph(ku + tu, edges);
  return out;
}

LabeledGraph french_windmill(int t) {
  require(t >= 1, "french_windmill needs t >= 1");
  LabeledGraph out;
  out.labels["v0"] = 0;
  EdgeList edges;
  for (int i = 1; i <= t; ++i) {
    const Vertex base = vx(1 + 3 * static_cast<std::size_t>(i - 1));
    const std::array<Vertex, 4> block{0, base, base + 1, base + 2};
    out.labels["u" + std::to_string(i)] = base;
    out.labels["v" + std::to_string(i)] = base + 1;
    out.labels["w" + std::to_string(i)] = base + 2;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) edges.emplace_back(block[a], block[b]);
  }
  out.graph = Graph(3 * static_cast<std::size_t>(t) + 1, edges);
  return out;
}

Graph threshold_from_weights(std::span<const double> weights, double threshold) {
  EdgeList edges;
  for (std::size_t u = 0; u < weights.size(); ++u)
    for (std::size_t v = u + 1; v < weights.size(); ++v)
      if (weights[u] + weights[v] >= threshold) edges.emplace_back(vx(u), vx(v));
  return Graph(weights.size(), edges);
}

Graph random_min_degree(std::size_t n, int delta, std::uint64_t seed) {
  require(delta >= 0, "delta must be non-negative");
  require(n >= static_cast<std::size_t>(delta) + 1, "random_min_degree needs n >= delta + 1");
  require(n >= 1, "random_min_degree needs n >= 1");
  std::mt19937_64 rng(seed);
  // Plain modulo keeps the stream identical across standard libraries.
  auto below = [&rng](std::uint64_t bound) { return rng() % bound; };
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> deg(n, 0);
  auto add = [&](std::size_t u, std::size_t v) {
    if (u == v || adj[u][v]) return;
    adj[u][v] = adj[v][u] = 1;
    ++deg[u];
    ++deg[v];
  };
  const std::uint64_t scale = 1'000'000;
  const std::uint64_t cutoff =
      n > 1 ? std::min<std::uint64_t>(scale, scale * static_cast<std::uint64_t>(delta + 1) / (n - 1)) : 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (below(scale) < cutoff) add(u, v);
  for (std::size_t v = 0; v < n; ++v) {
    while (deg[v] < delta) {
      std::vector<std::size_t> options;
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && !adj[v][u]) options.push_back(u);
      add(v, options[below(options.size())]);
    }
  }
  // Chain components: join each component's smallest vertex to a random
  // vertex seen earlier.
  std::vector<int> comp(n, -1);
  std::vector<std::size_t> seen;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    if (!seen.empty()) add(s, seen[below(seen.size())]);
    std::vector<std::size_t> stack{s};
    comp[s] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      seen.push_back(v);
      for (std::size_t u = 0; u < n; ++u)
        if (adj[v][u] && comp[u] < 0) {
          comp[u] = 1;
          stack.push_back(u);
        }
    }
  }
  EdgeList edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (adj[u][v]) edges.emplace_back(vx(u), vx(v));
  return Graph(n, edges);
}

}  // namespace rainbow3
