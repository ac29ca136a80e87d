#include "rainbow3/graph.hpp"

#include <algorithm>
#include <limits>

#include "rainbow3/errors.hpp"

namespace rainbow3 {

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
  edges_.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    if (a >= n || b >= n) {
      throw InvalidInput("edge (" + std::to_string(a) + "," + std::to_string(b) +
                         ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (a == b) {
      throw InvalidInput("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n]);
  incident_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so pushing in edge order leaves every
  // neighbor list sorted only for the larger endpoint; sort per vertex after.
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]] = e.v;
    incident_[fill[e.u]++] = id;
    adjacency_[fill[e.v]] = e.u;
    incident_[fill[e.v]++] = id;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::pair<Vertex, EdgeId>> row;
    row.reserve(deg[v]);
    for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) row.emplace_back(adjacency_[i], incident_[i]);
    std::sort(row.begin(), row.end());
    for (std::size_t i = 0; i < row.size(); ++i) {
      adjacency_[offsets_[v] + i] = row[i].first;
      incident_[offsets_[v] + i] = row[i].second;
    }
  }
}

std::size_t Graph::min_degree() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < num_vertices(); ++v) best = std::min(best, degree(v));
  return num_vertices() == 0 ? 0 : best;
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return std::nullopt;
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<std::int64_t> local(num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<std::int64_t>(i);
  std::vector<std::pair<Vertex, Vertex>> sub;
  for (const Edge& e : edges_) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      sub.emplace_back(static_cast<Vertex>(local[e.u]), static_cast<Vertex>(local[e.v]));
    }
  }
  return Graph(vertices.size(), sub);
}

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
  return Graph(n, edge_list);
}

std::vector<char> membership(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : set) {
    if (v >= g.num_vertices()) throw InvalidInput("vertex " + std::to_string(v) + " is not in the graph");
    in[v] = 1;
  }
  return in;
}

namespace {

// Flood fill from `start` through vertices with allowed[v] != 0.
std::vector<Vertex> flood(const Graph& g, Vertex start, const std::vector<char>& allowed,
                          std::vector<char>& seen) {
  std::vector<Vertex> out{start};
  seen[start] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Vertex w : g.neighbors(out[head])) {
      if (allowed[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return false;
  std::vector<char> all(g.num_vertices(), 1), seen(g.num_vertices(), 0);
  return flood(g, 0, all, seen).size() == g.num_vertices();
}

std::vector<VertexSet> components_minus(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> allowed = membership(g, removed);
  for (char& c : allowed) c = !c;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (allowed[v] && !seen[v]) out.push_back(flood(g, v, allowed, seen));
  }
  return out;
}

bool induces_connected(const Graph& g, std::span<const Vertex> set) {
  if (set.empty()) return false;
  std::vector<char> allowed = membership(g, set);
  std::vector<char> seen(g.num_vertices(), 0);
  return flood(g, set.front(), allowed, seen).size() == set.size();
}

BfsTree bfs_tree(const Graph& g, std::span<const Vertex> component, Vertex root) {
  const std::size_t n = g.num_vertices();
  std::vector<char> inside = membership(g, component);
  if (root >= n || !inside[root]) {
    throw InvalidInput("BFS root " + std::to_string(root) + " is not in the component");
  }
  BfsTree t;
  t.root = root;
  t.parent.assign(n, std::nullopt);
  t.height.assign(n, -1);
  t.position.assign(n, 0);
  t.children.assign(n, {});
  t.branch.assign(n, 0);
  t.kind.assign(n, SubtreeKind::None);

  t.height[root] = 0;
  t.order.push_back(root);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const Vertex v = t.order[head];
    for (Vertex w : g.neighbors(v)) {
      if (!inside[w] || t.height[w] >= 0) continue;
      t.height[w] = t.height[v] + 1;
      t.parent[w] = v;
      t.children[v].push_back(w);
      t.position[w] = t.order.size();
      t.order.push_back(w);
    }
  }
  if (t.order.size() != component.size()) {
    throw PreconditionError("component is not connected in the graph");
  }
  t.first_level = t.children[root];
  t.kind[root] = SubtreeKind::Root;
  for (std::size_t i = 0; i < t.first_level.size(); ++i) t.branch[t.first_level[i]] = i + 1;
  const std::size_t k = t.first_level.size();
  for (Vertex v : t.order) {
    if (v == root) continue;
    if (t.height[v] > 1) t.branch[v] = t.branch[*t.parent[v]];
    t.kind[v] = t.branch[v] == k ? SubtreeKind::TypeII : SubtreeKind::TypeI;
  }
  return t;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dist;
  dist.reserve(g.num_vertices());
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    dist.push_back(bfs_distances(g, s));
    for (Vertex t = 0; t < g.num_vertices(); ++t) {
      if (dist[s][t] < 0) {
        throw PreconditionError("graph is disconnected: no path between " + std::to_string(s) + " and " +
                                std::to_string(t));
      }
    }
  }
  return dist;
}

int diameter(const DistanceMatrix& dist) {
  int best = 0;
  for (const auto& row : dist)
    for (int d : row) best = std::max(best, d);
  return best;
}

int diameter(const Graph& g) { return diameter(all_pairs_distances(g)); }

int steiner_distance3(const DistanceMatrix& dist, Vertex s1, Vertex s2, Vertex s3) {
  int best = std::numeric_limits<int>::max();
  for (std::size_t m = 0; m < dist.size(); ++m) best = std::min(best, dist[s1][m] + dist[s2][m] + dist[s3][m]);
  return best;
}

int steiner_distance3(const Graph& g, Vertex s1, Vertex s2, Vertex s3) {
  const std::size_t n = g.num_vertices();
  if (s1 >= n || s2 >= n || s3 >= n) throw InvalidInput("terminal outside the graph");
  auto d1 = bfs_distances(g, s1), d2 = bfs_distances(g, s2), d3 = bfs_distances(g, s3);
  int best = std::numeric_limits<int>::max();
  for (std::size_t m = 0; m < n; ++m) {
    if (d1[m] < 0 || d2[m] < 0 || d3[m] < 0) continue;
    best = std::min(best, d1[m] + d2[m] + d3[m]);
  }
  if (best == std::numeric_limits<int>::max()) throw PreconditionError("terminals are not mutually reachable");
  return best;
}

SteinerDiameter sdiam3(const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  if (n < 3) throw PreconditionError("sdiam3 needs at least 3 vertices");
  SteinerDiameter out;
  out.value = -1;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        const int d = steiner_distance3(dist, a, b, c);
        if (d > out.value) out = {d, {a, b, c}};
      }
  return out;
}

SteinerDiameter sdiam3(const Graph& g) {
  if (g.num_vertices() < 3) throw PreconditionError("sdiam3 needs at least 3 vertices");
  return sdiam3(all_pairs_distances(g));
}

}  // namespace rainbow3
