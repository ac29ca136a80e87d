#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rainbow3 {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// Edges are numbered 0..m-1 in lexicographic order of (u, v) with u < v, and
// every neighbor list is sorted ascending, so two graphs built from the same
// edge set are identical regardless of input order.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidInput on a self-loop or an endpoint >= n. Duplicate pairs
  // (in either orientation) are collapsed.
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  // Edge ids aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t min_degree() const;

  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

  // Subgraph induced by `vertices` (any order, no duplicates). Vertex i of
  // the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<EdgeId> incident_;
};

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list);

bool is_connected(const Graph& g);

// Vertex sets are sorted vectors of distinct ids.
using VertexSet = std::vector<Vertex>;

// Membership mask of `set` over the vertices of g.
std::vector<char> membership(const Graph& g, std::span<const Vertex> set);

// Connected components of G - D, each sorted ascending, listed in order of
// their smallest vertex.
std::vector<VertexSet> components_minus(const Graph& g, std::span<const Vertex> removed);

// Whether the subgraph induced by `set` is connected (the empty set is not).
bool induces_connected(const Graph& g, std::span<const Vertex> set);

enum class SubtreeKind : std::uint8_t { None, Root, TypeI, TypeII };

// Breadth-first spanning tree of one component, carrying the level
// structure used by the periodic coloring. All per-vertex arrays are indexed
// by the global vertex id; vertices outside the component have height -1.
struct BfsTree {
  Vertex root = 0;
  std::vector<std::optional<Vertex>> parent;
  std::vector<int> height;
  std::vector<Vertex> order;           // visitation order, root first
  std::vector<std::size_t> position;   // index into `order`
  std::vector<Vertex> first_level;     // v_1..v_k in visitation order
  std::vector<std::vector<Vertex>> children;
  // Index i (1-based) of the first-level ancestor v_i; 0 for the root.
  std::vector<std::size_t> branch;
  std::vector<SubtreeKind> kind;

  bool contains(Vertex v) const { return v < height.size() && height[v] >= 0; }
  bool is_leaf(Vertex v) const { return children[v].empty(); }
  std::size_t num_branches() const { return first_level.size(); }
};

// BFS over the component, visiting neighbors in ascending id. The last
// first-level vertex in visitation order roots the type II subtree; every
// other first-level vertex roots a type I subtree.
BfsTree bfs_tree(const Graph& g, std::span<const Vertex> component, Vertex root);

// Single-source BFS distances; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

using DistanceMatrix = std::vector<std::vector<int>>;

// Throws PreconditionError naming two mutually unreachable vertices when g
// is disconnected.
DistanceMatrix all_pairs_distances(const Graph& g);
int diameter(const DistanceMatrix& dist);
int diameter(const Graph& g);

// Size of a smallest tree containing s1, s2, s3: the minimum over all
// vertices m of d(m,s1) + d(m,s2) + d(m,s3).
int steiner_distance3(const DistanceMatrix& dist, Vertex s1, Vertex s2, Vertex s3);
int steiner_distance3(const Graph& g, Vertex s1, Vertex s2, Vertex s3);

struct SteinerDiameter {
  int value = 0;
  std::array<Vertex, 3> triple{};  // lexicographically first maximizer
};

// Maximum 3-Steiner distance over all triples. Requires a connected graph
// with at least three vertices.
SteinerDiameter sdiam3(const Graph& g);
SteinerDiameter sdiam3(const DistanceMatrix& dist);

}  // namespace rainbow3
