#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow3/graph.hpp"

namespace rainbow3 {

enum class DominationKind { Plain, Connected, KWay, KDominating, ConnectedKWay, ConnectedKDominating };

struct DominationSpec {
  DominationKind kind = DominationKind::Plain;
  int k = 1;  // ignored for Plain and Connected

  static DominationSpec plain() { return {DominationKind::Plain, 1}; }
  static DominationSpec connected() { return {DominationKind::Connected, 1}; }
  static DominationSpec k_way(int k) { return {DominationKind::KWay, k}; }
  static DominationSpec k_dominating(int k) { return {DominationKind::KDominating, k}; }
  static DominationSpec connected_k_way(int k) { return {DominationKind::ConnectedKWay, k}; }
  static DominationSpec connected_k_dominating(int k) { return {DominationKind::ConnectedKDominating, k}; }
};

std::string to_string(const DominationSpec& spec);

enum class Provenance { Exact, Heuristic, UserSupplied };

std::string to_string(Provenance p);

struct DominatingSet {
  VertexSet vertices;
  DominationSpec kind;
  Provenance provenance = Provenance::Exact;

  std::size_t size() const { return vertices.size(); }
};

// Neighbors of v inside D ("feet"), ascending.
std::vector<Vertex> feet(const Graph& g, const std::vector<char>& in_d, Vertex v);

// Whether D has the named property. Every kind requires domination (each
// outside vertex has a neighbor in D); KWay(k) adds deg(v) >= k for outside
// vertices; KDominating(k) requires k distinct neighbors in D; Connected
// variants also require G[D] connected. The empty set never qualifies.
bool check_domination(const Graph& g, std::span<const Vertex> d, const DominationSpec& spec);

// Wraps a caller-supplied set after checking it; throws PreconditionError
// naming the kind when the check fails.
DominatingSet make_dominating_set(const Graph& g, VertexSet d, const DominationSpec& spec, Provenance provenance);

struct ExactSearchOptions {
  std::size_t max_vertices = 24;  // hard cap 64 (bitmask search)
};

// Smallest connected dominating set, lexicographically first among those of
// minimum size. Throws LimitExceeded above the vertex limit and
// PreconditionError for a disconnected graph.
DominatingSet min_connected_dominating_set(const Graph& g, const ExactSearchOptions& opts = {});

// Smallest connected k-dominating set, or nullopt when none exists.
std::optional<DominatingSet> min_connected_k_dominating_set(const Graph& g, int k,
                                                            const ExactSearchOptions& opts = {});

// Internal (non-leaf) vertices of a greedily grown spanning tree that
// repeatedly expands the tree vertex with the most uncovered neighbors.
DominatingSet cds_heuristic(const Graph& g);

// Connected k-dominating set found by greedy deletion from V (highest id
// first); always valid, not necessarily minimum. nullopt if V itself is the
// only candidate and fails (cannot happen for connected graphs).
std::optional<DominatingSet> connected_k_dominating_heuristic(const Graph& g, int k);

struct ThreeWayOptions {
  ExactSearchOptions exact;
  bool allow_exact = true;  // exact CDS when n is within the limit
};

// Connected three-way dominating set: a connected dominating set (exact
// within limits, heuristic otherwise) plus every vertex of degree < 3,
// reconnected along shortest paths if needed.
DominatingSet three_way_dominating_set(const Graph& g, const ThreeWayOptions& opts = {});

struct Interval {
  double lo = 0;
  double hi = 0;
};

// Intersection graph of closed intervals; vertex i is intervals[i].
Graph interval_graph(std::span<const Interval> intervals);

// Dominating path of the interval graph by a left-to-right greedy sweep:
// start from the interval reaching furthest right among those meeting the
// interval that ends first, then keep jumping to the overlapping interval
// that reaches furthest right until every left endpoint is covered.
// Throws PreconditionError when the interval graph is disconnected.
std::vector<Vertex> interval_dominating_path(std::span<const Interval> intervals);

}  // namespace rainbow3
