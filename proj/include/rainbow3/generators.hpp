#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "rainbow3/graph.hpp"

namespace rainbow3 {

// A generated graph plus names for the vertices its construction refers to
// (e.g. "v0", "y1", "x2,1").
struct LabeledGraph {
  Graph graph;
  std::map<std::string, Vertex> labels;
};

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t s, std::size_t t);  // sides 0..s-1 and s..s+t-1
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);                         // n >= 3
Graph star_graph(std::size_t leaves);                     // center 0

// Chain of m copies of K_{delta+1} between two copies of K_{delta+2}. Block
// X_i holds x_{i,1}..x_{i,|X_i|}; consecutive blocks are joined by
// x_{i,2} x_{i+1,1} and every edge x_{i,1} x_{i,2} is removed. Vertices are
// numbered block by block.
LabeledGraph gstar(int delta, int m);

// Triangle y1 y2 y3 joined to t independent vertices x1..xt.
LabeledGraph threshold_example(int t);

// Bipartite graph on a1..ak and b1..bt: a1..a(k-3) see b1, b2, b3 and
// a(k-2), a(k-1), ak see every b.
LabeledGraph chain_example(int k, int t);

// t copies of K4 sharing the hub v0; block i is {v0, ui, vi, wi}.
LabeledGraph french_windmill(int t);

// Edge uv exactly when weights[u] + weights[v] >= threshold.
Graph threshold_from_weights(std::span<const double> weights, double threshold);

// Connected graph with minimum degree at least delta: a G(n, p) sample with
// expected degree about delta + 1, deficient vertices topped up with random
// neighbors, components then chained together. Deterministic in the seed.
Graph random_min_degree(std::size_t n, int delta, std::uint64_t seed);

}  // namespace rainbow3
