#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbow3/edge_coloring.hpp"
#include "rainbow3/graph.hpp"

namespace rainbow3 {

// BFS spanning tree from vertex 0 with distinct colors 1..n-1 in discovery
// order; every non-tree edge gets color 1. Throws PreconditionError for a
// disconnected graph.
EdgeColoring spanning_tree_coloring(const Graph& h);

struct InnerColoring {
  Graph subgraph;         // G[D]; vertex i is d[i]
  EdgeColoring coloring;  // of `subgraph`, colors offset+1 ...
  std::size_t colors = 0;
  bool exact = false;  // optimal by exhaustive search
};

// Options for the exhaustive search on G[D].
struct InnerOptions {
  std::size_t max_edges = 14;
  std::size_t node_budget = 2'000'000;
};

// 3-rainbow coloring of G[D] shifted by `offset`: optimal when G[D] is small
// enough for the exact solver, spanning-tree coloring otherwise. Throws
// PreconditionError when G[D] is disconnected.
InnerColoring inner_coloring(const Graph& g, std::span<const Vertex> d, Color offset, const InnerOptions& opts = {});

struct ColoringReport {
  std::string method;
  std::size_t dom_size = 0;
  std::size_t inner_colors = 0;  // d
  bool inner_exact = false;
  std::size_t total_colors = 0;
  std::size_t stage2_steps = 0;
  std::array<std::size_t, 4> case_counts{};  // stage-2 steps per case
  // Test mode only: flagged certificates that stopped verifying after a
  // stage-2 step, summed over all steps.
  std::size_t safety_violations = 0;
};

struct ColoringResult {
  EdgeColoring coloring;
  std::vector<SafetyCertificate> certificates;  // one per outside vertex, ascending
  ColoringReport report;
};

// Legs of every outside vertex get colors 1, 2, then 3 (ascending feet),
// G[D] gets fresh colors 4.., every other edge color 1. Throws
// PreconditionError unless D is a connected 3-dominating set.
ColoringResult theorem4_coloring(const Graph& g, std::span<const Vertex> d, const InnerOptions& inner = {});

// Per-vertex bookkeeping of the periodic coloring, shared by all components.
struct Stage1State {
  std::vector<std::optional<EdgeId>> leg;  // e_v, the leg to the smallest foot
  std::vector<Color> initial_leg_color;    // c(e_v) after the periodic step
  std::vector<char> flagged;
  std::vector<std::optional<SafetyCertificate>> certificate;
  std::vector<Vertex> dangerous;  // leaves with no spare leg, in processing order

  explicit Stage1State(std::size_t n)
      : leg(n), initial_leg_color(n, kUncolored), flagged(n, 0), certificate(n) {}
  bool recolored(Vertex v, const EdgeColoring& c) const { return leg[v] && c[*leg[v]] != initial_leg_color[v]; }
};

// Periodic coloring of one component of G - D with at least three vertices,
// followed by spare-leg completion of the leaves that have one. Non-leaves
// and completed leaves are flagged with their certificates; the remaining
// leaves are appended to state.dangerous in processing order.
void stage1_periodic(const Graph& g, const std::vector<char>& in_d, const BfsTree& tree, EdgeColoring& c,
                     Stage1State& state);

// Order for the second step: later first-level branch first, then lower
// height, then BFS visitation order.
std::vector<Vertex> order_dangerous(std::span<const Vertex> a, const BfsTree& tree);

// Key of the second-step case table.
struct Stage2Key {
  int case_id = 0;      // 1..4
  int height_mod3 = 0;  // h(w) mod 3
  int delta = 0;        // h(v) - h(w)
  bool partner_recolored = false;
  friend auto operator<=>(const Stage2Key&, const Stage2Key&) = default;
};

struct Stage2Action {
  Color edge_color = kUncolored;    // color of wv
  Color leg_recolor = kUncolored;   // new color of e_w, if any
};

// The transcribed case table; nullopt for keys the case analysis rules out.
std::optional<Stage2Action> stage2_action(const Stage2Key& key);
// Every key the table defines.
std::vector<Stage2Key> stage2_keys();

struct Theorem3Options {
  InnerOptions inner;
  // Re-verify every flagged certificate after each second-step move.
  bool test_mode = false;
};

// Six colors on E[D, V-D] and E(G - D) by the two-step construction, fresh
// colors 7.. on G[D]. Throws PreconditionError unless D is a connected
// three-way dominating set, InternalError if the case analysis is left.
ColoringResult theorem3_coloring(const Graph& g, std::span<const Vertex> d, const Theorem3Options& opts = {});

}  // namespace rainbow3
