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

struct RainbowTreeOptions {
  // Largest number of distinct colors the subset DP accepts.
  std::size_t max_colors = 14;
};

// Whether some tree of g containing all of `terminals` has pairwise distinct
// edge colors. Dynamic program over (vertex, terminal subset, used colors):
// states grow by an edge of a fresh color or merge at a vertex when their
// color sets are disjoint. Throws LimitExceeded above opts.max_colors.
bool exists_rainbow_s_tree(const Graph& g, const EdgeColoring& c, std::array<Vertex, 3> terminals,
                           const RainbowTreeOptions& opts = {});

struct VerifyReport {
  bool verdict = true;
  std::optional<std::array<Vertex, 3>> failing_triple;
  std::optional<Vertex> failing_certificate;
  std::size_t triples_checked = 0;
  std::size_t colors = 0;
};

// Checks every 3-subset of V(g) for a rainbow tree. A triple has one exactly
// when some vertex m has rainbow walks to the three terminals with pairwise
// disjoint color sets; per-source minimal color sets are computed once and
// shared by all triples. Supports up to 64 distinct colors.
VerifyReport is_3_rainbow(const Graph& g, const EdgeColoring& c);

// Path rules for a safety certificate of an outside vertex, checked against
// the coloring: endpoints, adjacency, inner vertices outside D, internal
// disjointness, single-edge first path, and a rainbow union.
bool verify_certificate(const Graph& g, const EdgeColoring& c, const std::vector<char>& in_d,
                        const SafetyCertificate& cert);

// Color sets of the certificate's paths, or nullopt if a path uses an
// uncolored or missing edge.
std::optional<ColorTriple> certificate_colors(const Graph& g, const EdgeColoring& c, const SafetyCertificate& cert);

// The seven classes of certificate color-set triples that the construction
// can leave behind. Triples list the first path, then the other two.
const std::array<std::vector<ColorTriple>, 7>& class_table();

// Class index of `triple`, matching the last two sets in either order; for
// triples with several single-color paths any of them may serve as the first.
std::optional<int> class_membership(const ColorTriple& triple);

// Whether paths can be picked, one per vertex, with a rainbow union, decided
// by the characterization: the first-path colors are not all equal, or two
// distinct vertices have non-first paths with disjoint color sets. Inputs
// must be super-rainbow triples with single-color first sets.
bool pickable(const ColorTriple& cu, const ColorTriple& cv, const ColorTriple& cw);

// Tries all 27 selections directly.
bool pickable_bruteforce(const ColorTriple& cu, const ColorTriple& cv, const ColorTriple& cw);

struct ExactOptions {
  std::size_t max_edges = 14;
  int max_kmax = 8;
  std::size_t node_budget = 200'000'000;
};

struct ExactResult {
  // Smallest number of colors of a 3-rainbow coloring, or nullopt when every
  // count up to kmax fails.
  std::optional<int> value;
  int lower_bound = 0;
  EdgeColoring coloring;  // an optimal coloring when value is set
  std::size_t nodes = 0;
};

// Exhaustive search for rx3: colorings are enumerated with first-use color
// symmetry removed and pruned as soon as some triple has no minimal tree
// whose colored edges are still distinct. Found colorings are re-checked
// with is_3_rainbow. Throws LimitExceeded on oversized input or when the
// node budget runs out, PreconditionError for disconnected graphs or fewer
// than three vertices.
ExactResult exact_rx3(const Graph& g, int kmax, const ExactOptions& opts = {});

// Whether every color count up to `colors` fails, i.e. no coloring with at
// most `colors` colors is 3-rainbow.
bool no_rainbow_coloring_with(const Graph& g, int colors, const ExactOptions& opts = {});

}  // namespace rainbow3
