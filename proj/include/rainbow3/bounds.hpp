#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow3/coloring.hpp"
#include "rainbow3/domination.hpp"
#include "rainbow3/graph.hpp"

namespace rainbow3 {

// Upper bound d + extra from a dominating set D, where d is the number of
// colors of the inner coloring of G[D].
struct DominationBound {
  std::optional<long> value;  // nullopt when no suitable set was found
  std::optional<DominatingSet> dom;
  std::size_t inner_colors = 0;
  std::string note;
};

struct FormulaBound {
  std::string name;
  double value = 0;
  bool applicable = false;
  bool in_best = true;  // false for report-only formulas
};

struct BoundsReport {
  std::size_t n = 0, m = 0, delta = 0, n1 = 0, n2 = 0;
  std::size_t gamma_c = 0;
  Provenance gamma_c_provenance = Provenance::Exact;
  SteinerDiameter sdiam3;
  DominationBound bound_a;  // connected 3-dominating set, d + 3
  DominationBound bound_b;  // connected 2-dominating set, d + 4 (value only)
  DominationBound bound_c;  // connected three-way dominating set, d + 6
  std::vector<FormulaBound> corollary_bounds;
  long best = 0;
};

struct BoundsOptions {
  ExactSearchOptions exact;
  InnerOptions inner;
};

// Every bound the dominating-set constructions give for g, each with the
// cheapest set found (exact within limits, heuristic otherwise). Requires a
// connected graph on at least three vertices.
BoundsReport bounds_report(const Graph& g, const BoundsOptions& opts = {});

// Schema: {n, m, delta, n1, n2, gamma_c, sdiam3, bound_a, bound_b, bound_c,
// corollary_bounds, best}.
std::string bounds_report_json(const BoundsReport& report);

}  // namespace rainbow3
