#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rainbow3/graph.hpp"

namespace rainbow3 {

// Colors are positive; 0 marks an edge that has not been colored yet.
using Color = std::uint32_t;
inline constexpr Color kUncolored = 0;

// Total mapping from the edge ids of one graph to colors.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(std::size_t num_edges) : colors_(num_edges, kUncolored) {}
  explicit EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  std::size_t size() const noexcept { return colors_.size(); }
  Color operator[](EdgeId e) const { return colors_[e]; }
  void set(EdgeId e, Color c) { colors_[e] = c; }
  std::span<const Color> colors() const noexcept { return colors_; }

  bool is_total() const {
    return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
  }

  // Sorted distinct colors in use (uncolored edges ignored).
  std::vector<Color> palette() const {
    std::vector<Color> out;
    for (Color c : colors_)
      if (c != kUncolored) out.push_back(c);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  std::size_t num_colors() const { return palette().size(); }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
};

// Sorted set of distinct colors.
using ColorSet = std::vector<Color>;

// Color sets of the three paths of a safety certificate, first path first.
using ColorTriple = std::array<ColorSet, 3>;

// Three internally disjoint v-D paths whose union is rainbow. Every path
// starts at `vertex` and ends at its only vertex in D; paths[0] is a single
// leg.
struct SafetyCertificate {
  Vertex vertex = 0;
  std::array<std::vector<Vertex>, 3> paths;

  friend bool operator==(const SafetyCertificate&, const SafetyCertificate&) = default;
};

}  // namespace rainbow3
