#pragma once

#include <cstdint>
#include <vector>

#include "avdc/graph.hpp"

namespace avdc {

using Color = int;

// Colour per host edge index; 0 means unassigned. Colours are positive.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}
  static EdgeColoring uncolored(const Graph& g) {
    return EdgeColoring(std::vector<Color>(g.edge_count(), 0));
  }

  Color operator[](EdgeIndex e) const { return colors_[e]; }
  void set(EdgeIndex e, Color c) { colors_[e] = c; }
  std::size_t size() const { return colors_.size(); }
  const std::vector<Color>& colors() const { return colors_; }

  bool complete() const;
  // Sorted distinct colours in use.
  std::vector<Color> palette() const;
  int palette_size() const { return static_cast<int>(palette().size()); }
  // Sorted colours on edges at v.
  std::vector<Color> colors_at(const Graph& g, Vertex v) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
};

// Proper edge colouring with at most max_degree + 1 colours (Misra–Gries fan
// rotation). Ties resolve to the lowest free colour and lowest vertex label.
// Colours of the result are relabelled to 1..k in order of first use value.
EdgeColoring misra_gries(const Graph& g);

// Class i (0-based) holds the edges coloured i+1. Classes past the palette are
// empty. Throws PreconditionError if padded_to is smaller than the palette.
std::vector<std::vector<EdgeIndex>> color_classes(const EdgeColoring& c, int padded_to);

}  // namespace avdc
