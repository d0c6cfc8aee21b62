#include "avdc/vizing.hpp"

#include <algorithm>
#include <string>

#include "avdc/errors.hpp"

namespace avdc {

bool EdgeColoring::complete() const {
  return std::all_of(colors_.begin(), colors_.end(), [](Color c) { return c > 0; });
}

std::vector<Color> EdgeColoring::palette() const {
  std::vector<Color> out;
  for (Color c : colors_)
    if (c > 0) out.push_back(c);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Color> EdgeColoring::colors_at(const Graph& g, Vertex v) const {
  std::vector<Color> out;
  for (const Incidence& inc : g.incident(v))
    if (colors_[inc.edge] > 0) out.push_back(colors_[inc.edge]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class FanColorer {
 public:
  explicit FanColorer(const Graph& g)
      : g_(g),
        palette_(g.max_degree() + 1),
        color_(g.edge_count(), 0),
        at_(g.vertex_count(), std::vector<Vertex>(palette_ + 1, -1)) {}

  std::vector<Color> run() {
    for (EdgeIndex e = 0; e < g_.edge_count(); ++e) color_edge(e);
    return std::move(color_);
  }

 private:
  bool free_on(Vertex v, Color c) const { return at_[v][c] == -1; }

  Color lowest_free(Vertex v) const {
    for (Color c = 1; c <= palette_; ++c)
      if (free_on(v, c)) return c;
    throw InternalError("misra_gries: no free colour at vertex " + std::to_string(v));
  }

  void paint(EdgeIndex e, Color c) {
    const EdgeId& id = g_.edge(e);
    color_[e] = c;
    at_[id.u][c] = id.v;
    at_[id.v][c] = id.u;
  }

  void clear(EdgeIndex e) {
    const EdgeId& id = g_.edge(e);
    Color c = color_[e];
    if (c == 0) return;
    at_[id.u][c] = -1;
    at_[id.v][c] = -1;
    color_[e] = 0;
  }

  EdgeIndex edge(Vertex a, Vertex b) const { return *g_.find_edge(a, b); }

  // Swaps c and d along the maximal path leaving u on colour d.
  void invert_path(Vertex u, Color c, Color d) {
    std::vector<EdgeIndex> path;
    Vertex x = u;
    Color along = d;
    while (at_[x][along] != -1) {
      Vertex y = at_[x][along];
      path.push_back(edge(x, y));
      x = y;
      along = along == d ? c : d;
    }
    std::vector<Color> old;
    for (EdgeIndex e : path) {
      old.push_back(color_[e]);
      clear(e);
    }
    for (std::size_t i = 0; i < path.size(); ++i) paint(path[i], old[i] == c ? d : c);
  }

  void color_edge(EdgeIndex e) {
    const Vertex u = g_.edge(e).u;
    std::vector<Vertex> fan{g_.edge(e).v};
    std::vector<char> in_fan(g_.vertex_count(), 0);
    in_fan[fan[0]] = 1;
    for (bool grown = true; grown;) {
      grown = false;
      for (const Incidence& inc : g_.incident(u)) {
        Color c = color_[inc.edge];
        if (in_fan[inc.vertex] || c == 0 || !free_on(fan.back(), c)) continue;
        fan.push_back(inc.vertex);
        in_fan[inc.vertex] = 1;
        grown = true;
        break;
      }
    }

    const Color c = lowest_free(u);
    const Color d = lowest_free(fan.back());
    if (!free_on(u, d)) invert_path(u, c, d);

    std::size_t pivot = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        Color prev = color_[edge(u, fan[i])];
        if (prev == 0 || !free_on(fan[i - 1], prev)) break;
      }
      if (free_on(fan[i], d)) {
        pivot = i;
        break;
      }
    }
    if (pivot == fan.size()) throw InternalError("misra_gries: no rotation pivot in fan");

    std::vector<Color> shifted;
    for (std::size_t i = 1; i <= pivot; ++i) shifted.push_back(color_[edge(u, fan[i])]);
    for (std::size_t i = 1; i <= pivot; ++i) clear(edge(u, fan[i]));
    for (std::size_t i = 0; i < pivot; ++i) paint(edge(u, fan[i]), shifted[i]);
    paint(edge(u, fan[pivot]), d);
  }

  const Graph& g_;
  int palette_;
  std::vector<Color> color_;
  std::vector<std::vector<Vertex>> at_;
};

}  // namespace

EdgeColoring misra_gries(const Graph& g) {
  std::vector<Color> raw = FanColorer(g).run();
  std::vector<Color> relabel(g.max_degree() + 2, 0);
  for (Color c : raw) relabel[c] = 1;
  Color next = 0;
  for (auto& slot : relabel)
    if (slot) slot = ++next;
  for (Color& c : raw) c = relabel[c];
  return EdgeColoring(std::move(raw));
}

std::vector<std::vector<EdgeIndex>> color_classes(const EdgeColoring& c, int padded_to) {
  auto palette = c.palette();
  if (padded_to < static_cast<int>(palette.size()) ||
      (!palette.empty() && palette.back() > padded_to))
    throw PreconditionError("color_classes: padded_to " + std::to_string(padded_to) +
                            " is smaller than the palette");
  std::vector<std::vector<EdgeIndex>> classes(padded_to);
  for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(c.size()); ++e)
    if (c[e] > 0) classes[c[e] - 1].push_back(e);
  return classes;
}

}  // namespace avdc
