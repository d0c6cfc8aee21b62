#include "avdc/generators.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "avdc/errors.hpp"

namespace avdc {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  std::vector<EdgeId> edges;
  for (int i = 0; i < n; ++i) edges.push_back(EdgeId::make(i, (i + 1) % n));
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw PreconditionError("complete graph needs n >= 1");
  std::vector<EdgeId> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<EdgeId> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(EdgeId::make(i, (i + 1) % 5));
    edges.push_back(EdgeId::make(i, i + 5));
    edges.push_back(EdgeId::make(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, edges);
}

Graph random_regular_graph(int n, int r, std::uint64_t seed, int max_attempts) {
  if (n < 1 || r < 0 || r >= n || (static_cast<long long>(n) * r) % 2 != 0)
    throw PreconditionError("random_regular: need 0 <= r < n and n*r even (n=" +
                            std::to_string(n) + ", r=" + std::to_string(r) + ")");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<int> points;
    points.reserve(static_cast<std::size_t>(n) * r);
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < r; ++k) points.push_back(v);
    std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
    std::vector<EdgeId> edges;
    bool stuck = false;
    while (!points.empty() && !stuck) {
      // Rejection draws first; fall back to an exhaustive scan of legal pairs
      // when the remaining points are nearly saturated.
      bool paired = false;
      for (int tries = 0; tries < 64 && !paired; ++tries) {
        auto i = rng.below(points.size()), j = rng.below(points.size());
        int a = points[i], b = points[j];
        if (i == j || a == b || adjacent[a][b]) continue;
        adjacent[a][b] = adjacent[b][a] = 1;
        edges.push_back(EdgeId::make(a, b));
        if (i < j) std::swap(i, j);
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
        paired = true;
      }
      if (paired) continue;
      std::vector<std::pair<std::size_t, std::size_t>> legal;
      for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
          if (points[i] != points[j] && !adjacent[points[i]][points[j]]) legal.push_back({i, j});
      if (legal.empty()) {
        stuck = true;
        break;
      }
      auto [i, j] = legal[rng.below(legal.size())];
      int a = points[i], b = points[j];
      adjacent[a][b] = adjacent[b][a] = 1;
      edges.push_back(EdgeId::make(a, b));
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
    }
    if (!stuck) return Graph(n, edges);
  }
  throw Error("random_regular: retry budget of " + std::to_string(max_attempts) +
              " samples exhausted");
}

Graph gnp_graph(int n, double p, std::uint64_t seed) {
  if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw PreconditionError("gnp: need n >= 0, 0 <= p <= 1");
  Rng rng(seed);
  std::vector<EdgeId> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.unit() < p) edges.push_back({i, j});
  return Graph(n, edges);
}

}  // namespace avdc
