#pragma once

#include <cstdint>
#include <random>

#include "avdc/graph.hpp"

namespace avdc {

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();

// Pairing model on n*r points. Points are matched one pair at a time among
// pairs that keep the graph simple; a dead end discards the sample. Throws
// PreconditionError on bad parameters and Error once max_attempts samples
// have been discarded.
Graph random_regular_graph(int n, int r, std::uint64_t seed, int max_attempts = 10000);

// Erdős–Rényi G(n, p).
Graph gnp_graph(int n, double p, std::uint64_t seed);

// Platform-independent draws on top of mt19937_64 (the standard
// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <class It>
  void shuffle(It first, It last) {
    for (auto n = last - first; n > 1; --n)
      std::iter_swap(first + (n - 1), first + static_cast<std::ptrdiff_t>(below(n)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace avdc
