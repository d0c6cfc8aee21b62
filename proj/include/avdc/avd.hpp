#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "avdc/graph.hpp"
#include "avdc/partition.hpp"
#include "avdc/vizing.hpp"

namespace avdc {

struct Witness {
  EdgeId edge;
  Color color;  // in exactly one of the two incident colour sets
  friend bool operator==(const Witness&, const Witness&) = default;
};

// A proper, adjacent-vertex-distinguishing edge colouring together with the
// bound it was produced under. Witnesses cover every edge whose endpoints
// have equal degree; other adjacent pairs differ by set size.
struct AvdCertificate {
  EdgeColoring coloring;
  int colors_used = 0;
  int bound_claimed = 0;
  std::string bound_rule;
  std::vector<Witness> witnesses;
};

// Builds witnesses for an AVD colouring. Throws ImproperColoringError if the
// colouring is not proper and AVD, or uses more than `bound` colours.
AvdCertificate make_certificate(const Graph& g, EdgeColoring coloring, int bound,
                                std::string rule);

// floor(5(Δ+2)/2)
int general_bound(int max_degree);
// floor((5r+37)/3)
int regular_bound(int r);

// ---- exact search ---------------------------------------------------------

struct SearchOptions {
  std::uint64_t node_cap = 0;  // 0 = unbounded
  std::uint64_t seed = 0;      // nonzero randomises the edge order
};

enum class BudgetStatus { Satisfiable, Unsatisfiable, CapExceeded };

struct BudgetOutcome {
  BudgetStatus status = BudgetStatus::Unsatisfiable;
  std::optional<AvdCertificate> certificate;
  std::uint64_t nodes = 0;
};

// Complete backtracking over colourings with colours 1..budget. Edges are
// visited vertex by vertex in depth-first order from the lowest label; colours
// ascend, with a new colour allowed only as max-used + 1. Requires g normal.
BudgetOutcome avd_color_budget(const Graph& g, int budget, const SearchOptions& options = {});

// ---- drivers --------------------------------------------------------------

struct ColorOptions {
  std::uint64_t probe_cap = 20000;     // per budget below the guaranteed one
  std::uint64_t final_cap = 1000000;   // at the guaranteed budget; doubles per restart
  int restarts = 6;
  std::uint64_t seed = 1;
  EngineOptions engine;
};

// Tries budgets max_degree..hi ascending and returns the first success. Budgets
// below hi are probed under probe_cap; hi is guaranteed by theory, so a proof
// of unsatisfiability there raises InternalBoundViolation and running out of
// restarts raises SearchBudgetExhausted.
AvdCertificate avd_color_ascending(const Graph& g, int hi, std::string rule,
                                   const ColorOptions& options = {});

// At most 5 colours for normal graphs with Δ <= 3.
AvdCertificate avd_subcubic(const Graph& g, const ColorOptions& options = {});

struct PartCertificate {
  InducedSubgraph part;
  AvdCertificate certificate;
};

// Shifts each part's palette onto a fresh consecutive range (in part order)
// and unions the colourings. Parts must be normal, valid, and partition E(host).
AvdCertificate compose(const Graph& host, std::span<const PartCertificate> parts);

// At most floor(5(Δ+2)/2) colours for every normal graph.
AvdCertificate avd_color(const Graph& g, const ColorOptions& options = {});

// At most floor((5r+37)/3) colours for r-regular graphs, r >= 2.
AvdCertificate avd_color_regular(const Graph& g, const ColorOptions& options = {});

}  // namespace avdc
