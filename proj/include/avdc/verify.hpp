#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avdc/avd.hpp"
#include "avdc/edge_partition.hpp"
#include "avdc/graph.hpp"
#include "avdc/vizing.hpp"

namespace avdc {

// The checkers and oracles here are written from the definitions alone and do
// not call into the colouring or partition code they are used to validate.

struct ProperCheck {
  bool ok = true;
  std::optional<std::pair<EdgeId, EdgeId>> conflict;  // two incident edges
  Color color = 0;                                    // their shared colour
};

// Throws IncompleteColoringError if some edge has no colour.
ProperCheck check_proper(const Graph& g, const EdgeColoring& c);

struct AvdCheck {
  bool ok = true;
  std::optional<EdgeId> pair;     // adjacent vertices with equal sets
  std::vector<Color> shared_set;  // the set both of them see
};

// Throws IncompleteColoringError or ImproperColoringError on bad input.
AvdCheck check_avd(const Graph& g, const EdgeColoring& c);

constexpr int kDefaultOracleEdgeCap = 16;

// Smallest k <= color_cap (0 means |E|) admitting an AVD k-colouring, or
// nullopt when none does. Throws NotNormalError, and PreconditionError when
// |E| > edge_cap.
std::optional<int> exact_chi_a(const Graph& g, int color_cap = 0,
                               int edge_cap = kDefaultOracleEdgeCap);

// Exact chromatic index. Throws PreconditionError when |E| > edge_cap.
int exact_chromatic_index(const Graph& g, int edge_cap = kDefaultOracleEdgeCap);

// ---- reports --------------------------------------------------------------

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<CheckEntry>& checks);

// Properness, AVD, colour count, bound and witnesses of a certificate.
std::vector<CheckEntry> verify_certificate(const Graph& g, const AvdCertificate& cert);

// Two parts H, Hbar: Δ(H) <= 3, Δ(Hbar) <= Δ-2, both normal, disjoint, covering.
std::vector<CheckEntry> check_partition_p1(const Graph& g,
                                           const std::vector<std::vector<EdgeId>>& parts);
// G_0..G_k: Δ(G_0) <= 5, Δ(G_i) <= 3, k <= floor(Δ/2)-2 (k = 0 for Δ <= 5).
std::vector<CheckEntry> check_partition_p2(const Graph& g,
                                           const std::vector<std::vector<EdgeId>>& parts);
// Block count and per-block Δ of the regular grouping.
std::vector<CheckEntry> check_partition_regular(const Graph& g,
                                                const std::vector<std::vector<EdgeId>>& parts);

struct GraphSummary {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  int min_degree = 0;
  bool regular = false;
};

GraphSummary summarize(const Graph& g);

struct BoundRow {
  std::string rule;
  int claimed = 0;
  int certified = 0;
};

struct AuditReport {
  GraphSummary graph;
  std::vector<CheckEntry> checks;
  std::vector<BoundRow> bound_table;
  std::vector<std::string> notes;

  bool pass() const { return all_pass(checks); }
};

struct AuditOptions {
  int oracle_edge_cap = kDefaultOracleEdgeCap;
  ColorOptions color;
};

// Runs every pipeline stage on g and records each check; never throws for
// library errors (they become failed entries).
AuditReport audit(const Graph& g, const AuditOptions& options = {});

}  // namespace avdc
