#include "avdc/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "avdc/errors.hpp"
#include "avdc/partition.hpp"

namespace avdc {
namespace {

std::string edge_text(const EdgeId& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

std::string set_text(const std::vector<Color>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void require_complete(const Graph& g, const EdgeColoring& c) {
  if (c.size() != static_cast<std::size_t>(g.edge_count()))
    throw IncompleteColoringError("colouring has " + std::to_string(c.size()) +
                                  " entries for " + std::to_string(g.edge_count()) + " edges");
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (c[e] <= 0)
      throw IncompleteColoringError("edge " + edge_text(g.edge(e)) + " has no colour");
}

std::vector<std::vector<Color>> incident_sets(const Graph& g, const EdgeColoring& c) {
  std::vector<std::vector<Color>> sets(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    sets[g.edge(e).u].push_back(c[e]);
    sets[g.edge(e).v].push_back(c[e]);
  }
  for (auto& s : sets) std::sort(s.begin(), s.end());
  return sets;
}

// Plain exhaustive search over colourings of the edges in index order. The
// first edge is fixed to colour 1 and a new colour may only be max + 1.
class Brute {
 public:
  Brute(const Graph& g, int budget, bool avd)
      : g_(g), budget_(budget), avd_(avd), color_(g.edge_count(), 0),
        left_(g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) left_[v] = g.degree(v);
  }

  bool run() { return g_.edge_count() == 0 || step(0, 0); }

 private:
  bool clashes(EdgeIndex e, Color c) const {
    for (Vertex w : {g_.edge(e).u, g_.edge(e).v})
      for (const Incidence& inc : g_.incident(w))
        if (inc.edge != e && color_[inc.edge] == c) return true;
    return false;
  }

  std::vector<Color> set_of(Vertex v) const {
    std::vector<Color> s;
    for (const Incidence& inc : g_.incident(v)) s.push_back(color_[inc.edge]);
    std::sort(s.begin(), s.end());
    return s;
  }

  // Every pair of adjacent, fully coloured vertices around e differs.
  bool distinguished(EdgeIndex e) const {
    for (Vertex w : {g_.edge(e).u, g_.edge(e).v}) {
      if (left_[w] != 0) continue;
      auto sw = set_of(w);
      for (const Incidence& inc : g_.incident(w))
        if (left_[inc.vertex] == 0 && set_of(inc.vertex) == sw) return false;
    }
    return true;
  }

  bool step(EdgeIndex e, Color max_used) {
    if (e == g_.edge_count()) return true;
    const Color top = e == 0 ? 1 : std::min(budget_, max_used + 1);
    for (Color c = 1; c <= top; ++c) {
      if (clashes(e, c)) continue;
      color_[e] = c;
      --left_[g_.edge(e).u];
      --left_[g_.edge(e).v];
      const bool ok = (!avd_ || distinguished(e)) && step(e + 1, std::max(max_used, c));
      ++left_[g_.edge(e).u];
      ++left_[g_.edge(e).v];
      color_[e] = 0;
      if (ok) return true;
    }
    return false;
  }

  const Graph& g_;
  const int budget_;
  const bool avd_;
  std::vector<Color> color_;
  std::vector<int> left_;
};

void require_edge_cap(const Graph& g, int edge_cap, const char* who) {
  if (g.edge_count() > edge_cap)
    throw PreconditionError(std::string(who) + ": " + std::to_string(g.edge_count()) +
                            " edges exceed the oracle cap of " + std::to_string(edge_cap));
}

using DegreeMap = std::map<Vertex, int>;

DegreeMap degrees_of(const std::vector<EdgeId>& edges) {
  DegreeMap d;
  for (const EdgeId& e : edges) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

int max_of(const DegreeMap& d) {
  int m = 0;
  for (const auto& [v, k] : d) m = std::max(m, k);
  return m;
}

bool normal_edges(const std::vector<EdgeId>& edges) {
  if (edges.empty()) return false;
  DegreeMap d = degrees_of(edges);
  for (const EdgeId& e : edges)
    if (d[e.u] == 1 && d[e.v] == 1) return false;
  return true;
}

CheckEntry entry(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, std::move(detail)};
}

CheckEntry disjoint_covering(const Graph& g, const std::vector<std::vector<EdgeId>>& parts) {
  std::set<EdgeId> seen;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const EdgeId& raw : parts[i]) {
      EdgeId e = EdgeId::make(raw.u, raw.v);
      if (!g.has_edge(e.u, e.v))
        return entry("parts disjoint and covering", false,
                     "part " + std::to_string(i) + " has non-edge " + edge_text(e));
      if (!seen.insert(e).second)
        return entry("parts disjoint and covering", false,
                     "edge " + edge_text(e) + " appears twice");
    }
  if (seen.size() != static_cast<std::size_t>(g.edge_count()))
    return entry("parts disjoint and covering", false,
                 std::to_string(g.edge_count() - static_cast<int>(seen.size())) +
                     " host edges uncovered");
  return entry("parts disjoint and covering", true);
}

void part_checks(std::vector<CheckEntry>& out, const std::vector<std::vector<EdgeId>>& parts,
                 const std::vector<std::string>& names, const std::vector<int>& limits) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int d = max_of(degrees_of(parts[i]));
    out.push_back(entry("max_degree(" + names[i] + ") <= " + std::to_string(limits[i]),
                        d <= limits[i], "max_degree=" + std::to_string(d)));
    out.push_back(entry(names[i] + " normal", normal_edges(parts[i])));
  }
}

std::string part_name(std::size_t i) { return "G" + std::to_string(i); }

template <class F>
void attempt(std::vector<CheckEntry>& checks, const std::string& stage, F&& body) {
  try {
    body();
  } catch (const CounterexampleFound& e) {
    checks.push_back(entry(stage, false, std::string("counterexample: ") + e.what()));
  } catch (const std::exception& e) {
    checks.push_back(entry(stage, false, e.what()));
  }
}

}  // namespace

ProperCheck check_proper(const Graph& g, const EdgeColoring& c) {
  require_complete(g, c);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::map<Color, EdgeIndex> first;
    for (const Incidence& inc : g.incident(v)) {
      auto [it, fresh] = first.emplace(c[inc.edge], inc.edge);
      if (!fresh) return {false, std::make_pair(g.edge(it->second), g.edge(inc.edge)), c[inc.edge]};
    }
  }
  return {};
}

AvdCheck check_avd(const Graph& g, const EdgeColoring& c) {
  ProperCheck proper = check_proper(g, c);
  if (!proper.ok)
    throw ImproperColoringError("edges " + edge_text(proper.conflict->first) + " and " +
                                edge_text(proper.conflict->second) + " share colour " +
                                std::to_string(proper.color));
  auto sets = incident_sets(g, c);
  for (const EdgeId& e : g.edges())
    if (sets[e.u] == sets[e.v]) return {false, e, sets[e.u]};
  return {};
}

std::optional<int> exact_chi_a(const Graph& g, int color_cap, int edge_cap) {
  if (!is_normal(g)) throw NotNormalError("exact_chi_a: graph is not normal");
  require_edge_cap(g, edge_cap, "exact_chi_a");
  const int cap = color_cap > 0 ? color_cap : g.edge_count();
  for (int k = std::max(1, g.max_degree()); k <= cap; ++k)
    if (Brute(g, k, true).run()) return k;
  return std::nullopt;
}

int exact_chromatic_index(const Graph& g, int edge_cap) {
  require_edge_cap(g, edge_cap, "exact_chromatic_index");
  if (g.edge_count() == 0) return 0;
  for (int k = g.max_degree();; ++k)
    if (Brute(g, k, false).run()) return k;
}

bool all_pass(const std::vector<CheckEntry>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.pass; });
}

std::vector<CheckEntry> verify_certificate(const Graph& g, const AvdCertificate& cert) {
  std::vector<CheckEntry> out;
  const EdgeColoring& c = cert.coloring;
  try {
    require_complete(g, c);
  } catch (const IncompleteColoringError& e) {
    out.push_back(entry("complete", false, e.what()));
    return out;
  }
  out.push_back(entry("complete", true));

  ProperCheck proper = check_proper(g, c);
  out.push_back(entry("proper", proper.ok,
                      proper.ok ? "" : "edges " + edge_text(proper.conflict->first) + " and " +
                                           edge_text(proper.conflict->second) + " share colour " +
                                           std::to_string(proper.color)));
  if (!proper.ok) return out;

  AvdCheck avd = check_avd(g, c);
  out.push_back(entry("adjacent vertex distinguishing", avd.ok,
                      avd.ok ? "" : "vertices " + edge_text(*avd.pair) + " both see " +
                                        set_text(avd.shared_set)));

  std::set<Color> distinct(c.colors().begin(), c.colors().end());
  const int used = static_cast<int>(distinct.size());
  out.push_back(entry("colors_used matches colouring", used == cert.colors_used,
                      "distinct=" + std::to_string(used) +
                          " claimed=" + std::to_string(cert.colors_used)));
  out.push_back(entry("colors_used <= bound_claimed", used <= cert.bound_claimed,
                      std::to_string(used) + " <= " + std::to_string(cert.bound_claimed)));

  auto sets = incident_sets(g, c);
  std::set<EdgeId> witnessed;
  std::string bad;
  for (const Witness& w : cert.witnesses) {
    const EdgeId e = EdgeId::make(w.edge.u, w.edge.v);
    if (!g.has_edge(e.u, e.v)) {
      bad = "witness on non-edge " + edge_text(e);
      break;
    }
    const bool in_u = std::binary_search(sets[e.u].begin(), sets[e.u].end(), w.color);
    const bool in_v = std::binary_search(sets[e.v].begin(), sets[e.v].end(), w.color);
    if (in_u == in_v) {
      bad = "colour " + std::to_string(w.color) + " does not separate " + edge_text(e);
      break;
    }
    witnessed.insert(e);
  }
  if (bad.empty())
    for (const EdgeId& e : g.edges())
      if (g.degree(e.u) == g.degree(e.v) && !witnessed.count(e)) {
        bad = "no witness for equal-degree edge " + edge_text(e);
        break;
      }
  out.push_back(entry("witnesses valid", bad.empty(), bad));
  return out;
}

std::vector<CheckEntry> check_partition_p1(const Graph& g,
                                           const std::vector<std::vector<EdgeId>>& parts) {
  std::vector<CheckEntry> out;
  const int delta = g.max_degree();
  out.push_back(entry("two parts", parts.size() == 2, std::to_string(parts.size()) + " parts"));
  if (parts.size() != 2) return out;
  out.push_back(disjoint_covering(g, parts));
  part_checks(out, parts, {"H", "Hbar"}, {3, delta - 2});
  return out;
}

std::vector<CheckEntry> check_partition_p2(const Graph& g,
                                           const std::vector<std::vector<EdgeId>>& parts) {
  std::vector<CheckEntry> out;
  const int delta = g.max_degree();
  out.push_back(entry("at least one part", !parts.empty()));
  if (parts.empty()) return out;
  const int k = static_cast<int>(parts.size()) - 1;
  const int k_max = delta <= 5 ? 0 : delta / 2 - 2;
  out.push_back(entry("k <= " + std::to_string(k_max), k <= k_max, "k=" + std::to_string(k)));
  out.push_back(disjoint_covering(g, parts));
  std::vector<std::string> names;
  std::vector<int> limits;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    names.push_back(part_name(i));
    limits.push_back(i == 0 ? 5 : 3);
  }
  part_checks(out, parts, names, limits);
  return out;
}

std::vector<CheckEntry> check_partition_regular(const Graph& g,
                                                const std::vector<std::vector<EdgeId>>& parts) {
  std::vector<CheckEntry> out;
  const int r = g.max_degree();
  if (r < 5) {
    out.push_back(entry("degree >= 5", false, "r=" + std::to_string(r)));
    return out;
  }
  std::vector<int> sizes;
  switch (r % 3) {
    case 2: sizes.assign((r + 1) / 3, 3); break;
    case 1: sizes = {4, 4}; sizes.resize(2 + (r - 7) / 3, 3); break;
    default: sizes = {4}; sizes.resize(1 + (r - 3) / 3, 3); break;
  }
  out.push_back(entry("part count " + std::to_string(sizes.size()), parts.size() == sizes.size(),
                      std::to_string(parts.size()) + " parts"));
  if (parts.size() != sizes.size()) return out;
  out.push_back(disjoint_covering(g, parts));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < parts.size(); ++i) names.push_back(part_name(i));
  part_checks(out, parts, names, sizes);
  return out;
}

GraphSummary summarize(const Graph& g) {
  GraphSummary s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  s.max_degree = g.max_degree();
  s.min_degree = s.n ? g.min_degree() : 0;
  s.regular = s.n > 0 && g.is_regular();
  return s;
}

AuditReport audit(const Graph& g, const AuditOptions& options) {
  AuditReport report;
  report.graph = summarize(g);
  auto& checks = report.checks;
  if (!is_normal(g)) {
    checks.push_back(entry("precondition: normal", false,
                           "graph has an isolated vertex or an isolated edge"));
    return report;
  }
  const int delta = g.max_degree();

  attempt(checks, "misra_gries", [&] {
    EdgeColoring c = misra_gries(g);
    const int used = c.palette_size();
    checks.push_back(entry("misra_gries proper", check_proper(g, c).ok));
    checks.push_back(entry("misra_gries colours <= max_degree+1", used <= delta + 1,
                           std::to_string(used) + " <= " + std::to_string(delta + 1)));
  });

  if (delta >= 6) {
    attempt(checks, "partition_p1", [&] {
      for (auto& c : check_partition_p1(g, partition_p1(g, options.color.engine).parts()))
        checks.push_back(entry("p1: " + c.name, c.pass, c.detail));
    });
  }
  if (delta >= 4) {
    attempt(checks, "partition_p2", [&] {
      for (auto& c : check_partition_p2(g, partition_p2(g, options.color.engine).parts()))
        checks.push_back(entry("p2: " + c.name, c.pass, c.detail));
    });
  }
  if (report.graph.regular && delta >= 5) {
    attempt(checks, "partition_regular", [&] {
      for (auto& c : check_partition_regular(g, partition_regular(g).parts()))
        checks.push_back(entry("regular grouping: " + c.name, c.pass, c.detail));
    });
  }

  int certified = -1;
  attempt(checks, "avd_color", [&] {
    AvdCertificate cert = avd_color(g, options.color);
    for (auto& c : verify_certificate(g, cert))
      checks.push_back(entry("avd_color: " + c.name, c.pass, c.detail));
    const int bound = 5 * (delta + 2) / 2;
    checks.push_back(entry("avd_color within floor(5(D+2)/2)", cert.colors_used <= bound,
                           std::to_string(cert.colors_used) + " <= " + std::to_string(bound)));
    report.bound_table.push_back({"general", bound, cert.colors_used});
    certified = cert.colors_used;
  });
  if (delta <= 3) {
    attempt(checks, "avd_subcubic", [&] {
      AvdCertificate cert = avd_subcubic(g, options.color);
      for (auto& c : verify_certificate(g, cert))
        checks.push_back(entry("avd_subcubic: " + c.name, c.pass, c.detail));
      checks.push_back(entry("avd_subcubic within 5", cert.colors_used <= 5,
                             std::to_string(cert.colors_used) + " <= 5"));
      report.bound_table.push_back({"subcubic", 5, cert.colors_used});
    });
  }
  if (report.graph.regular) {
    attempt(checks, "avd_color_regular", [&] {
      AvdCertificate cert = avd_color_regular(g, options.color);
      for (auto& c : verify_certificate(g, cert))
        checks.push_back(entry("avd_color_regular: " + c.name, c.pass, c.detail));
      const int bound = (5 * delta + 37) / 3;
      checks.push_back(entry("avd_color_regular within floor((5r+37)/3)", cert.colors_used <= bound,
                             std::to_string(cert.colors_used) + " <= " + std::to_string(bound)));
      report.bound_table.push_back({"regular", bound, cert.colors_used});
    });
  }

  if (g.edge_count() <= options.oracle_edge_cap) {
    attempt(checks, "oracle", [&] {
      const int chi = exact_chromatic_index(g, options.oracle_edge_cap);
      const int chi_a = *exact_chi_a(g, 0, options.oracle_edge_cap);
      checks.push_back(entry("chromatic index in {D, D+1}", chi == delta || chi == delta + 1,
                             "chi'=" + std::to_string(chi)));
      checks.push_back(entry("D <= chi' <= chi'_a", delta <= chi && chi <= chi_a,
                             std::to_string(delta) + " <= " + std::to_string(chi) + " <= " +
                                 std::to_string(chi_a)));
      if (certified >= 0)
        checks.push_back(entry("chi'_a <= certificate colours", chi_a <= certified,
                               std::to_string(chi_a) + " <= " + std::to_string(certified)));
      report.bound_table.push_back({"oracle chi'_a", chi_a, certified >= 0 ? certified : chi_a});
    });
  } else {
    report.notes.push_back("oracle skipped: " + std::to_string(g.edge_count()) +
                           " edges exceed the cap of " + std::to_string(options.oracle_edge_cap) +
                           "; bound and certificate checks only");
  }
  return report;
}

}  // namespace avdc
