#include "avdc/avd.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <nlohmann/json.hpp>

#include "avdc/errors.hpp"
#include "avdc/generators.hpp"
#include "avdc/verify.hpp"

namespace avdc {
namespace {

using Mask = std::uint64_t;
constexpr int kMaxBudget = 63;

Mask bit(Color c) { return Mask{1} << c; }

std::string graph_dump(const Graph& g, const std::string& reason) {
  nlohmann::json edges = nlohmann::json::array();
  for (const EdgeId& e : g.edges()) edges.push_back({e.u, e.v});
  return nlohmann::json{{"reason", reason}, {"graph", {{"n", g.vertex_count()}, {"edges", edges}}}}
      .dump(2);
}

void require_normal(const Graph& g, const char* who) {
  if (!is_normal(g)) throw NotNormalError(std::string(who) + ": graph is not normal");
}

// Vertex-grouped depth-first edge order. With a nonzero seed the vertex
// priorities are shuffled.
std::vector<EdgeIndex> edge_order(const Graph& g, std::uint64_t seed) {
  const int n = g.vertex_count();
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  if (seed != 0) Rng(seed).shuffle(rank.begin(), rank.end());
  std::vector<Vertex> by_rank(n);
  for (Vertex v = 0; v < n; ++v) by_rank[rank[v]] = v;

  std::vector<char> seen(n, 0), listed(g.edge_count(), 0);
  std::vector<EdgeIndex> order;
  order.reserve(g.edge_count());
  std::vector<Vertex> stack;
  for (Vertex root : by_rank) {
    if (seen[root]) continue;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = 1;
      std::vector<Incidence> inc(g.incident(v).begin(), g.incident(v).end());
      std::sort(inc.begin(), inc.end(), [&](const Incidence& a, const Incidence& b) {
        return rank[a.vertex] < rank[b.vertex];
      });
      for (const Incidence& i : inc)
        if (!listed[i.edge]) {
          listed[i.edge] = 1;
          order.push_back(i.edge);
        }
      for (auto it = inc.rbegin(); it != inc.rend(); ++it)
        if (!seen[it->vertex]) stack.push_back(it->vertex);
    }
  }
  return order;
}

class BudgetSearch {
 public:
  BudgetSearch(const Graph& g, int budget, const SearchOptions& options)
      : g_(g),
        budget_(budget),
        full_((budget >= 63 ? ~Mask{0} : (bit(budget + 1) - 1)) & ~Mask{1}),
        cap_(options.node_cap),
        order_(edge_order(g, options.seed)),
        color_(g.edge_count(), 0),
        used_(g.vertex_count(), 0),
        remaining_(g.vertex_count()),
        twins_(g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      remaining_[v] = g.degree(v);
      for (const Incidence& inc : g.incident(v))
        if (g.degree(inc.vertex) == g.degree(v)) twins_[v].push_back(inc.vertex);
    }
  }

  BudgetStatus run() {
    if (budget_ < g_.max_degree()) return BudgetStatus::Unsatisfiable;
    // Two adjacent vertices of degree == budget both see the whole palette.
    for (const EdgeId& e : g_.edges())
      if (g_.degree(e.u) == budget_ && g_.degree(e.v) == budget_)
        return BudgetStatus::Unsatisfiable;
    if (dfs(0, 0)) return BudgetStatus::Satisfiable;
    return capped_ ? BudgetStatus::CapExceeded : BudgetStatus::Unsatisfiable;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Color>& colors() const { return color_; }

 private:
  void assign(EdgeIndex e, Color c) {
    const EdgeId& id = g_.edge(e);
    color_[e] = c;
    used_[id.u] |= bit(c);
    used_[id.v] |= bit(c);
    --remaining_[id.u];
    --remaining_[id.v];
  }

  void unassign(EdgeIndex e) {
    const EdgeId& id = g_.edge(e);
    used_[id.u] &= ~bit(color_[e]);
    used_[id.v] &= ~bit(color_[e]);
    ++remaining_[id.u];
    ++remaining_[id.v];
    color_[e] = 0;
  }

  // Colours still open for an uncoloured edge, including the rule that a
  // vertex's last edge must not complete a set equal to a finished twin's.
  Mask domain(EdgeIndex f) const {
    const EdgeId& id = g_.edge(f);
    Mask dom = full_ & ~(used_[id.u] | used_[id.v]);
    for (Vertex p : {id.u, id.v}) {
      if (remaining_[p] != 1) continue;
      const Vertex q = id.other(p);
      for (Vertex x : twins_[p]) {
        if (x == q) {
          if (remaining_[q] == 1 && used_[p] == used_[q]) return 0;
          continue;
        }
        if (remaining_[x] != 0) continue;
        Mask missing = used_[x] & ~used_[p];
        if (std::has_single_bit(missing) && (used_[p] & ~used_[x]) == 0) dom &= ~missing;
      }
    }
    return dom;
  }

  bool last_edge_open(Vertex x) const {
    for (const Incidence& inc : g_.incident(x))
      if (color_[inc.edge] == 0) return domain(inc.edge) != 0;
    return true;
  }

  bool consistent(EdgeIndex e) const {
    const EdgeId& id = g_.edge(e);
    for (Vertex w : {id.u, id.v}) {
      if (remaining_[w] == 0) {
        for (Vertex x : twins_[w]) {
          if (remaining_[x] == 0 && used_[x] == used_[w]) return false;
          if (remaining_[x] == 1 && !last_edge_open(x)) return false;
        }
      }
      for (const Incidence& inc : g_.incident(w))
        if (color_[inc.edge] == 0 && domain(inc.edge) == 0) return false;
    }
    return true;
  }

  bool dfs(std::size_t pos, Color max_used) {
    if (pos == order_.size()) return true;
    const EdgeIndex e = order_[pos];
    const Mask open = domain(e);
    const Color limit = std::min<Color>(budget_, max_used + 1);
    for (Color c = 1; c <= limit; ++c) {
      if (!(open & bit(c))) continue;
      if (cap_ != 0 && nodes_ >= cap_) {
        capped_ = true;
        return false;
      }
      ++nodes_;
      assign(e, c);
      if (consistent(e) && dfs(pos + 1, std::max(max_used, c))) return true;
      unassign(e);
      if (capped_) return false;
    }
    return false;
  }

  const Graph& g_;
  const int budget_;
  const Mask full_;
  const std::uint64_t cap_;
  std::vector<EdgeIndex> order_;
  std::vector<Color> color_;
  std::vector<Mask> used_;
  std::vector<int> remaining_;
  std::vector<std::vector<Vertex>> twins_;
  std::uint64_t nodes_ = 0;
  bool capped_ = false;
};

}  // namespace

int general_bound(int max_degree) { return 5 * (max_degree + 2) / 2; }
int regular_bound(int r) { return (5 * r + 37) / 3; }

AvdCertificate make_certificate(const Graph& g, EdgeColoring coloring, int bound,
                                std::string rule) {
  if (coloring.size() != static_cast<std::size_t>(g.edge_count()) || !coloring.complete())
    throw IncompleteColoringError("make_certificate: colouring does not cover every edge");
  std::vector<Mask> sets(g.vertex_count(), 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Color c = coloring[e];
    if (c > kMaxBudget) throw PreconditionError("make_certificate: colour label above 63");
    const EdgeId& id = g.edge(e);
    if ((sets[id.u] | sets[id.v]) & bit(c))
      throw ImproperColoringError("make_certificate: colour " + std::to_string(c) +
                                  " repeats at an endpoint of edge " + std::to_string(id.u) +
                                  "-" + std::to_string(id.v));
    sets[id.u] |= bit(c);
    sets[id.v] |= bit(c);
  }
  AvdCertificate cert;
  for (const EdgeId& e : g.edges()) {
    if (g.degree(e.u) != g.degree(e.v)) continue;
    const Mask diff = sets[e.u] ^ sets[e.v];
    if (diff == 0)
      throw ImproperColoringError("make_certificate: vertices " + std::to_string(e.u) + " and " +
                                  std::to_string(e.v) + " see the same colour set");
    cert.witnesses.push_back({e, std::countr_zero(diff)});
  }
  cert.colors_used = coloring.palette_size();
  if (cert.colors_used > bound)
    throw ImproperColoringError("make_certificate: " + std::to_string(cert.colors_used) +
                                " colours exceed the bound " + std::to_string(bound));
  cert.coloring = std::move(coloring);
  cert.bound_claimed = bound;
  cert.bound_rule = std::move(rule);
  return cert;
}

BudgetOutcome avd_color_budget(const Graph& g, int budget, const SearchOptions& options) {
  require_normal(g, "avd_color_budget");
  if (budget < 1 || budget > kMaxBudget)
    throw PreconditionError("avd_color_budget: budget must be in 1..63");
  BudgetSearch search(g, budget, options);
  BudgetOutcome out;
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.status == BudgetStatus::Satisfiable)
    out.certificate = make_certificate(g, EdgeColoring(search.colors()), budget, "budget");
  return out;
}

AvdCertificate avd_color_ascending(const Graph& g, int hi, std::string rule,
                                   const ColorOptions& options) {
  require_normal(g, "avd_color_ascending");
  const int lo = std::max(1, g.max_degree());
  for (int b = lo; b < hi; ++b) {
    auto probe = avd_color_budget(g, b, {options.probe_cap, 0});
    if (probe.status == BudgetStatus::Satisfiable) {
      AvdCertificate cert = std::move(*probe.certificate);
      cert.bound_claimed = hi;
      cert.bound_rule = rule;
      return cert;
    }
  }
  for (int attempt = 0; attempt <= options.restarts; ++attempt) {
    SearchOptions search;
    search.node_cap = options.final_cap == 0 ? 0 : options.final_cap << std::min(attempt, 20);
    search.seed = attempt == 0 ? 0 : options.seed * 0x9e3779b97f4a7c15ULL + attempt;
    auto outcome = avd_color_budget(g, hi, search);
    if (outcome.status == BudgetStatus::Satisfiable) {
      AvdCertificate cert = std::move(*outcome.certificate);
      cert.bound_rule = rule;
      return cert;
    }
    if (outcome.status == BudgetStatus::Unsatisfiable)
      throw InternalBoundViolation("no AVD colouring with " + std::to_string(hi) +
                                       " colours exists, contradicting the " + rule + " bound",
                                   graph_dump(g, "budget " + std::to_string(hi) + " unsatisfiable"));
    if (search.node_cap == 0) break;
  }
  throw SearchBudgetExhausted("exact search hit its node cap on every restart at budget " +
                              std::to_string(hi));
}

AvdCertificate avd_subcubic(const Graph& g, const ColorOptions& options) {
  require_normal(g, "avd_subcubic");
  if (g.max_degree() > 3) throw PreconditionError("avd_subcubic: max degree exceeds 3");
  return avd_color_ascending(g, 5, "subcubic", options);
}

AvdCertificate compose(const Graph& host, std::span<const PartCertificate> parts) {
  std::vector<int> owner(host.edge_count(), -1);
  std::vector<Color> colors(host.edge_count(), 0);
  int offset = 0;
  int bound = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const InducedSubgraph& part = parts[i].part;
    const AvdCertificate& cert = parts[i].certificate;
    if (!is_normal(part.graph))
      throw PreconditionError("compose: part " + std::to_string(i) + " is not normal");
    if (cert.coloring.size() != static_cast<std::size_t>(part.graph.edge_count()) ||
        !check_proper(part.graph, cert.coloring).ok || !check_avd(part.graph, cert.coloring).ok)
      throw PreconditionError("compose: certificate of part " + std::to_string(i) +
                              " is not a valid AVD colouring");
    auto palette = cert.coloring.palette();
    for (EdgeIndex e = 0; e < part.graph.edge_count(); ++e) {
      const EdgeId host_edge = part.host_edge(e);
      auto idx = host.find_edge(host_edge.u, host_edge.v);
      if (!idx) throw PreconditionError("compose: part edge is not a host edge");
      if (owner[*idx] != -1)
        throw PreconditionError("compose: parts " + std::to_string(owner[*idx]) + " and " +
                                std::to_string(i) + " share an edge");
      owner[*idx] = static_cast<int>(i);
      auto rank = std::lower_bound(palette.begin(), palette.end(), cert.coloring[e]) -
                  palette.begin();
      colors[*idx] = offset + static_cast<Color>(rank) + 1;
    }
    offset += static_cast<int>(palette.size());
    bound += cert.bound_claimed;
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    throw PreconditionError("compose: parts do not cover every host edge");
  return make_certificate(host, EdgeColoring(std::move(colors)), std::max(bound, offset),
                          "composed");
}

AvdCertificate avd_color(const Graph& g, const ColorOptions& options) {
  require_normal(g, "avd_color");
  const int delta = g.max_degree();
  const int bound = general_bound(delta);
  AvdCertificate cert;
  if (delta <= 3) {
    cert = avd_subcubic(g, options);
  } else if (delta <= 5) {
    cert = avd_color_ascending(g, 3 * delta, "three-delta", options);
  } else {
    EdgePartition split = partition_p2(g, options.engine);
    std::vector<PartCertificate> colored;
    for (std::size_t i = 0; i < split.size(); ++i) {
      InducedSubgraph part = split.part_graph(i);
      const int part_delta = part.graph.max_degree();
      if (i > 0 && part_delta > 3)
        throw InternalError("avd_color: peeled part has max degree above 3");
      AvdCertificate c = part_delta <= 3
                             ? avd_subcubic(part.graph, options)
                             : avd_color_ascending(part.graph, 3 * part_delta, "three-delta", options);
      colored.push_back({std::move(part), std::move(c)});
    }
    cert = compose(g, colored);
  }
  if (cert.colors_used > bound)
    throw InternalBoundViolation("avd_color: " + std::to_string(cert.colors_used) +
                                     " colours exceed floor(5(D+2)/2) = " + std::to_string(bound),
                                 graph_dump(g, "general bound exceeded"));
  cert.bound_claimed = bound;
  cert.bound_rule = "general";
  return cert;
}

AvdCertificate avd_color_regular(const Graph& g, const ColorOptions& options) {
  if (g.vertex_count() == 0 || !g.is_regular())
    throw PreconditionError("avd_color_regular: graph is not regular");
  const int r = g.max_degree();
  if (r < 2) throw PreconditionError("avd_color_regular: needs degree >= 2");
  require_normal(g, "avd_color_regular");
  const int bound = regular_bound(r);
  AvdCertificate cert;
  if (r <= 4) {
    cert = avd_color(g, options);
  } else {
    EdgePartition split = partition_regular(g);
    std::vector<PartCertificate> colored;
    for (std::size_t i = 0; i < split.size(); ++i) {
      InducedSubgraph part = split.part_graph(i);
      const int part_delta = part.graph.max_degree();
      AvdCertificate c = part_delta <= 3
                             ? avd_subcubic(part.graph, options)
                             : avd_color_ascending(part.graph, 3 * part_delta, "three-delta", options);
      colored.push_back({std::move(part), std::move(c)});
    }
    cert = compose(g, colored);
  }
  if (cert.colors_used > bound)
    throw InternalBoundViolation("avd_color_regular: " + std::to_string(cert.colors_used) +
                                     " colours exceed floor((5r+37)/3) = " + std::to_string(bound),
                                 graph_dump(g, "regular bound exceeded"));
  cert.bound_claimed = bound;
  cert.bound_rule = "regular";
  return cert;
}

}  // namespace avdc
