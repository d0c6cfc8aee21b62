#include "avdc/partition.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "avdc/errors.hpp"
#include "avdc/vizing.hpp"

namespace avdc {
namespace {

using json = nlohmann::json;

// Degree queries against one (graph, selection) state.
struct State {
  const Graph& g;
  const SubgraphSelection& sel;
  int delta;

  State(const Graph& graph, const SubgraphSelection& s)
      : g(graph), sel(s), delta(graph.max_degree()) {}

  int d(Vertex v) const { return g.degree(v); }
  int dh(Vertex v) const { return sel.degree(v); }
  int db(Vertex v) const { return sel.complement_degree(v); }
  bool in_h(EdgeIndex e) const { return sel.contains(e); }

  // The neighbour of v on the given side other than `skip`; v must have
  // exactly two neighbours on that side.
  Vertex other_neighbor(Vertex v, Vertex skip, bool h_side) const {
    for (const Incidence& inc : g.incident(v))
      if (in_h(inc.edge) == h_side && inc.vertex != skip) return inc.vertex;
    throw InternalError("other_neighbor: vertex " + std::to_string(v) + " has no second neighbour");
  }

  bool cond1(Vertex u) const { return dh(u) == 3; }
  bool cond2(Vertex u) const { return dh(u) == 2 && db(u) == 2; }
  bool cond3(Vertex v, Vertex u) const {
    if (!(dh(u) <= 1 && db(u) == 2)) return false;
    Vertex w = other_neighbor(u, v, false);
    return db(w) == 1 && dh(w) == 3;
  }
  bool cond4(Vertex v) const { return dh(v) >= 1 && dh(v) <= 2 && d(v) >= delta - 1; }
  bool cond5(Vertex u, Vertex v) const {
    if (!(dh(v) == 2 && d(v) < delta - 1)) return false;
    Vertex w = other_neighbor(v, u, true);
    return dh(w) == 1 && d(w) == delta - 1;
  }

  bool shape_one(Vertex v) const { return dh(v) >= 1 && dh(v) <= 2 && d(v) >= delta - 1; }
  bool shape_two(Vertex u) const { return dh(u) == 3 || (dh(u) == 2 && db(u) == 2); }

  bool type_one(Vertex v) const {
    if (!shape_one(v)) return false;
    for (const Incidence& inc : g.incident(v)) {
      if (in_h(inc.edge)) continue;
      Vertex u = inc.vertex;
      if (!(cond1(u) || cond2(u) || cond3(v, u))) return false;
    }
    return true;
  }

  bool type_two(Vertex u) const {
    if (!shape_two(u)) return false;
    for (const Incidence& inc : g.incident(u)) {
      if (!in_h(inc.edge)) continue;
      Vertex v = inc.vertex;
      if (!(cond4(v) || cond5(u, v))) return false;
    }
    return true;
  }

  EdgeIndex edge(Vertex a, Vertex b) const { return *g.find_edge(a, b); }
};

std::vector<Chain> chains_from(const State& s, Vertex from, ChainKind kind) {
  std::vector<Chain> out;
  const bool h_side = kind == ChainKind::H;
  for (const Incidence& inc : s.g.incident(from)) {
    if (s.in_h(inc.edge) != h_side) continue;
    Vertex x = inc.vertex;
    if (h_side) {
      if (s.cond4(x))
        out.push_back({kind, {from, x}});
      else if (s.cond5(from, x))
        out.push_back({kind, {from, x, s.other_neighbor(x, from, true)}});
    } else {
      if (s.cond1(x) || s.cond2(x))
        out.push_back({kind, {from, x}});
      else if (s.cond3(from, x))
        out.push_back({kind, {from, x, s.other_neighbor(x, from, false)}});
    }
  }
  return out;
}

std::string edge_text(const EdgeId& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

json edges_json(const std::vector<EdgeId>& edges) {
  json arr = json::array();
  for (const EdgeId& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

struct Candidate {
  std::vector<EdgeIndex> add;
  std::vector<EdgeIndex> remove;
  std::string witness;
  AlternatingChain path;
  bool direct_drop = false;
};

// Adds complement-chain edges and removes H-chain edges along a path.
void flip_path(const State& s, const AlternatingChain& path, Candidate& c) {
  for (const Chain& chain : path.chains) {
    auto& target = chain.kind == ChainKind::Complement ? c.add : c.remove;
    for (std::size_t i = 0; i + 1 < chain.vertices.size(); ++i)
      target.push_back(s.edge(chain.vertices[i], chain.vertices[i + 1]));
  }
  c.path = path;
}

std::optional<Potential> evaluate(const Graph& g, const SubgraphSelection& sel, Candidate& c,
                                  const Potential& before) {
  auto dedupe = [](std::vector<EdgeIndex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(c.add);
  dedupe(c.remove);
  if (c.add.empty() && c.remove.empty()) return std::nullopt;
  SubgraphSelection trial = sel;
  for (EdgeIndex e : c.add) {
    if (trial.contains(e)) return std::nullopt;
    trial.add(e);
  }
  for (EdgeIndex e : c.remove) {
    if (!trial.contains(e)) return std::nullopt;
    trial.remove(e);
  }
  if (!check_membership(g, trial).is_member) return std::nullopt;
  Potential after = potential(trial);
  if (!(after < before)) return std::nullopt;
  return after;
}

class MoveFinder {
 public:
  MoveFinder(const Graph& g, const SubgraphSelection& sel)
      : g_(g), sel_(sel), s_(g, sel), before_(potential(sel)) {}

  MoveSearch run() {
    std::optional<ChainClosure> first_failure;
    for (EdgeIndex e : sel_.isolated()) {
      auto r = from_isolated(e, false);
      if (std::holds_alternative<Move>(r)) return r;
      if (!first_failure) first_failure = std::get<ChainClosure>(std::move(r));
    }
    for (EdgeIndex e : sel_.complement_isolated()) {
      auto r = from_isolated(e, true);
      if (std::holds_alternative<Move>(r)) return r;
      if (!first_failure) first_failure = std::get<ChainClosure>(std::move(r));
    }
    return *first_failure;
  }

 private:
  struct Node {
    Vertex vertex;
    bool expect_one;
    int parent;
    Chain via;
    bool confirmed = false;
  };

  // Endpoint with the larger degree; the lower label on ties.
  Vertex orient(const EdgeId& e) const { return s_.d(e.v) > s_.d(e.u) ? e.v : e.u; }

  std::optional<Move> accept(Candidate& c) {
    auto after = evaluate(g_, sel_, c, before_);
    if (!after) {
      ++rejected_;
      return std::nullopt;
    }
    Move m;
    if (c.direct_drop)
      m.variant = MoveVariant::DropIsolatedHEdge;
    else if (c.remove.empty())
      m.variant = MoveVariant::AddComplementEdges;
    else if (c.add.empty())
      m.variant = MoveVariant::DropHEdges;
    else
      m.variant = MoveVariant::ChainSwap;
    for (EdgeIndex e : c.add) m.add_set.push_back(g_.edge(e));
    for (EdgeIndex e : c.remove) m.remove_set.push_back(g_.edge(e));
    m.witness = std::move(c.witness);
    m.version = sel_.version();
    m.before = before_;
    m.after = *after;
    m.path = std::move(c.path);
    return m;
  }

  MoveSearch from_isolated(EdgeIndex e, bool complement_side) {
    rejected_ = 0;
    const EdgeId& id = g_.edge(e);
    const Vertex origin = orient(id);
    const std::string side = complement_side ? "complement" : "H";
    if (!complement_side && s_.d(origin) <= s_.delta - 2) {
      Candidate c;
      c.remove = {e};
      c.direct_drop = true;
      c.witness = "isolated H-edge " + edge_text(id) + " has both ends below degree Δ-1: drop it";
      if (auto m = accept(c)) return *m;
    }
    if (complement_side && s_.dh(origin) <= 2) {
      Candidate c;
      c.add = {e};
      c.witness = "isolated complement edge " + edge_text(id) + " at vertex " +
                  std::to_string(origin) + " with d_H <= 2: move it into H";
      if (auto m = accept(c)) return *m;
    }
    return grow_closure(id, origin, complement_side, side);
  }

  AlternatingChain path_to(int node) const {
    AlternatingChain path;
    std::vector<Chain> rev;
    while (nodes_[node].parent >= 0) {
      rev.push_back(nodes_[node].via);
      node = nodes_[node].parent;
    }
    path.origin = nodes_[node].vertex;
    path.chains.assign(rev.rbegin(), rev.rend());
    return path;
  }

  MoveSearch grow_closure(const EdgeId& isolated, Vertex origin, bool complement_side,
                          const std::string& side) {
    nodes_.clear();
    node_of_.assign(g_.vertex_count(), -1);
    ChainClosure closure;
    closure.origin = origin;
    closure.isolated_edge = isolated;
    closure.complement_side = complement_side;

    nodes_.push_back({origin, !complement_side, -1, {}, false});
    node_of_[origin] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      const int idx = queue.front();
      queue.pop_front();
      const Vertex t = nodes_[idx].vertex;
      const bool expect_one = nodes_[idx].expect_one;
      const bool typed = expect_one ? s_.type_one(t) : s_.type_two(t);
      if (!typed) {
        ++closure.violations_seen;
        auto path = path_to(idx);
        auto m = expect_one ? repair_type_one(t, path, side) : repair_type_two(t, path, side);
        if (m) return *m;
        continue;
      }
      nodes_[idx].confirmed = true;
      (expect_one ? closure.v1_set : closure.v2_set).push_back(t);
      auto kind = expect_one ? ChainKind::Complement : ChainKind::H;
      for (Chain& chain : chains_from(s_, t, kind)) {
        const Vertex end = chain.end();
        if (expect_one ? !s_.shape_two(end) : !s_.shape_one(end))
          throw InternalError("chain end " + std::to_string(end) + " has the wrong degree shape");
        if (node_of_[end] != -1) continue;
        node_of_[end] = static_cast<int>(nodes_.size());
        nodes_.push_back({end, !expect_one, idx, std::move(chain), false});
        queue.push_back(node_of_[end]);
      }
    }
    std::sort(closure.v1_set.begin(), closure.v1_set.end());
    std::sort(closure.v2_set.begin(), closure.v2_set.end());
    closure.rejected_candidates = rejected_;
    return closure;
  }

  // t should be type I but has a complement neighbour x meeting none of (a)-(c).
  std::optional<Move> repair_type_one(Vertex t, const AlternatingChain& path,
                                      const std::string& side) {
    for (const Incidence& inc : g_.incident(t)) {
      if (s_.in_h(inc.edge)) continue;
      const Vertex x = inc.vertex;
      if (s_.cond1(x) || s_.cond2(x) || s_.cond3(t, x)) continue;
      Candidate c;
      flip_path(s_, path, c);
      c.add.push_back(inc.edge);
      std::string s_text = edge_text(g_.edge(inc.edge));
      if (s_.dh(x) <= 1 && s_.db(x) == 2) {
        Vertex y = s_.other_neighbor(x, t, false);
        if (s_.db(y) == 1) {
          c.add.push_back(s_.edge(x, y));
          s_text += "," + edge_text(EdgeId::make(x, y));
        }
      }
      c.witness = side + " origin " + std::to_string(path.origin) + ": type-I test fails at " +
                  std::to_string(t) + " via " + std::to_string(x) + " after " +
                  std::to_string(path.chains.size()) + " chains; add {" + s_text + "}";
      if (auto m = accept(c)) return m;
    }
    return std::nullopt;
  }

  // t should be type II but has an H-neighbour x meeting neither (d) nor (e).
  std::optional<Move> repair_type_two(Vertex t, const AlternatingChain& path,
                                      const std::string& side) {
    for (const Incidence& inc : g_.incident(t)) {
      if (!s_.in_h(inc.edge)) continue;
      const Vertex x = inc.vertex;
      if (s_.cond4(x) || s_.cond5(t, x)) continue;
      const std::string head = side + " origin " + std::to_string(path.origin) +
                               ": type-II test fails at " + std::to_string(t) + " via " +
                               std::to_string(x);

      // x is an already confirmed type-II chain end.
      const int xn = node_of_[x];
      if (xn != -1 && !nodes_[xn].expect_one && nodes_[xn].confirmed && s_.dh(t) == 2) {
        Candidate c;
        flip_path(s_, path_to(xn), c);
        c.remove.push_back(inc.edge);
        std::string s_text = edge_text(g_.edge(inc.edge));
        Vertex z = s_.other_neighbor(t, x, true);
        if (s_.dh(z) == 1) {
          c.remove.push_back(s_.edge(t, z));
          s_text += "," + edge_text(EdgeId::make(t, z));
        }
        c.witness = head + " (revisited type-II end); remove {" + s_text + "}";
        if (auto m = accept(c)) return m;
      }

      std::vector<EdgeIndex> drop{inc.edge};
      std::string s_text = edge_text(g_.edge(inc.edge));
      if (s_.dh(x) == 2 && s_.d(x) < s_.delta - 1) {
        Vertex y = s_.other_neighbor(x, t, true);
        if (s_.dh(y) == 1) {
          drop.push_back(s_.edge(x, y));
          s_text += "," + edge_text(EdgeId::make(x, y));
        }
      }
      if (s_.dh(t) == 3 && drop.size() == 1) {
        Candidate c;
        c.remove = drop;
        c.witness = head + "; drop {" + s_text + "}";
        if (auto m = accept(c)) return m;
      }
      Candidate c;
      flip_path(s_, path, c);
      c.remove.insert(c.remove.end(), drop.begin(), drop.end());
      c.witness = head + " after " + std::to_string(path.chains.size()) + " chains; remove {" +
                  s_text + "}";
      if (auto m = accept(c)) return m;
    }
    return std::nullopt;
  }

  const Graph& g_;
  const SubgraphSelection& sel_;
  State s_;
  Potential before_;
  std::vector<Node> nodes_;
  std::vector<int> node_of_;
  std::size_t rejected_ = 0;
};

json closure_dump(const Graph& g, const SubgraphSelection& sel, const ChainClosure& c) {
  json edges = json::array();
  for (const EdgeId& e : g.edges()) edges.push_back({e.u, e.v});
  json h = json::array();
  for (EdgeIndex e : sel.selected_edges()) h.push_back({g.edge(e).u, g.edge(e).v});
  return json{{"reason", "chain closure exhausted without a move"},
              {"graph", {{"n", g.vertex_count()}, {"edges", edges}}},
              {"selection", h},
              {"closure",
               {{"origin", c.origin},
                {"isolated_edge", {c.isolated_edge.u, c.isolated_edge.v}},
                {"complement_side", c.complement_side},
                {"v1", c.v1_set},
                {"v2", c.v2_set},
                {"violations_seen", c.violations_seen},
                {"rejected_candidates", c.rejected_candidates}}}};
}

std::vector<EdgeId> to_ids(const Graph& g, const std::vector<EdgeIndex>& idx) {
  std::vector<EdgeId> out;
  out.reserve(idx.size());
  for (EdgeIndex e : idx) out.push_back(g.edge(e));
  return out;
}

void require_normal(const Graph& g, const char* who) {
  if (!is_normal(g)) throw NotNormalError(std::string(who) + ": graph is not normal");
}

}  // namespace

MembershipReport check_membership(const Graph& g, const SubgraphSelection& sel) {
  MembershipReport report;
  const int delta = g.max_degree();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (sel.degree(v) > 3) report.violations.push_back({v, MembershipCondition::MaxDegree});
    if (g.degree(v) == delta && sel.degree(v) < 2)
      report.violations.push_back({v, MembershipCondition::FullVertex});
    else if (g.degree(v) == delta - 1 && sel.degree(v) < 1)
      report.violations.push_back({v, MembershipCondition::NearFullVertex});
  }
  report.is_member = report.violations.empty();
  return report;
}

bool is_type_one(const Graph& g, const SubgraphSelection& sel, Vertex v) {
  return State(g, sel).type_one(v);
}

bool is_type_two(const Graph& g, const SubgraphSelection& sel, Vertex u) {
  return State(g, sel).type_two(u);
}

VertexType classify_vertex(const Graph& g, const SubgraphSelection& sel, Vertex v) {
  State s(g, sel);
  if (s.type_one(v)) return VertexType::TypeI;
  if (s.type_two(v)) return VertexType::TypeII;
  return VertexType::Neither;
}

std::vector<Chain> enumerate_chains(const Graph& g, const SubgraphSelection& sel, Vertex from,
                                    ChainKind kind) {
  return chains_from(State(g, sel), from, kind);
}

Potential potential(const SubgraphSelection& sel) {
  return {sel.isolated().size() + sel.complement_isolated().size(), sel.size()};
}

MoveSearch find_move(const Graph& g, const SubgraphSelection& sel) {
  if (&sel.host() != &g && !(sel.host() == g))
    throw PreconditionError("find_move: selection belongs to a different graph");
  if (!check_membership(g, sel).is_member)
    throw PreconditionError("find_move: selection is not admissible");
  if (potential(sel).isolated == 0)
    throw PreconditionError("find_move: no isolated edges on either side");
  return MoveFinder(g, sel).run();
}

void apply_move(SubgraphSelection& sel, const Move& m) {
  if (m.version != sel.version())
    throw StaleMoveError("apply_move: selection changed since the move was found");
  const Graph& g = sel.host();
  std::vector<EdgeIndex> add, remove;
  for (const EdgeId& e : m.add_set) {
    EdgeIndex idx = g.edge_index(e);
    if (sel.contains(idx)) throw PreconditionError("apply_move: add_set edge already in H");
    add.push_back(idx);
  }
  for (const EdgeId& e : m.remove_set) {
    EdgeIndex idx = g.edge_index(e);
    if (!sel.contains(idx)) throw PreconditionError("apply_move: remove_set edge not in H");
    remove.push_back(idx);
  }
  const Potential before = potential(sel);
  for (EdgeIndex e : add) sel.add(e);
  for (EdgeIndex e : remove) sel.remove(e);
  const Potential after = potential(sel);
  if (!check_membership(g, sel).is_member || !(after < before)) {
    for (EdgeIndex e : remove) sel.add(e);
    for (EdgeIndex e : add) sel.remove(e);
    throw InternalError("apply_move: move '" + m.witness +
                        "' breaks admissibility or does not decrease the potential");
  }
}

SubgraphSelection initial_selection(const Graph& g) {
  require_normal(g, "initial_selection");
  if (g.max_degree() < 6) throw PreconditionError("initial_selection: needs max degree >= 6");
  auto classes = color_classes(misra_gries(g), g.max_degree() + 1);
  std::vector<EdgeIndex> first3;
  for (int i = 0; i < 3; ++i) first3.insert(first3.end(), classes[i].begin(), classes[i].end());
  SubgraphSelection sel(g, first3);
  if (!check_membership(g, sel).is_member)
    throw InternalError("initial_selection: first three colour classes are not admissible");
  return sel;
}

EdgePartition partition_p1(const Graph& g, const EngineOptions& options) {
  require_normal(g, "partition_p1");
  if (g.max_degree() < 6) throw PreconditionError("partition_p1: needs max degree >= 6");
  SubgraphSelection sel = initial_selection(g);
  const std::size_t cap =
      (potential(sel).isolated + 1) * (static_cast<std::size_t>(g.edge_count()) + 1) + 1;
  std::size_t step = 0;
  while (potential(sel).isolated > 0) {
    auto found = find_move(g, sel);
    if (auto* closure = std::get_if<ChainClosure>(&found)) {
      throw CounterexampleFound(
          "partition_p1: chain closure from vertex " + std::to_string(closure->origin) +
              " exhausted without an improving move",
          closure_dump(g, sel, *closure).dump(2));
    }
    const Move& m = std::get<Move>(found);
    apply_move(sel, m);
    ++step;
    if (options.trace) {
      json line{{"step", step},
                {"variant", move_variant_name(m.variant)},
                {"witness", m.witness},
                {"add", edges_json(m.add_set)},
                {"remove", edges_json(m.remove_set)},
                {"before", {m.before.isolated, m.before.h_edges}},
                {"after", {m.after.isolated, m.after.h_edges}}};
      *options.trace << line.dump() << '\n';
    }
    if (options.observer) options.observer(MoveRecord{step, &m, &sel});
    if (step > cap) throw InternalError("partition_p1: move count exceeded the potential bound");
  }
  return EdgePartition(g, {to_ids(g, sel.selected_edges()), to_ids(g, sel.complement_edges())});
}

namespace {

std::vector<std::vector<EdgeId>> peel(const Graph& g, const std::vector<Vertex>& to_host,
                                      const EngineOptions& options) {
  auto lift = [&](const std::vector<EdgeId>& part) {
    std::vector<EdgeId> out;
    out.reserve(part.size());
    for (const EdgeId& e : part) out.push_back(EdgeId::make(to_host[e.u], to_host[e.v]));
    return out;
  };
  if (g.max_degree() <= 5) return {lift(g.edges())};
  EdgePartition split = partition_p1(g, options);
  const auto& h = split.parts()[0];
  if (split.part_max_degree(1) <= 3) return {lift(h), lift(split.parts()[1])};
  InducedSubgraph rest = split.part_graph(1);
  std::vector<Vertex> rest_to_host;
  for (Vertex v : rest.to_host_vertex) rest_to_host.push_back(to_host[v]);
  auto parts = peel(rest.graph, rest_to_host, options);
  parts.push_back(lift(h));
  return parts;
}

}  // namespace

EdgePartition partition_p2(const Graph& g, const EngineOptions& options) {
  require_normal(g, "partition_p2");
  if (g.max_degree() < 4) throw PreconditionError("partition_p2: needs max degree >= 4");
  std::vector<Vertex> identity(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) identity[v] = v;
  return EdgePartition(g, peel(g, identity, options));
}

std::vector<int> regular_block_sizes(int r) {
  if (r < 5) throw PreconditionError("regular_block_sizes: needs r >= 5");
  std::vector<int> sizes;
  int quads = r % 3 == 1 ? 2 : r % 3 == 0 ? 1 : 0;
  int remaining = r + 1 - 4 * quads;
  sizes.assign(quads, 4);
  for (; remaining > 0; remaining -= 3) sizes.push_back(3);
  return sizes;
}

EdgePartition partition_regular(const Graph& g) {
  if (g.vertex_count() == 0 || !g.is_regular())
    throw PreconditionError("partition_regular: graph is not regular");
  const int r = g.max_degree();
  if (r < 5) throw PreconditionError("partition_regular: needs degree >= 5");
  auto classes = color_classes(misra_gries(g), r + 1);
  std::vector<std::vector<EdgeId>> parts;
  int next = 0;
  for (int size : regular_block_sizes(r)) {
    std::vector<EdgeIndex> block;
    for (int i = 0; i < size; ++i, ++next)
      block.insert(block.end(), classes[next].begin(), classes[next].end());
    InducedSubgraph sub = edge_induced(g, std::span<const EdgeIndex>(block));
    if (block.empty() || !is_normal(sub.graph))
      throw InvalidGroupingError("partition_regular: block " + std::to_string(parts.size()) +
                                 " (classes " + std::to_string(next - size + 1) + ".." +
                                 std::to_string(next) + ") is not normal");
    parts.push_back(to_ids(g, block));
  }
  return EdgePartition(g, std::move(parts));
}

std::string move_variant_name(MoveVariant v) {
  switch (v) {
    case MoveVariant::DropIsolatedHEdge: return "DropIsolatedHEdge";
    case MoveVariant::AddComplementEdges: return "AddComplementEdges";
    case MoveVariant::DropHEdges: return "DropHEdges";
    case MoveVariant::ChainSwap: return "ChainSwap";
  }
  return "?";
}

}  // namespace avdc
