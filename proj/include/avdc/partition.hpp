#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "avdc/edge_partition.hpp"
#include "avdc/graph.hpp"
#include "avdc/selection.hpp"

namespace avdc {

// ---------------------------------------------------------------------------
// Membership in the family of admissible subgraphs M of G:
//   1. max degree of M is at most 3;
//   2. every vertex of degree Δ(G) has degree at least 2 in M;
//   3. every vertex of degree Δ(G)-1 has degree at least 1 in M.

enum class MembershipCondition { MaxDegree = 1, FullVertex = 2, NearFullVertex = 3 };

struct MembershipViolation {
  Vertex vertex;
  MembershipCondition condition;
  friend bool operator==(const MembershipViolation&, const MembershipViolation&) = default;
};

struct MembershipReport {
  bool is_member = true;
  std::vector<MembershipViolation> violations;
};

MembershipReport check_membership(const Graph& g, const SubgraphSelection& sel);

// ---------------------------------------------------------------------------
// Vertex classification relative to a selection H.
//
// Type I: 1 <= d_H(v) <= 2, d(v) >= Δ-1 and every complement neighbour u of v
//   (a) has d_H(u) = 3, or
//   (b) has d_H(u) = d_Hbar(u) = 2, or
//   (c) has d_H(u) <= 1, d_Hbar(u) = 2 and its other complement neighbour w
//       has d_Hbar(w) = 1, d_H(w) = 3.
// Type II: d_H(u) = 3 or d_H(u) = d_Hbar(u) = 2, and every H-neighbour v of u
//   (d) has 1 <= d_H(v) <= 2 and d(v) >= Δ-1, or
//   (e) has d_H(v) = 2, d(v) < Δ-1 and its other H-neighbour w has
//       d_H(w) = 1, d(w) = Δ-1.

enum class VertexType { TypeI, TypeII, Neither };

bool is_type_one(const Graph& g, const SubgraphSelection& sel, Vertex v);
bool is_type_two(const Graph& g, const SubgraphSelection& sel, Vertex u);
VertexType classify_vertex(const Graph& g, const SubgraphSelection& sel, Vertex v);

// ---------------------------------------------------------------------------
// Chains: 2- or 3-vertex paths gated by the conditions above. An H-chain from
// u steps to an H-neighbour satisfying (d), or through one satisfying (e) to
// its other H-neighbour. A complement chain steps to a complement neighbour
// satisfying (a)/(b), or through one satisfying (c).

enum class ChainKind { H, Complement };

struct Chain {
  ChainKind kind;
  std::vector<Vertex> vertices;

  Vertex start() const { return vertices.front(); }
  Vertex end() const { return vertices.back(); }
};

std::vector<Chain> enumerate_chains(const Graph& g, const SubgraphSelection& sel, Vertex from,
                                    ChainKind kind);

struct AlternatingChain {
  Vertex origin;
  std::vector<Chain> chains;
};

// ---------------------------------------------------------------------------
// Local-search moves. Applying a move replaces H by (H ∪ add) \ remove.

struct Potential {
  std::size_t isolated = 0;  // i(H) + i(Hbar)
  std::size_t h_edges = 0;   // |E(H)|
  friend auto operator<=>(const Potential&, const Potential&) = default;
};

Potential potential(const SubgraphSelection& sel);

enum class MoveVariant { DropIsolatedHEdge, AddComplementEdges, DropHEdges, ChainSwap };

struct Move {
  MoveVariant variant;
  std::vector<EdgeId> add_set;     // currently in the complement
  std::vector<EdgeId> remove_set;  // currently in H
  std::string witness;             // which case of the argument produced it
  std::uint64_t version = 0;       // selection version the move was derived on
  Potential before;
  Potential after;
  AlternatingChain path;           // discovery path (empty for local moves)
};

// Vertices reached by the chain closure from an origin when no move could be
// produced. V_I holds type-I chain ends, V_II type-II chain ends.
struct ChainClosure {
  Vertex origin = -1;
  EdgeId isolated_edge;
  bool complement_side = false;
  std::vector<Vertex> v1_set;
  std::vector<Vertex> v2_set;
  std::size_t violations_seen = 0;     // typing failures found during growth
  std::size_t rejected_candidates = 0; // candidate moves that failed re-validation
};

using MoveSearch = std::variant<Move, ChainClosure>;

// Precondition: sel is admissible and has at least one isolated edge on
// either side (PreconditionError otherwise).
MoveSearch find_move(const Graph& g, const SubgraphSelection& sel);

// Throws StaleMoveError if sel changed since find_move, PreconditionError if the
// sets do not match the current sides, InternalError if the result would not be
// admissible or would not decrease the potential (the selection is restored).
void apply_move(SubgraphSelection& sel, const Move& m);

// ---------------------------------------------------------------------------
// Drivers.

struct MoveRecord {
  std::size_t step;
  const Move* move;
  const SubgraphSelection* selection;  // state after the move
};

struct EngineOptions {
  std::ostream* trace = nullptr;  // JSON lines, one per move
  std::function<void(const MoveRecord&)> observer;
};

// First three Misra–Gries classes. Requires Δ(g) >= 6 and g normal.
SubgraphSelection initial_selection(const Graph& g);

// Two parts {H, Hbar} with Δ(H) <= 3, Δ(Hbar) <= Δ-2, both normal. Requires g
// normal with Δ(g) >= 6. Throws CounterexampleFound if the chain closure is
// exhausted without producing a move.
EdgePartition partition_p1(const Graph& g, const EngineOptions& options = {});

// Parts G_0..G_k with Δ(G_0) <= 5, Δ(G_i) <= 3 (i >= 1), k <= floor(Δ/2) - 2
// (k = 0 when Δ <= 5). Requires g normal with Δ(g) >= 4.
EdgePartition partition_p2(const Graph& g, const EngineOptions& options = {});

// Groups the r+1 Misra–Gries classes of an r-regular graph (r >= 5) into
// consecutive blocks: all triples when r = 2 mod 3, two quadruples then
// triples when r = 1 mod 3, one quadruple then triples when r = 0 mod 3.
// Throws InvalidGroupingError if a block is not normal.
EdgePartition partition_regular(const Graph& g);

// Expected block sizes for partition_regular.
std::vector<int> regular_block_sizes(int r);

std::string move_variant_name(MoveVariant v);

}  // namespace avdc
