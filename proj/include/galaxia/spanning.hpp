#pragma once

#include <optional>
#include <vector>

#include "galaxia/colouring.hpp"
#include "galaxia/digraph.hpp"

namespace galaxia {

/// A partial order on 0..size-1 together with a digraph on the same ground
/// set. `leq[a][b]` is the reflexive-transitive order; the digraph must
/// contain every Hasse pair (as a-arc a->b) and join only comparable pairs.
struct OrderedDigraph {
  int size = 0;
  std::vector<std::vector<char>> leq;
  Digraph digraph;

  bool less_eq(int a, int b) const { return leq[a][b] != 0; }
  /// head <= tail.
  bool is_backward(int arc) const { return less_eq(digraph.arc(arc).head, digraph.arc(arc).tail); }
};

/// Reflexive-transitive closure of the relation given by `cover` pairs.
/// Throws BadShape if the relation has a cycle.
std::vector<std::vector<char>> order_closure(int size, const std::vector<Arc>& cover);

/// Checks the ordered-digraph axioms.
bool is_ordered_digraph(const OrderedDigraph& od);

struct OrdigWitness {
  int gamma_alpha;  // arc ids of the ordered digraph
  int beta_lambda;
};

/// Two arcs γα and βλ with α ≤ β ≤ γ, β ≤ λ, γ ≰ λ, all four distinct
/// except possibly α = β. Requires: each vertex is the tail of at most one
/// backward and two forward arcs, and every indegree is at least two except
/// possibly that of `low` (at least one). Throws PreconditionViolated.
/// With a `low` vertex the conclusion can fail (the chain 0 < 1 < 2 with arcs
/// 01, 02, 10, 12, 21 has no witness); that case throws Infeasible.
OrdigWitness ordig_witness(const OrderedDigraph& od, std::optional<int> low = std::nullopt);

bool is_ordig_witness(const OrderedDigraph& od, const OrdigWitness& w);

/// Galaxy (arc ids, ascending) covering every vertex with d-(v) + d+(v) = 4.
/// Requires indegree and outdegree at most 2 everywhere; throws DegreeTooHigh.
std::vector<int> spanning_galaxy(const Digraph& d);

/// Exhaustive search for a galaxy covering the degree-4 vertices; for small
/// digraphs only (throws TooLarge above `vertex_limit` vertices).
std::optional<std::vector<int>> spanning_galaxy_exhaustive(const Digraph& d, int vertex_limit = 12);

/// Directed star colouring with at most 4 colours: the spanning galaxy gets
/// colour 4 and the rest, of maximum degree 3, is coloured by the subcubic
/// algorithm. Throws DegreeTooHigh.
ArcColouring dst4_colouring(const Digraph& d);

}  // namespace galaxia
