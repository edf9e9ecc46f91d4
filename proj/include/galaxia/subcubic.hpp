#pragma once

#include <optional>
#include <vector>

#include "galaxia/colouring.hpp"
#include "galaxia/digraph.hpp"

namespace galaxia {

struct CycleColouring {
  std::vector<int> vertex_colour;  // x_0 .. x_{L-1}
  std::vector<int> arc_colour;     // arc i joins x_i to x_{i+1 mod L}
};

/// Colours the vertices and arcs of a circuit of length L = lists.size() so
/// that each vertex colour comes from its 2-element list in {1,2,3}, an arc
/// differs from both its ends, and consecutive arcs differ. Throws Infeasible
/// exactly when L is odd and all lists are equal, BadLists if a list is not a
/// 2-subset of {1,2,3} or L < 2.
CycleColouring lemma_cycle_colouring(const std::vector<ColourSet>& lists);

/// Exact directed star L-colouring for digraphs in which every vertex with an
/// entering arc has outdegree at most one. Returns nothing if no L-colouring
/// exists. Throws PreconditionViolated if the structural condition fails.
std::optional<std::vector<int>> star_list_colouring_outdegree_one(const Digraph& d, const ListAssignment& lists);

/// Directed star L-colouring of a subcubic digraph without vertices of
/// indegree one and outdegree two, under the list conditions:
///   final arcs (head is a sink s) have at least d-(s) colours, initial arcs
///   (tail is a source, head not a sink) at least 2, other arcs exactly 3;
///   two initial arcs sharing a head have lists covering {1,2,3};
///   an odd circuit whose vertices all receive initial arcs has those
///   initial arcs' lists covering {1,2,3}.
/// Throws PreconditionViolated naming the failed clause.
ArcColouring lemma_extension_colouring(const Digraph& d, const ListAssignment& lists);

/// Directed star 3-colouring of a digraph with d-(v) + d+(v) <= 3 everywhere.
/// Throws NotSubcubic.
ArcColouring star_colouring_subcubic(const Digraph& d);

}  // namespace galaxia
