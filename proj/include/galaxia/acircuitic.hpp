#pragma once

#include <vector>

#include "galaxia/colouring.hpp"
#include "galaxia/digraph.hpp"
#include "galaxia/graph.hpp"

namespace galaxia {

/// Directed star L-colouring of an acyclic digraph with d(v) <= 3 and
/// |L(uv)| >= d(v) for every arc uv. Arcs into sinks are coloured first with
/// the smallest colour of their list. Throws PreconditionViolated.
ArcColouring list_colouring_acyclic(const Digraph& d, const ListAssignment& lists);

struct AcircuiticColouring {
  ArcColouring colouring;
  std::vector<int> colour_four;  // arcs coloured 4, a matching
  std::vector<int> cross_arcs;   // arcs from heads of matching arcs to their tails (the vertices of H)
  Graph conflicts;               // H, on cross_arcs positions
};

/// Directed star 4-colouring of a subcubic oriented graph with no circuit
/// using only two colours; the arcs coloured 4 form a matching. Throws
/// HasDigon or NotSubcubic.
AcircuiticColouring acircuitic_colouring_detailed(const Digraph& d);
ArcColouring acircuitic_colouring(const Digraph& d);

bool is_matching(const Digraph& d, const std::vector<int>& arcs);

}  // namespace galaxia
