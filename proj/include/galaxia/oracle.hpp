#pragma once

#include <optional>
#include <vector>

#include "galaxia/colouring.hpp"
#include "galaxia/digraph.hpp"
#include "galaxia/fibre.hpp"
#include "galaxia/graph.hpp"

namespace galaxia {

struct StarViolation {
  int first_arc;
  int second_arc;
  int rule;  // 1: uv and vw share a colour, 2: uv and u'v share a colour
};

/// Empty result means every colour class is a galaxy. Throws InvalidColouring
/// if the colouring is not total or uses a colour outside 1..colour_count.
std::optional<StarViolation> verify_star_colouring(const Digraph& d, const ArcColouring& c);

/// Two arcs conflict when they must get different colours in a directed star
/// colouring: one's head is the other's tail, or they share their head.
Graph arc_conflict_graph(const Digraph& d);

/// Arc limit for the exact solvers: GALAXIA_ARC_LIMIT if set, otherwise 40.
int default_arc_limit();

/// Proper colouring of g with at most `colours` colours, or nothing if none
/// exists. DSATUR-ordered backtracking; deterministic.
std::optional<std::vector<int>> exact_graph_colouring(const Graph& g, int colours);

struct ExactDst {
  int colours;
  ArcColouring witness;
};

/// Minimum number of galaxies partitioning the arcs. Throws AboveCap if more
/// than colour_cap are needed and TooLarge above the arc limit.
ExactDst exact_dst(const Digraph& d, int colour_cap, int arc_limit = default_arc_limit());

struct ExactLambda {
  int colours;
  FibreColouring witness;
};

ExactLambda exact_lambda_n(const LabelledDigraph& ld, int fibres, int colour_cap, int arc_limit = default_arc_limit());

/// Arc ids of a circuit whose arcs carry at most two colours; empty if none.
std::vector<int> find_bicoloured_circuit(const Digraph& d, const ArcColouring& c);

/// 3-edge-colouring (colour per edge, indexed like g.edges()) or nothing.
/// Throws NotCubic unless g is 3-regular, TooLarge above 20 vertices.
std::optional<std::vector<int>> edge_colouring_3regular(const Graph& g);

}  // namespace galaxia
