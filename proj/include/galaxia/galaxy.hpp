#pragma once

#include <span>
#include <utility>
#include <vector>

#include "galaxia/colouring.hpp"
#include "galaxia/digraph.hpp"

namespace galaxia {

/// Every vertex has at most one entering arc among `arcs` and they form no circuit.
bool is_forest(const Digraph& d, std::span<const int> arcs);
/// A forest of out-stars: no two arcs share a head and no vertex is both a
/// head and a tail.
bool is_galaxy(const Digraph& d, std::span<const int> arcs);

struct ForestGalaxyDecomposition {
  std::vector<std::vector<int>> forests;  // arc ids, ascending
  std::vector<int> galaxy;
};

/// Max indegree at most k and every tail of a pair of parallel arcs is a source.
bool is_k_nice(const Digraph& d, int k);

/// Partition into k forests and a galaxy in which every source of d is
/// isolated and no arc enters u. Throws NotNice unless is_k_nice(d, k).
ForestGalaxyDecomposition u_suitable_decomposition(const Digraph& d, int u, int k);

/// Checks all the properties u_suitable_decomposition promises.
bool is_u_suitable_decomposition(const Digraph& d, int u, int k, const ForestGalaxyDecomposition& fg);

/// Splits a forest into two galaxies by the parity of each arc's tail depth.
/// Throws NotForest.
std::pair<std::vector<int>, std::vector<int>> forest_to_two_galaxies(const Digraph& d, std::span<const int> forest);

/// Directed star colouring with at most 2 * max_indegree + 1 colours.
ArcColouring dst_upper_2k1(const Digraph& d);

struct FrankCheck {
  bool holds = true;
  /// Vertex set violating the condition: either a single vertex with
  /// indegree above k, or a set U spanning more than k(|U|-1) arcs.
  std::vector<int> witness;
};

/// Brute-force sweep over all vertex subsets (at most 20 vertices, TooLarge
/// otherwise), reporting the first failing subset in bitmask order.
FrankCheck frank_condition_check(const Digraph& d, int k);

}  // namespace galaxia
