#pragma once

#include <vector>

#include "galaxia/graph.hpp"

namespace galaxia {

/// Proper colouring with colours 1..3 of a graph with maximum degree at most 3
/// and no K4 component. Throws HasK4, or PreconditionViolated if a degree
/// exceeds 3.
std::vector<int> brooks_three_colouring(const Graph& g);

}  // namespace galaxia
