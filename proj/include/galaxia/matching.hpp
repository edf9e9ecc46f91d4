#pragma once

#include <optional>
#include <vector>

namespace galaxia {

/// Capacitated bipartite assignment by augmenting paths. Left item i must be
/// matched to one right item from options[i]; right item j accepts at most
/// capacity[j] left items. Left items are inserted in index order and options
/// are tried in the order given, so the result is deterministic.
/// Returns the chosen right item per left item, or nullopt when infeasible.
std::optional<std::vector<int>> capacitated_assignment(const std::vector<std::vector<int>>& options,
                                                       const std::vector<int>& capacity);

/// Unit-capacity special case: a system of distinct representatives.
std::optional<std::vector<int>> distinct_representatives(const std::vector<std::vector<int>>& options,
                                                         int right_count);

}  // namespace galaxia
