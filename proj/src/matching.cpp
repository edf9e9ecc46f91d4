#include "galaxia/matching.hpp"

#include <functional>

namespace galaxia {

std::optional<std::vector<int>> capacitated_assignment(const std::vector<std::vector<int>>& options,
                                                       const std::vector<int>& capacity) {
  const int left = static_cast<int>(options.size());
  const int right = static_cast<int>(capacity.size());
  std::vector<int> match(left, -1);
  std::vector<std::vector<int>> holders(right);
  std::vector<int> seen(right, -1);

  // Kuhn-style augmentation where a full right item may pass one of its
  // holders on to another option.
  std::function<bool(int, int)> augment = [&](int i, int stamp) -> bool {
    for (int j : options[i]) {
      if (seen[j] == stamp) continue;
      seen[j] = stamp;
      if (static_cast<int>(holders[j].size()) < capacity[j]) {
        holders[j].push_back(i);
        match[i] = j;
        return true;
      }
      for (auto& h : holders[j]) {
        const int other = h;
        if (augment(other, stamp)) {
          h = i;
          match[i] = j;
          return true;
        }
      }
    }
    return false;
  };

  for (int i = 0; i < left; ++i) {
    if (!augment(i, i)) return std::nullopt;
  }
  return match;
}

std::optional<std::vector<int>> distinct_representatives(const std::vector<std::vector<int>>& options,
                                                         int right_count) {
  return capacitated_assignment(options, std::vector<int>(right_count, 1));
}

}  // namespace galaxia
