#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "galaxia/digraph.hpp"

namespace testing_helpers {

inline galaxia::Digraph make(int n, std::initializer_list<std::pair<int, int>> arcs, bool parallel = false) {
  std::vector<galaxia::Arc> list;
  for (auto [t, h] : arcs) list.push_back({t, h});
  return galaxia::Digraph(n, std::move(list), parallel);
}

inline galaxia::Digraph circuit(int n) {
  std::vector<galaxia::Arc> list;
  for (int i = 0; i < n; ++i) list.push_back({i, (i + 1) % n});
  return galaxia::Digraph(n, std::move(list));
}

inline galaxia::Digraph complete(int n) {
  std::vector<galaxia::Arc> list;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) list.push_back({i, j});
  return galaxia::Digraph(n, std::move(list));
}

}  // namespace testing_helpers
