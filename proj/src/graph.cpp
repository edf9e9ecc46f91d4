#include "galaxia/graph.hpp"

#include <algorithm>

namespace galaxia {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) : adj_(vertex_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

bool Graph::add_edge(int u, int v) {
  if (u == v || has_edge(u, v)) return false;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  return true;
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::vector<std::vector<int>> Graph::components() const {
  const int n = vertex_count();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::vector<int> comp{s};
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : adj_[comp[i]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_proper_colouring(const Graph& g, const std::vector<int>& colour, int colours) {
  if (static_cast<int>(colour.size()) != g.vertex_count()) return false;
  for (int c : colour)
    if (c < 1 || c > colours) return false;
  for (auto [u, v] : g.edges())
    if (colour[u] == colour[v]) return false;
  return true;
}

}  // namespace galaxia
