#pragma once

#include <span>
#include <utility>
#include <vector>

namespace galaxia {

/// Simple undirected graph. Duplicate edges and loops are ignored on insertion.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count) : adj_(vertex_count) {}
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  /// Returns false if the edge was already present or is a loop.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  std::span<const int> neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  std::vector<std::vector<int>> components() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

/// True if colour[u] != colour[v] on every edge and every colour is in 1..colours.
bool is_proper_colouring(const Graph& g, const std::vector<int>& colour, int colours);

}  // namespace galaxia
