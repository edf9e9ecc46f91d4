#include "galaxia/brooks.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "galaxia/error.hpp"

namespace galaxia {
namespace {

// Greedy colouring of `vertices` in the given order; returns false if some
// vertex sees all three colours.
bool greedy(const Graph& g, const std::vector<int>& order, std::vector<int>& colour) {
  for (int v : order) {
    unsigned used = 0;
    for (int w : g.neighbours(v)) used |= 1u << colour[w];
    int c = 1;
    while (c <= 3 && (used >> c & 1u)) ++c;
    if (c > 3) return false;
    colour[v] = c;
  }
  return true;
}

// Vertices of the component containing root in `allowed`, farthest from root first.
std::vector<int> by_decreasing_distance(const Graph& g, int root, const std::vector<char>& allowed) {
  std::vector<int> order{root};
  std::vector<char> seen(g.vertex_count(), 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : g.neighbours(order[i]))
      if (allowed[w] && !seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
  std::reverse(order.begin(), order.end());
  return order;
}

// An edge whose removal disconnects its component, or {-1,-1}.
std::pair<int, int> find_bridge(const Graph& g, const std::vector<int>& comp) {
  std::vector<int> disc(g.vertex_count(), -1), low(g.vertex_count(), 0);
  int timer = 0;
  std::pair<int, int> bridge{-1, -1};
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int w : g.neighbours(v)) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v] && bridge.first == -1) bridge = {v, w};
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  dfs(comp.front(), -1);
  return bridge;
}

bool connected_without(const Graph& g, const std::vector<int>& comp, int x, int y) {
  std::vector<char> allowed(g.vertex_count(), 0);
  for (int v : comp) allowed[v] = 1;
  allowed[x] = allowed[y] = 0;
  int start = -1;
  for (int v : comp)
    if (allowed[v]) {
      start = v;
      break;
    }
  return static_cast<int>(by_decreasing_distance(g, start, allowed).size()) == static_cast<int>(comp.size()) - 2;
}

void colour_component(const Graph& g, const std::vector<int>& comp, std::vector<int>& colour) {
  std::vector<char> allowed(g.vertex_count(), 0);
  for (int v : comp) allowed[v] = 1;

  // A vertex of degree at most two goes last: every other vertex still has an
  // uncoloured neighbour (its BFS parent) when it is coloured.
  for (int v : comp)
    if (g.degree(v) <= 2) {
      if (!greedy(g, by_decreasing_distance(g, v, allowed), colour))
        throw Error(Errc::internal_defect, "greedy colouring failed");
      return;
    }

  if (comp.size() == 4) throw Error(Errc::has_k4, "component {" + std::to_string(comp[0]) + ",...} is K4");

  // Cubic with a bridge: colour both sides separately, then swap colours on one side.
  if (auto [u, w] = find_bridge(g, comp); u != -1) {
    Graph cut(g.vertex_count());
    for (auto [a, b] : g.edges())
      if (allowed[a] && !((a == u && b == w) || (a == w && b == u))) cut.add_edge(a, b);
    std::vector<char> side_w(g.vertex_count(), 0);
    for (int v : by_decreasing_distance(cut, w, allowed)) side_w[v] = 1;
    for (int root : {u, w})
      if (!greedy(cut, by_decreasing_distance(cut, root, allowed), colour))
        throw Error(Errc::internal_defect, "greedy colouring failed");
    if (colour[u] == colour[w]) {
      const int a = colour[w], b = colour[w] % 3 + 1;
      for (int v : comp)
        if (side_w[v]) colour[v] = colour[v] == a ? b : colour[v] == b ? a : colour[v];
    }
    return;
  }

  // 2-connected cubic, not K4: some v has non-adjacent neighbours x, y with
  // G - {x, y} connected. Give x and y colour 1 and finish at v.
  for (int v : comp) {
    const auto nb = g.neighbours(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const int x = nb[i], y = nb[j];
        if (g.has_edge(x, y) || !connected_without(g, comp, x, y)) continue;
        colour[x] = colour[y] = 1;
        allowed[x] = allowed[y] = 0;
        if (!greedy(g, by_decreasing_distance(g, v, allowed), colour))
          throw Error(Errc::internal_defect, "greedy colouring failed");
        return;
      }
  }
  throw Error(Errc::internal_defect, "no Brooks pair in a 2-connected cubic component");
}

}  // namespace

std::vector<int> brooks_three_colouring(const Graph& g) {
  if (g.max_degree() > 3) throw Error(Errc::precondition_violated, "maximum degree exceeds 3");
  std::vector<int> colour(g.vertex_count(), 0);
  for (const auto& comp : g.components()) colour_component(g, comp, colour);
  return colour;
}

}  // namespace galaxia
