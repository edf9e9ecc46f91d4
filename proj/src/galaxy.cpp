#include "galaxia/galaxy.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <string>

#include "galaxia/error.hpp"

namespace galaxia {

bool is_forest(const Digraph& d, std::span<const int> arcs) {
  std::vector<int> parent(d.vertex_count(), -1);
  for (int a : arcs) {
    const int h = d.arc(a).head;
    if (parent[h] != -1) return false;
    parent[h] = d.arc(a).tail;
  }
  // Every parent chain must end at a root.
  std::vector<char> state(d.vertex_count(), 0);  // 1 = on current chain, 2 = known to reach a root
  for (int v = 0; v < d.vertex_count(); ++v) {
    std::vector<int> chain;
    int x = v;
    while (x != -1 && state[x] == 0) {
      state[x] = 1;
      chain.push_back(x);
      x = parent[x];
    }
    if (x != -1 && state[x] == 1) return false;
    for (int y : chain) state[y] = 2;
  }
  return true;
}

bool is_galaxy(const Digraph& d, std::span<const int> arcs) {
  std::vector<char> is_head(d.vertex_count(), 0), is_tail(d.vertex_count(), 0);
  for (int a : arcs) {
    const auto [t, h] = d.arc(a);
    if (is_head[h]) return false;
    is_head[h] = 1;
    is_tail[t] = 1;
  }
  for (int v = 0; v < d.vertex_count(); ++v)
    if (is_head[v] && is_tail[v]) return false;
  return true;
}

bool is_k_nice(const Digraph& d, int k) {
  if (k < 0 || degree_profile(d).max_in > k) return false;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& a : d.arcs()) pairs.emplace_back(a.tail, a.head);
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i)
    if (pairs[i] == pairs[i - 1] && d.in_degree(pairs[i].first) != 0) return false;
  return true;
}

namespace {

struct WArc {
  int tail;
  int head;
  int id;  // arc id in the input digraph
};

// Recursive construction on a sub-multidigraph whose vertex ids live in a
// growing id space (contractions introduce fresh vertices).
class Decomposer {
 public:
  explicit Decomposer(int first_fresh_id) : next_id_(first_fresh_id) {}

  ForestGalaxyDecomposition run(std::vector<int> verts, std::vector<WArc> arcs, int u, int k) {
    ForestGalaxyDecomposition out;
    out.forests.resize(k);
    if (arcs.empty()) return out;
    if (k == 0) throw Error(Errc::internal_defect, "decomposition reached k = 0 with arcs left");

    std::sort(verts.begin(), verts.end());
    auto local = [&](int v) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
    std::vector<Arc> plain;
    plain.reserve(arcs.size());
    for (const auto& a : arcs) plain.push_back({local(a.tail), local(a.head)});
    const Digraph ld(static_cast<int>(verts.size()), plain, true);

    auto weak = weak_components(ld);
    if (weak.size() > 1) {
      std::vector<int> comp_of(verts.size());
      for (std::size_t c = 0; c < weak.size(); ++c)
        for (int x : weak[c]) comp_of[x] = static_cast<int>(c);
      std::vector<std::vector<WArc>> parts(weak.size());
      for (std::size_t i = 0; i < arcs.size(); ++i) parts[comp_of[plain[i].tail]].push_back(arcs[i]);
      for (std::size_t c = 0; c < weak.size(); ++c) {
        if (parts[c].empty()) continue;
        std::vector<int> cv;
        for (int x : weak[c]) cv.push_back(verts[x]);
        const int cu = std::binary_search(cv.begin(), cv.end(), u) ? u : cv.front();
        merge(out, run(std::move(cv), std::move(parts[c]), cu, k));
      }
      return out;
    }

    auto strong = strong_components(ld);
    if (strong.size() == 1) return strong_case(verts, arcs, ld, local(u), k);

    // Lowest-id terminal component.
    std::vector<int> comp_of(verts.size());
    for (std::size_t c = 0; c < strong.size(); ++c)
      for (int x : strong[c]) comp_of[x] = static_cast<int>(c);
    std::vector<char> terminal(strong.size(), 1);
    for (const auto& a : plain)
      if (comp_of[a.tail] != comp_of[a.head]) terminal[comp_of[a.tail]] = 0;
    int d1 = -1;
    for (std::size_t c = 0; c < strong.size(); ++c)
      if (terminal[c] && (d1 == -1 || strong[c].front() < strong[d1].front())) d1 = static_cast<int>(c);

    std::vector<int> v1, v2;
    for (std::size_t x = 0; x < verts.size(); ++x) (comp_of[x] == d1 ? v1 : v2).push_back(verts[x]);
    const bool u_in_1 = std::binary_search(v1.begin(), v1.end(), u);
    const int u1 = u_in_1 ? u : v1.front();
    const int u2 = u_in_1 ? v2.front() : u;

    if (v2.size() == 1) {
      auto tree = bfs_arborescence(ld, local(v2.front()));
      if (static_cast<int>(tree.size()) != ld.vertex_count() - 1)
        throw Error(Errc::internal_defect, "arborescence does not span");
      std::vector<char> in_tree(arcs.size(), 0);
      for (int a : tree) in_tree[a] = 1;
      std::vector<WArc> rest;
      std::vector<int> tree_ids;
      for (std::size_t i = 0; i < arcs.size(); ++i) (in_tree[i] ? tree_ids.push_back(arcs[i].id) : rest.push_back(arcs[i]));
      auto sub = run(verts, std::move(rest), u, k - 1);
      for (int i = 0; i < k - 1; ++i) out.forests[i] = std::move(sub.forests[i]);
      out.forests[k - 1] = std::move(tree_ids);
      out.galaxy = std::move(sub.galaxy);
      return out;
    }

    std::vector<WArc> arcs2, arcs1;
    const int w = next_id_++;
    for (const auto& a : arcs) {
      const bool t1 = std::binary_search(v1.begin(), v1.end(), a.tail);
      const bool h1 = std::binary_search(v1.begin(), v1.end(), a.head);
      if (!t1 && !h1)
        arcs2.push_back(a);
      else if (t1 && h1)
        arcs1.push_back(a);
      else
        arcs1.push_back({w, a.head, a.id});
    }
    merge(out, run(v2, std::move(arcs2), u2, k));
    v1.push_back(w);
    merge(out, run(std::move(v1), std::move(arcs1), u1, k));
    return out;
  }

 private:
  // Arcs (local indices) of a BFS arborescence rooted at root; lowest arc id first.
  static std::vector<int> bfs_arborescence(const Digraph& d, int root) {
    std::vector<char> seen(d.vertex_count(), 0);
    std::vector<int> tree;
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int a : d.out_arcs(x)) {
        const int h = d.arc(a).head;
        if (seen[h]) continue;
        seen[h] = 1;
        tree.push_back(a);
        queue.push_back(h);
      }
    }
    return tree;
  }

  ForestGalaxyDecomposition strong_case(const std::vector<int>& verts, const std::vector<WArc>& arcs,
                                        const Digraph& ld, int lu, int k) {
    // Strongly connected, at least one arc, hence no parallel arcs and no sources.
    int lv = -1;
    for (int a : ld.out_arcs(lu))
      if (lv == -1 || ld.arc(a).head < lv) lv = ld.arc(a).head;
    auto tree = bfs_arborescence(ld, lv);
    std::vector<char> in_tree(arcs.size(), 0);
    for (int a : tree) in_tree[a] = 1;

    std::vector<WArc> rest;
    std::vector<int> tree_ids;
    int uv = -1;
    std::vector<int> other_in;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (in_tree[i]) {
        tree_ids.push_back(arcs[i].id);
      } else if (ld.arc(static_cast<int>(i)).head == lv) {
        if (ld.arc(static_cast<int>(i)).tail == lu)
          uv = arcs[i].id;
        else
          other_in.push_back(arcs[i].id);
      } else {
        rest.push_back(arcs[i]);
      }
    }
    if (uv == -1 || static_cast<int>(other_in.size()) > k - 1)
      throw Error(Errc::internal_defect, "strong case: unexpected arcs entering the root");

    std::vector<int> sub_verts;
    for (std::size_t x = 0; x < verts.size(); ++x)
      if (static_cast<int>(x) != lv) sub_verts.push_back(verts[x]);
    auto sub = run(std::move(sub_verts), std::move(rest), verts[lu], k - 1);

    ForestGalaxyDecomposition out;
    out.forests.resize(k);
    for (int i = 0; i < k - 1; ++i) out.forests[i] = std::move(sub.forests[i]);
    for (std::size_t i = 0; i < other_in.size(); ++i) out.forests[i].push_back(other_in[i]);
    out.forests[k - 1] = std::move(tree_ids);
    out.galaxy = std::move(sub.galaxy);
    out.galaxy.push_back(uv);
    return out;
  }

  static void merge(ForestGalaxyDecomposition& into, ForestGalaxyDecomposition&& from) {
    for (std::size_t i = 0; i < from.forests.size(); ++i)
      into.forests[i].insert(into.forests[i].end(), from.forests[i].begin(), from.forests[i].end());
    into.galaxy.insert(into.galaxy.end(), from.galaxy.begin(), from.galaxy.end());
  }

  int next_id_;
};

}  // namespace

ForestGalaxyDecomposition u_suitable_decomposition(const Digraph& d, int u, int k) {
  if (u < 0 || u >= d.vertex_count()) throw Error(Errc::bad_params, "vertex u out of range");
  if (!is_k_nice(d, k)) throw Error(Errc::not_nice, "digraph is not " + std::to_string(k) + "-nice");
  std::vector<int> verts(d.vertex_count());
  for (int v = 0; v < d.vertex_count(); ++v) verts[v] = v;
  std::vector<WArc> arcs;
  for (int a = 0; a < d.arc_count(); ++a) arcs.push_back({d.arc(a).tail, d.arc(a).head, a});
  auto out = Decomposer(d.vertex_count()).run(std::move(verts), std::move(arcs), u, k);
  for (auto& f : out.forests) std::sort(f.begin(), f.end());
  std::sort(out.galaxy.begin(), out.galaxy.end());
  return out;
}

bool is_u_suitable_decomposition(const Digraph& d, int u, int k, const ForestGalaxyDecomposition& fg) {
  if (static_cast<int>(fg.forests.size()) != k) return false;
  std::vector<int> hits(d.arc_count(), 0);
  auto count = [&](const std::vector<int>& set) {
    for (int a : set) {
      if (a < 0 || a >= d.arc_count()) return false;
      ++hits[a];
    }
    return true;
  };
  for (const auto& f : fg.forests)
    if (!count(f) || !is_forest(d, f)) return false;
  if (!count(fg.galaxy) || !is_galaxy(d, fg.galaxy)) return false;
  for (int h : hits)
    if (h != 1) return false;
  for (int a : fg.galaxy) {
    const auto [t, h] = d.arc(a);
    if (h == u || d.in_degree(t) == 0) return false;
  }
  return true;
}

std::pair<std::vector<int>, std::vector<int>> forest_to_two_galaxies(const Digraph& d, std::span<const int> forest) {
  if (!is_forest(d, forest)) throw Error(Errc::not_forest, "arc set is not a forest");
  std::vector<int> parent(d.vertex_count(), -1);
  for (int a : forest) parent[d.arc(a).head] = d.arc(a).tail;
  std::vector<int> depth(d.vertex_count(), -1);
  auto depth_of = [&](int v) {
    std::vector<int> chain;
    while (depth[v] == -1 && parent[v] != -1) {
      chain.push_back(v);
      v = parent[v];
    }
    if (depth[v] == -1) depth[v] = 0;
    int dv = depth[v];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++dv;
  };
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int a : forest) {
    const int t = d.arc(a).tail;
    if (depth[t] == -1) depth_of(t);
    (depth[t] % 2 == 0 ? out.first : out.second).push_back(a);
  }
  return out;
}

ArcColouring dst_upper_2k1(const Digraph& d) {
  const int k = degree_profile(d).max_in;
  ArcColouring c{std::vector<int>(d.arc_count(), 0), 2 * k + 1};
  if (d.arc_count() == 0) return c;
  const auto fg = u_suitable_decomposition(d, 0, k);
  for (int i = 0; i < k; ++i) {
    const auto [even, odd] = forest_to_two_galaxies(d, fg.forests[i]);
    for (int a : even) c.colour[a] = 2 * i + 1;
    for (int a : odd) c.colour[a] = 2 * i + 2;
  }
  for (int a : fg.galaxy) c.colour[a] = 2 * k + 1;
  return c;
}

FrankCheck frank_condition_check(const Digraph& d, int k) {
  const int n = d.vertex_count();
  if (n > 20) throw Error(Errc::too_large, "subset sweep is limited to 20 vertices");
  for (int v = 0; v < n; ++v)
    if (d.in_degree(v) > k) return {false, {v}};
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    long long inside = 0;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1u)) continue;
      for (int a : d.out_arcs(v))
        if (mask >> d.arc(a).head & 1u) ++inside;
    }
    if (inside > static_cast<long long>(k) * (std::popcount(mask) - 1)) {
      FrankCheck r{false, {}};
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) r.witness.push_back(v);
      return r;
    }
  }
  return {};
}

}  // namespace galaxia
