#include "galaxia/spanning.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "galaxia/error.hpp"
#include "galaxia/galaxy.hpp"
#include "galaxia/oracle.hpp"
#include "galaxia/subcubic.hpp"

namespace galaxia {

std::vector<std::vector<char>> order_closure(int size, const std::vector<Arc>& cover) {
  std::vector<std::vector<int>> next(size);
  for (auto [a, b] : cover) next[a].push_back(b);
  std::vector<std::vector<char>> leq(size, std::vector<char>(size, 0));
  for (int s = 0; s < size; ++s) {
    std::vector<int> stack{s};
    leq[s][s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : next[v])
        if (!leq[s][w]) {
          leq[s][w] = 1;
          stack.push_back(w);
        }
    }
  }
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      if (leq[a][b] && leq[b][a]) throw Error(Errc::bad_shape, "relation has a cycle through " + std::to_string(a));
  return leq;
}

bool is_ordered_digraph(const OrderedDigraph& od) {
  const int n = od.size;
  if (od.digraph.vertex_count() != n || static_cast<int>(od.leq.size()) != n) return false;
  for (int a = 0; a < n; ++a) {
    if (!od.leq[a][a]) return false;
    for (int b = 0; b < n; ++b) {
      if (a != b && od.leq[a][b] && od.leq[b][a]) return false;
      for (int c = 0; c < n; ++c)
        if (od.leq[a][b] && od.leq[b][c] && !od.leq[a][c]) return false;
    }
  }
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  for (auto [t, h] : od.digraph.arcs()) {
    if (!od.less_eq(t, h) && !od.less_eq(h, t)) return false;
    has[t][h] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !od.leq[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (c != a && c != b && od.leq[a][c] && od.leq[c][b]) cover = false;
      if (cover && !has[a][b]) return false;
    }
  return true;
}

bool is_ordig_witness(const OrderedDigraph& od, const OrdigWitness& w) {
  const auto [gamma, alpha] = od.digraph.arc(w.gamma_alpha);
  const auto [beta, lambda] = od.digraph.arc(w.beta_lambda);
  if (!od.less_eq(alpha, beta) || !od.less_eq(beta, gamma) || !od.less_eq(beta, lambda) || od.less_eq(gamma, lambda))
    return false;
  const int v[4] = {alpha, beta, gamma, lambda};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (v[i] == v[j] && !(i == 0 && j == 1)) return false;
  return true;
}

// The lemma is proved by contradiction over contracted good intervals; the
// witness it promises is found here by scanning arc pairs directly, which
// returns one whenever any exists.
OrdigWitness ordig_witness(const OrderedDigraph& od, std::optional<int> low) {
  const Digraph& d = od.digraph;
  if (d.vertex_count() != od.size) throw Error(Errc::precondition_violated, "ground set and digraph differ in size");
  for (int v = 0; v < od.size; ++v) {
    int backward = 0, forward = 0;
    for (int a : d.out_arcs(v)) (od.is_backward(a) ? backward : forward) += 1;
    if (backward > 1 || forward > 2)
      throw Error(Errc::precondition_violated, "vertex " + std::to_string(v) + " leaves too many arcs");
    const int need = (low && *low == v) ? 1 : 2;
    if (d.in_degree(v) < need)
      throw Error(Errc::precondition_violated, "vertex " + std::to_string(v) + " has indegree " + std::to_string(d.in_degree(v)));
  }
  for (int ga = 0; ga < d.arc_count(); ++ga) {
    if (!od.is_backward(ga)) continue;
    for (int bl = 0; bl < d.arc_count(); ++bl)
      if (bl != ga && is_ordig_witness(od, {ga, bl})) return {ga, bl};
  }
  // Reachable only through the indegree-one exception; see the header.
  throw Error(Errc::infeasible, "ordered digraph has no witness pair");
}

namespace {

std::vector<char> degree_four(const Digraph& d) {
  std::vector<char> out(d.vertex_count(), 0);
  for (int v = 0; v < d.vertex_count(); ++v) out[v] = d.degree(v) == 4;
  return out;
}

void check_degrees(const Digraph& d) {
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.in_degree(v) > 2 || d.out_degree(v) > 2)
      throw Error(Errc::degree_too_high, "vertex " + std::to_string(v) + " has indegree " + std::to_string(d.in_degree(v)) +
                                             " and outdegree " + std::to_string(d.out_degree(v)));
}

using ArcSet = std::vector<char>;

std::vector<int> members(const ArcSet& s) {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(s.size()); ++a)
    if (s[a]) out.push_back(a);
  return out;
}

class Augmenter {
 public:
  explicit Augmenter(const Digraph& d) : d_(d), four_(degree_four(d)) {}

  bool valid(const ArcSet& s) const { return is_galaxy(d_, members(s)); }

  int spanned_four(const ArcSet& s) const {
    std::vector<char> hit(d_.vertex_count(), 0);
    for (int a = 0; a < d_.arc_count(); ++a)
      if (s[a]) hit[d_.arc(a).tail] = hit[d_.arc(a).head] = 1;
    int count = 0;
    for (int v = 0; v < d_.vertex_count(); ++v) count += hit[v] && four_[v];
    return count;
  }

  ArcSet greedy() const {
    ArcSet s(d_.arc_count(), 0);
    std::vector<char> head(d_.vertex_count(), 0), tail(d_.vertex_count(), 0);
    for (int a = 0; a < d_.arc_count(); ++a) {
      const auto [t, h] = d_.arc(a);
      if (head[h] || tail[h] || head[t]) continue;
      s[a] = head[h] = tail[t] = 1;
    }
    return s;
  }

  std::optional<int> unspanned(const ArcSet& s) const {
    std::vector<char> hit(d_.vertex_count(), 0);
    for (int a = 0; a < d_.arc_count(); ++a)
      if (s[a]) hit[d_.arc(a).tail] = hit[d_.arc(a).head] = 1;
    for (int v = 0; v < d_.vertex_count(); ++v)
      if (four_[v] && !hit[v]) return v;
    return std::nullopt;
  }

  // A galaxy spanning more degree-4 vertices than g, built with the moves of
  // the existence proof around the unspanned vertex x.
  std::optional<ArcSet> improve(const ArcSet& g, int x);

 private:
  const Digraph& d_;
  std::vector<char> four_;
};

std::optional<ArcSet> Augmenter::improve(const ArcSet& g, int x) {
  const int base = spanned_four(g);
  auto better = [&](const ArcSet& s) { return valid(s) && spanned_four(s) > base; };
  const int m = d_.arc_count();

  for (int a = 0; a < m; ++a)
    if (!g[a]) {
      ArcSet s = g;
      s[a] = 1;
      if (better(s)) return s;
    }

  // Alternation graph: galaxy arc uv -> galaxy arc st when vs is a non-galaxy
  // arc; node `top` stands for x.
  std::vector<int> garcs = members(g);
  const int top = static_cast<int>(garcs.size());
  std::vector<int> node_of(m, -1);
  for (int i = 0; i < top; ++i) node_of[garcs[i]] = i;
  std::vector<std::vector<int>> starting(d_.vertex_count());
  for (int i = 0; i < top; ++i) starting[d_.arc(garcs[i]).tail].push_back(i);
  struct Edge {
    int to;
    int via;
  };
  std::vector<std::vector<Edge>> succ(top + 1), pred(top + 1);
  for (int i = 0; i < top; ++i)
    for (int a : d_.out_arcs(d_.arc(garcs[i]).head)) {
      if (g[a]) continue;
      const int s = d_.arc(a).head;
      if (s == x) succ[i].push_back({top, a});
      for (int j : starting[s])
        if (j != i) succ[i].push_back({j, a});
    }
  for (int i = 0; i <= top; ++i)
    for (auto e : succ[i]) pred[e.to].push_back({i, e.via});

  std::vector<int> dist(top + 1, -1);
  std::deque<int> queue{top};
  dist[top] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (auto e : pred[v])
      if (dist[e.to] == -1) {
        dist[e.to] = dist[v] + 1;
        queue.push_back(e.to);
      }
  }
  std::vector<int> alt;  // the set A, nearest to x first
  for (int i = 0; i < top; ++i)
    if (dist[i] > 0) alt.push_back(i);
  std::stable_sort(alt.begin(), alt.end(), [&](int a, int b) { return dist[a] < dist[b]; });
  std::vector<char> in_alt(top + 1, 0);
  for (int i : alt) in_alt[i] = 1;
  in_alt[top] = 1;

  // Shortest alternation route between two nodes inside A ∪ {x}, as D-arcs.
  auto route = [&](int from, int to) -> std::optional<std::vector<int>> {
    std::vector<int> back(top + 1, -2), via(top + 1, -1);
    std::deque<int> q{from};
    back[from] = -1;
    while (!q.empty() && back[to] == -2) {
      const int v = q.front();
      q.pop_front();
      for (auto e : succ[v])
        if (in_alt[e.to] && back[e.to] == -2) {
          back[e.to] = v;
          via[e.to] = e.via;
          q.push_back(e.to);
        }
    }
    if (back[to] == -2) return std::nullopt;
    std::vector<int> arcs;
    for (int v = to; v != from; v = back[v]) {
      arcs.push_back(via[v]);
      if (back[v] != from) arcs.push_back(garcs[back[v]]);
    }
    arcs.push_back(garcs[from]);
    std::reverse(arcs.begin(), arcs.end());
    if (to != top) arcs.push_back(garcs[to]);
    return arcs;
  };
  auto flip = [&](ArcSet s, const std::vector<int>& arcs) {
    for (int a : arcs) s[a] ^= 1;
    return s;
  };
  auto out_g = [&](int v) {
    int c = 0;
    for (int a : d_.out_arcs(v)) c += g[a];
    return c;
  };

  // Paths from an arc of A (or from a bigger star), with or without an
  // extra arc re-covering the start of the path.
  for (int f : alt) {
    const auto p = route(f, top);
    if (!p) continue;
    const ArcSet s = flip(g, *p);
    if (better(s)) return s;
    const int u = d_.arc(garcs[f]).tail;
    for (int a : d_.in_arcs(u)) {
      if (g[a]) continue;
      ArcSet t = s;
      t[a] = 1;
      if (better(t)) return t;
    }
  }
  for (int f : alt)
    if (out_g(d_.arc(garcs[f]).tail) != 1) return std::nullopt;  // a bigger star should have given a move

  // An alternating circuit inside A.
  {
    std::vector<int> state(top + 1, 0), parent(top + 1, -1), parent_via(top + 1, -1);
    std::vector<int> cycle;
    std::function<bool(int)> dfs = [&](int v) {
      state[v] = 1;
      for (auto e : succ[v]) {
        if (e.to == top || !in_alt[e.to]) continue;
        if (state[e.to] == 1) {
          cycle.push_back(e.via);
          for (int w = v; w != e.to; w = parent[w]) {
            cycle.push_back(garcs[w]);
            cycle.push_back(parent_via[w]);
          }
          cycle.push_back(garcs[e.to]);
          return true;
        }
        if (state[e.to] == 0) {
          parent[e.to] = v;
          parent_via[e.to] = e.via;
          if (dfs(e.to)) return true;
        }
      }
      state[v] = 2;
      return false;
    };
    for (int f : alt)
      if (state[f] == 0 && dfs(f)) break;
    if (!cycle.empty()) {
      int start = -1;
      for (int a : cycle)
        if (g[a] && (start == -1 || dist[node_of[a]] < dist[start])) start = node_of[a];
      const auto p = route(start, top);
      ArcSet both(m, 0);
      for (int a : *p) both[a] = 1;
      for (int a : cycle) both[a] = 1;
      ArcSet s = g;
      for (int a = 0; a < m; ++a) s[a] ^= both[a];
      if (better(s)) return s;
      return std::nullopt;
    }
  }

  // Ordered digraph on A ∪ {x}: element i is alt[i], the last one is x.
  const int k = static_cast<int>(alt.size());
  std::vector<int> elem(top + 1, -1);
  for (int i = 0; i < k; ++i) elem[alt[i]] = i;
  elem[top] = k;
  std::vector<int> lead(k + 1), other(k + 1);  // (u, v) of each element
  for (int i = 0; i < k; ++i) {
    lead[i] = d_.arc(garcs[alt[i]]).tail;
    other[i] = d_.arc(garcs[alt[i]]).head;
  }
  lead[k] = other[k] = x;
  std::vector<Arc> cover;
  for (int i : alt)
    for (auto e : succ[i])
      if (in_alt[e.to]) cover.push_back({elem[i], elem[e.to]});
  std::vector<std::vector<char>> leq;
  try {
    leq = order_closure(k + 1, cover);
  } catch (const Error&) {
    return std::nullopt;
  }
  std::vector<Arc> oarcs;
  std::vector<int> realised;  // the D-arc u_e -> s_f behind each ordered arc
  for (int e = 0; e <= k; ++e)
    for (int f = 0; f <= k; ++f) {
      if (e == f) continue;
      int via = -1;
      for (int a : d_.out_arcs(lead[e]))
        if (d_.arc(a).head == lead[f]) via = a;
      bool joined = via != -1;
      for (int a : d_.out_arcs(other[e])) joined = joined || d_.arc(a).head == lead[f];
      if (!joined) continue;
      oarcs.push_back({e, f});
      realised.push_back(via);
    }
  std::vector<int> x_back;
  for (int i = 0; i < static_cast<int>(oarcs.size()); ++i)
    if (oarcs[i].tail == k) x_back.push_back(i);
  std::optional<int> low;
  if (x_back.size() == 2) {
    low = oarcs[x_back[0]].head;
    oarcs.erase(oarcs.begin() + x_back[0]);
    realised.erase(realised.begin() + x_back[0]);
  }
  OrderedDigraph od{k + 1, std::move(leq), Digraph(k + 1, oarcs)};
  OrdigWitness w;
  try {
    w = ordig_witness(od, low);
  } catch (const Error&) {
    return std::nullopt;
  }
  const auto [gamma, alpha] = od.digraph.arc(w.gamma_alpha);
  const auto [beta, lambda] = od.digraph.arc(w.beta_lambda);
  auto node = [&](int e) { return e == k ? top : alt[e]; };
  std::vector<int> path;
  for (auto [from, to] : {std::pair{alpha, beta}, {beta, lambda}, {lambda, k}}) {
    if (from == to) continue;
    auto part = route(node(from), node(to));
    if (!part) return std::nullopt;
    if (!path.empty()) part->erase(part->begin());  // shared galaxy arc
    path.insert(path.end(), part->begin(), part->end());
  }
  if (path.empty() || realised[w.gamma_alpha] == -1) return std::nullopt;
  ArcSet s = flip(g, path);
  s[realised[w.gamma_alpha]] = 1;
  if (better(s)) return s;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> spanning_galaxy_exhaustive(const Digraph& d, int vertex_limit) {
  if (d.vertex_count() > vertex_limit)
    throw Error(Errc::too_large, std::to_string(d.vertex_count()) + " vertices exceed the exhaustive limit");
  const auto four = degree_four(d);
  const int n = d.vertex_count();
  std::vector<int> head(n, 0), tail(n, 0), chosen;
  std::function<bool()> search = [&]() {
    int v = -1;
    for (int w = 0; w < n && v == -1; ++w)
      if (four[w] && !head[w] && !tail[w]) v = w;
    if (v == -1) return true;
    std::vector<int> incident(d.in_arcs(v).begin(), d.in_arcs(v).end());
    incident.insert(incident.end(), d.out_arcs(v).begin(), d.out_arcs(v).end());
    for (int a : incident) {
      const auto [t, h] = d.arc(a);
      if (head[h] || tail[h] || head[t]) continue;
      ++head[h];
      ++tail[t];
      chosen.push_back(a);
      if (search()) return true;
      chosen.pop_back();
      --head[h];
      --tail[t];
    }
    return false;
  };
  if (!search()) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<int> spanning_galaxy(const Digraph& d) {
  check_degrees(d);
  Augmenter aug(d);
  ArcSet g = aug.greedy();
  while (auto x = aug.unspanned(g)) {
    auto next = aug.improve(g, *x);
    if (!next) {
      if (d.vertex_count() <= 12) {
        if (auto found = spanning_galaxy_exhaustive(d)) return *found;
      }
      throw Error(Errc::internal_defect, "no augmentation found for unspanned vertex " + std::to_string(*x));
    }
    if (aug.spanned_four(*next) <= aug.spanned_four(g)) throw Error(Errc::internal_defect, "augmentation made no progress");
    g = std::move(*next);
  }
  return members(g);
}

ArcColouring dst4_colouring(const Digraph& d) {
  check_degrees(d);
  const auto galaxy = spanning_galaxy(d);
  std::vector<char> in_galaxy(d.arc_count(), 0);
  for (int a : galaxy) in_galaxy[a] = 1;
  std::vector<int> rest;
  for (int a = 0; a < d.arc_count(); ++a)
    if (!in_galaxy[a]) rest.push_back(a);
  const Digraph residual = d.arc_subgraph(rest);
  for (int v = 0; v < residual.vertex_count(); ++v)
    if (residual.degree(v) > 3) throw Error(Errc::internal_defect, "vertex " + std::to_string(v) + " keeps degree 4");
  const auto sub = star_colouring_subcubic(residual);
  ArcColouring c{std::vector<int>(d.arc_count(), 4), 4};
  for (std::size_t i = 0; i < rest.size(); ++i) c.colour[rest[i]] = sub.colour[i];
  if (auto bad = verify_star_colouring(d, c))
    throw Error(Errc::internal_defect, "arcs " + std::to_string(bad->first_arc) + " and " + std::to_string(bad->second_arc) +
                                           " share a colour");
  return c;
}

}  // namespace galaxia
