#include "galaxia/subcubic.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "galaxia/brooks.hpp"
#include "galaxia/error.hpp"
#include "galaxia/graph.hpp"
#include "galaxia/oracle.hpp"

namespace galaxia {
namespace {

constexpr ColourSet kAll = ColourSet::range(1, 3);

bool is_two_subset(ColourSet s) { return s.size() == 2 && (s - kAll).empty(); }

bool cycle_valid(const std::vector<ColourSet>& lists, const CycleColouring& c) {
  const std::size_t n = lists.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (!lists[i].contains(c.vertex_colour[i])) return false;
    if (c.arc_colour[i] < 1 || c.arc_colour[i] > 3) return false;
    if (c.arc_colour[i] == c.vertex_colour[i] || c.arc_colour[i] == c.vertex_colour[j]) return false;
    if (c.arc_colour[i] == c.arc_colour[j]) return false;
  }
  return true;
}

// Distinct representatives for `sets`, avoiding `forbidden`. Small sets only.
bool pick_distinct(const std::vector<ColourSet>& sets, ColourSet forbidden, std::vector<int>& out, std::size_t i = 0) {
  if (i == 0) out.assign(sets.size(), 0);
  if (i == sets.size()) return true;
  for (int c : (sets[i] - forbidden).members()) {
    out[i] = c;
    ColourSet next = forbidden;
    next.insert(c);
    if (pick_distinct(sets, next, out, i + 1)) return true;
  }
  return false;
}

bool has_distinct(const std::vector<ColourSet>& sets, ColourSet forbidden) {
  std::vector<int> scratch;
  return pick_distinct(sets, forbidden, scratch);
}

// Circuits of the map v -> succ[v] (-1 = none), each listed in successor order.
std::vector<std::vector<int>> functional_circuits(const std::vector<int>& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> state(n, 0), stamp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    int v = s;
    while (v != -1 && state[v] == 0) {
      state[v] = 1;
      stamp[v] = s;
      v = succ[v];
    }
    if (v != -1 && state[v] == 1 && stamp[v] == s) {
      std::vector<int> cyc{v};
      for (int w = succ[v]; w != v; w = succ[w]) cyc.push_back(w);
      out.push_back(std::move(cyc));
    }
    for (int w = s; w != -1 && state[w] == 1; w = succ[w]) state[w] = 2;
  }
  return out;
}

}  // namespace

CycleColouring lemma_cycle_colouring(const std::vector<ColourSet>& lists) {
  const int n = static_cast<int>(lists.size());
  if (n < 2) throw Error(Errc::bad_lists, "a circuit has at least two vertices");
  for (auto l : lists)
    if (!is_two_subset(l)) throw Error(Errc::bad_lists, "vertex lists must be 2-subsets of {1,2,3}");

  CycleColouring c{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  const bool uniform = std::all_of(lists.begin(), lists.end(), [&](ColourSet l) { return l == lists[0]; });
  if (uniform) {
    if (n % 2 == 1) throw Error(Errc::infeasible, "odd circuit with identical lists");
    const int a = lists[0].smallest();
    const auto other = (kAll - ColourSet::of({a})).members();
    for (int i = 0; i < n; ++i) {
      c.vertex_colour[i] = a;
      c.arc_colour[i] = other[i % 2];
    }
    return c;
  }

  if (n == 2) {
    for (int v0 : lists[0].members())
      for (int v1 : lists[1].members())
        for (int a0 = 1; a0 <= 3; ++a0)
          for (int a1 = 1; a1 <= 3; ++a1) {
            CycleColouring t{{v0, v1}, {a0, a1}};
            if (cycle_valid(lists, t)) return t;
          }
    throw Error(Errc::internal_defect, "two-vertex circuit with distinct lists not coloured");
  }

  // Rotate so that x1 = r(0) and x2 = r(1) have different lists.
  int first = 0;
  while (lists[first] == lists[(first + 1) % n]) ++first;
  auto r = [&](int j) { return (first + j) % n; };
  const ColourSet l1 = lists[r(0)], l2 = lists[r(1)];
  const int s = (l1 & l2).smallest();
  const int p = (l1 - l2).smallest();
  const int q = (l2 - l1).smallest();

  c.arc_colour[r(0)] = q;
  c.vertex_colour[r(1)] = s;
  c.arc_colour[r(1)] = p;
  for (int j = 2; j < n; ++j) {
    const int in_colour = c.arc_colour[r(j - 1)];
    c.vertex_colour[r(j)] = (lists[r(j)] - ColourSet::of({in_colour})).smallest();
    if (j < n - 1) c.arc_colour[r(j)] = (kAll - ColourSet::of({in_colour, c.vertex_colour[r(j)]})).smallest();
  }
  const ColourSet blocked = ColourSet::of({c.vertex_colour[r(n - 1)], c.arc_colour[r(n - 2)]});
  if (!blocked.contains(p)) {
    c.arc_colour[r(n - 1)] = p;
    c.vertex_colour[r(0)] = s;
  } else if (!blocked.contains(s)) {
    c.arc_colour[r(n - 1)] = s;
    c.vertex_colour[r(0)] = p;
  } else {
    c.arc_colour[r(n - 1)] = q;
    c.vertex_colour[r(0)] = p;
    c.arc_colour[r(0)] = s;
    c.vertex_colour[r(1)] = q;
  }
  if (!cycle_valid(lists, c)) throw Error(Errc::internal_defect, "circuit colouring construction failed");
  return c;
}

std::optional<std::vector<int>> star_list_colouring_outdegree_one(const Digraph& d, const ListAssignment& lists) {
  const int n = d.vertex_count();
  if (static_cast<int>(lists.size()) != d.arc_count())
    throw Error(Errc::precondition_violated, "one list per arc required");
  std::vector<int> out_arc(n, -1), succ(n, -1);
  for (int v = 0; v < n; ++v) {
    if (d.in_degree(v) == 0) continue;
    if (d.out_degree(v) > 1)
      throw Error(Errc::precondition_violated, "vertex " + std::to_string(v) + " has an entering arc and outdegree > 1");
    if (d.out_degree(v) == 1) {
      out_arc[v] = d.out_arcs(v)[0];
      succ[v] = d.arc(out_arc[v]).head;
    }
  }
  const auto circuits = functional_circuits(succ);
  std::vector<char> on_circuit(n, 0);
  for (const auto& cyc : circuits)
    for (int v : cyc) on_circuit[v] = 1;

  // feasible[a]: colours of a for which everything feeding into a's tail can be coloured.
  std::vector<ColourSet> feasible(d.arc_count());
  for (int a = 0; a < d.arc_count(); ++a)
    if (d.in_degree(d.arc(a).tail) == 0) feasible[a] = lists[a];

  auto in_sets = [&](int x, int skip) {
    std::vector<ColourSet> sets;
    for (int b : d.in_arcs(x))
      if (b != skip) sets.push_back(feasible[b]);
    return sets;
  };

  // Trees hanging off roots (sinks and circuit vertices), leaves first.
  std::vector<int> roots;
  for (int v = 0; v < n; ++v)
    if (d.in_degree(v) > 0 && (out_arc[v] == -1 || on_circuit[v])) roots.push_back(v);
  std::vector<int> preorder;
  for (int root : roots) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (x != root) preorder.push_back(x);
      for (int b : d.in_arcs(x)) {
        const int t = d.arc(b).tail;
        if (d.in_degree(t) > 0 && !on_circuit[t]) stack.push_back(t);
      }
    }
  }
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const int x = *it;
    const int a = out_arc[x];
    const auto sets = in_sets(x, -1);
    for (int c : lists[a].members())
      if (has_distinct(sets, ColourSet::of({c}))) feasible[a].insert(c);
  }

  std::vector<int> colour(d.arc_count(), 0);
  // Colours the arcs entering x avoiding `forbidden`, then the trees behind them.
  auto descend = [&](int x, ColourSet forbidden) {
    std::vector<std::pair<int, ColourSet>> work{{x, forbidden}};
    while (!work.empty()) {
      const auto [y, forb] = work.back();
      work.pop_back();
      const auto arcs = d.in_arcs(y);
      const auto sets = in_sets(y, -1);
      std::vector<int> pick;
      if (!pick_distinct(sets, forb, pick)) return false;
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        colour[arcs[i]] = pick[i];
        const int t = d.arc(arcs[i]).tail;
        if (d.in_degree(t) > 0) work.push_back({t, ColourSet::of({pick[i]})});
      }
    }
    return true;
  };

  for (int root : roots) {
    if (on_circuit[root] || out_arc[root] != -1) continue;
    if (!has_distinct(in_sets(root, -1), ColourSet())) return std::nullopt;
    if (!descend(root, ColourSet())) return std::nullopt;
  }

  for (const auto& cyc : circuits) {
    const int len = static_cast<int>(cyc.size());
    std::vector<int> arc(len);
    for (int i = 0; i < len; ++i) arc[i] = out_arc[cyc[i]];
    std::vector<std::vector<int>> hang_arcs(len);
    std::vector<std::vector<ColourSet>> hang(len);
    bool lemma_applies = true;
    for (int i = 0; i < len; ++i) {
      const int prev = arc[(i + len - 1) % len];
      for (int b : d.in_arcs(cyc[i]))
        if (b != prev) hang_arcs[i].push_back(b);
      hang[i] = in_sets(cyc[i], prev);
      if (lists[arc[i]] != kAll || hang[i].size() > 1 || (hang[i].size() == 1 && hang[i][0].size() < 2))
        lemma_applies = false;
    }
    std::vector<int> arc_colour(len, 0);
    bool done = false;
    if (lemma_applies) {
      // Vertex lists come from the hanging arcs; free vertices break uniformity.
      std::vector<ColourSet> vlists(len);
      std::vector<char> is_free(len, 0);
      for (int i = 0; i < len; ++i) {
        if (hang[i].size() == 1 && hang[i][0].size() == 2) {
          vlists[i] = hang[i][0];
        } else {
          vlists[i] = ColourSet::of({1, 2});
          is_free[i] = 1;
        }
      }
      const bool uniform = std::all_of(vlists.begin(), vlists.end(), [&](ColourSet l) { return l == vlists[0]; });
      if (uniform && len % 2 == 1) {
        for (int i = 0; i < len; ++i)
          if (is_free[i]) {
            vlists[i] = vlists[0] == ColourSet::of({1, 2}) ? ColourSet::of({2, 3}) : ColourSet::of({1, 2});
            break;
          }
      }
      try {
        const auto cc = lemma_cycle_colouring(vlists);
        for (int i = 0; i < len; ++i) {
          arc_colour[i] = cc.arc_colour[i];
          if (!hang_arcs[i].empty()) colour[hang_arcs[i][0]] = cc.vertex_colour[i];
        }
        done = true;
      } catch (const Error& e) {
        if (e.code() != Errc::infeasible) throw;
      }
    }
    if (!done) {
      // ok(i, p, q): x_i entered by a circuit arc of colour p and left by one of colour q.
      auto ok = [&](int i, int p, int q) { return p != q && has_distinct(hang[i], ColourSet::of({p, q})); };
      for (int c0 : lists[arc[0]].members()) {
        std::vector<std::array<int, 4>> parent(len, {0, 0, 0, 0});
        std::vector<ColourSet> reach(len);
        reach[0] = ColourSet::of({c0});
        for (int i = 1; i < len; ++i)
          for (int q : lists[arc[i]].members())
            for (int p : reach[i - 1].members())
              if (ok(i, p, q)) {
                reach[i].insert(q);
                parent[i][q] = p;
                break;
              }
        int last = 0;
        for (int q : reach[len - 1].members())
          if (ok(0, q, c0)) {
            last = q;
            break;
          }
        if (last == 0) continue;
        arc_colour[len - 1] = last;
        for (int i = len - 1; i > 0; --i) arc_colour[i - 1] = parent[i][arc_colour[i]];
        done = true;
        break;
      }
      if (!done) return std::nullopt;
      for (int i = 0; i < len; ++i) {
        std::vector<int> pick;
        if (!pick_distinct(hang[i], ColourSet::of({arc_colour[(i + len - 1) % len], arc_colour[i]}), pick))
          return std::nullopt;
        for (std::size_t j = 0; j < pick.size(); ++j) colour[hang_arcs[i][j]] = pick[j];
      }
    }
    for (int i = 0; i < len; ++i) colour[arc[i]] = arc_colour[i];
    for (int i = 0; i < len; ++i)
      for (int b : hang_arcs[i]) {
        const int t = d.arc(b).tail;
        if (d.in_degree(t) > 0 && !descend(t, ColourSet::of({colour[b]}))) return std::nullopt;
      }
  }
  return colour;
}

ArcColouring lemma_extension_colouring(const Digraph& d, const ListAssignment& lists) {
  auto fail = [](const std::string& clause) { throw Error(Errc::precondition_violated, clause); };
  if (static_cast<int>(lists.size()) != d.arc_count()) fail("one list per arc required");
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.degree(v) > 3) fail("vertex " + std::to_string(v) + " has degree above 3");
    if (d.in_degree(v) == 1 && d.out_degree(v) == 2) fail("vertex " + std::to_string(v) + " has indegree 1 and outdegree 2");
  }
  auto is_initial = [&](int a) { return d.out_degree(d.arc(a).head) != 0 && d.in_degree(d.arc(a).tail) == 0; };
  for (int a = 0; a < d.arc_count(); ++a) {
    const auto [t, h] = d.arc(a);
    const ColourSet l = lists[a];
    if (!(l - kAll).empty()) fail("list of arc " + std::to_string(a) + " is not within {1,2,3}");
    if (d.out_degree(h) == 0) {
      if (l.size() < d.in_degree(h)) fail("final arc " + std::to_string(a) + " has fewer colours than its head's indegree");
    } else if (d.in_degree(t) == 0) {
      if (l.size() < 2) fail("initial arc " + std::to_string(a) + " has fewer than 2 colours");
    } else if (l.size() != 3) {
      fail("arc " + std::to_string(a) + " must have the full list");
    }
  }
  for (int v = 0; v < d.vertex_count(); ++v) {
    const auto ins = d.in_arcs(v);
    for (std::size_t i = 0; i < ins.size(); ++i)
      for (std::size_t j = i + 1; j < ins.size(); ++j)
        if (is_initial(ins[i]) && is_initial(ins[j]) && (lists[ins[i]] | lists[ins[j]]) != kAll)
          fail("initial arcs into vertex " + std::to_string(v) + " do not cover all three colours");
  }
  std::vector<int> succ(d.vertex_count(), -1);
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.in_degree(v) > 0 && d.out_degree(v) == 1) succ[v] = d.arc(d.out_arcs(v)[0]).head;
  for (const auto& cyc : functional_circuits(succ)) {
    if (cyc.size() % 2 == 0) continue;
    ColourSet covered;
    bool all_fed = true;
    for (int v : cyc) {
      bool fed = false;
      for (int a : d.in_arcs(v))
        if (is_initial(a)) {
          fed = true;
          covered = covered | lists[a];
        }
      all_fed = all_fed && fed;
    }
    if (all_fed && covered != kAll) fail("initial arcs into an odd circuit do not cover all three colours");
  }
  auto colour = star_list_colouring_outdegree_one(d, lists);
  if (!colour) throw Error(Errc::internal_defect, "list conditions hold but no colouring was found");
  return ArcColouring{std::move(*colour), 3};
}

namespace {

// Colours positions 0..n-1 of a cyclic sequence from their lists so that
// neighbours (including n-1 and 0) differ.
std::optional<std::vector<int>> cyclic_list_colouring(const std::vector<ColourSet>& lists) {
  const std::size_t n = lists.size();
  for (int first : lists[0].members()) {
    std::vector<std::array<int, 4>> parent(n, std::array<int, 4>{0, 0, 0, 0});
    std::vector<ColourSet> reach(n);
    reach[0] = ColourSet::of({first});
    for (std::size_t i = 1; i < n; ++i)
      for (int c : lists[i].members())
        for (int p : reach[i - 1].members())
          if (p != c) {
            reach[i].insert(c);
            parent[i][c] = p;
            break;
          }
    for (int last : reach[n - 1].members()) {
      if (last == first) continue;
      std::vector<int> out(n);
      out[n - 1] = last;
      for (std::size_t i = n - 1; i > 0; --i) out[i - 1] = parent[i][out[i]];
      return out;
    }
  }
  return std::nullopt;
}

// Colours with 1..3 the arcs in `todo` (in order) so that no star rule is
// broken against arcs already coloured; exhaustive backtracking.
bool complete_by_search(const Digraph& d, std::vector<int>& colour, const std::vector<int>& todo, std::size_t i = 0) {
  if (i == todo.size()) return true;
  const int a = todo[i];
  const auto [t, h] = d.arc(a);
  ColourSet blocked;
  for (int b : d.in_arcs(h)) blocked.insert(colour[b]);
  for (int b : d.out_arcs(h)) blocked.insert(colour[b]);
  for (int b : d.in_arcs(t)) blocked.insert(colour[b]);
  for (int c : (kAll - blocked).members()) {
    colour[a] = c;
    if (complete_by_search(d, colour, todo, i + 1)) return true;
  }
  colour[a] = 0;
  return false;
}

// Colours a sub-digraph given by arc ids and writes the result back.
std::vector<int> colour_rec(const Digraph& d);

void colour_subset(const Digraph& d, const std::vector<int>& ids, std::vector<int>& colour) {
  const auto sub = colour_rec(d.arc_subgraph(ids));
  for (std::size_t i = 0; i < ids.size(); ++i) colour[ids[i]] = sub[i];
}

std::vector<int> colour_rec(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> colour(d.arc_count(), 0);
  if (d.arc_count() == 0) return colour;

  // Sources: colour everything else first, then their arcs greedily.
  {
    std::vector<int> rest, later;
    for (int a = 0; a < d.arc_count(); ++a) (d.in_degree(d.arc(a).tail) == 0 ? later : rest).push_back(a);
    if (!later.empty()) {
      colour_subset(d, rest, colour);
      if (!complete_by_search(d, colour, later)) throw Error(Errc::internal_defect, "source arcs could not be coloured");
      return colour;
    }
  }

  // Now every vertex has indegree >= 1; D1 = indegree exactly 1.
  std::vector<char> in_d1(n, 0);
  for (int v = 0; v < n; ++v) in_d1[v] = d.in_degree(v) <= 1;

  // Even circuits of D1 are coloured last; each arc keeps two free colours.
  {
    std::vector<int> pred(n, -1);
    for (int v = 0; v < n; ++v)
      if (in_d1[v] && d.in_degree(v) == 1 && in_d1[d.arc(d.in_arcs(v)[0]).tail]) pred[v] = d.arc(d.in_arcs(v)[0]).tail;
    std::vector<std::vector<int>> even;
    for (auto cyc : functional_circuits(pred)) {
      if (cyc.size() % 2 != 0) continue;
      std::reverse(cyc.begin(), cyc.end());  // successor order
      std::vector<int> arcs;
      for (int v : cyc) arcs.push_back(d.in_arcs(v)[0]);
      even.push_back(std::move(arcs));
    }
    if (!even.empty()) {
      std::vector<char> removed(d.arc_count(), 0);
      for (const auto& arcs : even)
        for (int a : arcs) removed[a] = 1;
      std::vector<int> rest;
      for (int a = 0; a < d.arc_count(); ++a)
        if (!removed[a]) rest.push_back(a);
      colour_subset(d, rest, colour);
      for (const auto& arcs : even) {
        // Each arc may not reuse the colour of the other arc leaving its head.
        std::vector<ColourSet> lists;
        for (int a : arcs) {
          ColourSet l = kAll;
          for (int b : d.out_arcs(d.arc(a).head))
            if (!removed[b]) l.erase(colour[b]);
          lists.push_back(l);
        }
        const auto cyc = cyclic_list_colouring(lists);
        if (!cyc) throw Error(Errc::internal_defect, "even circuit could not be coloured");
        for (std::size_t i = 0; i < arcs.size(); ++i) colour[arcs[i]] = (*cyc)[i];
      }
      return colour;
    }
  }

  // Critical sets and their two selected arcs (from distinct tails).
  std::vector<std::pair<int, int>> selected;
  for (int v = 0; v < n; ++v) {
    if (in_d1[v]) continue;
    std::vector<int> from_d1;
    for (int a : d.in_arcs(v))
      if (in_d1[d.arc(a).tail]) from_d1.push_back(a);
    if (from_d1.size() >= 2) selected.emplace_back(from_d1[0], from_d1[1]);
  }
  {
    std::vector<int> succ(n, -1);
    for (int v = 0; v < n; ++v)
      if (!in_d1[v])
        for (int a : d.out_arcs(v))
          if (!in_d1[d.arc(a).head]) succ[v] = d.arc(a).head;
    for (const auto& cyc : functional_circuits(succ)) {
      if (cyc.size() % 2 == 0) continue;
      std::vector<int> entering;
      bool all_d1 = true;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const int prev = cyc[(i + cyc.size() - 1) % cyc.size()];
        for (int a : d.in_arcs(cyc[i])) {
          const int t = d.arc(a).tail;
          if (t == prev) continue;
          if (in_d1[t])
            entering.push_back(a);
          else
            all_d1 = false;
        }
      }
      if (!all_d1) continue;
      std::sort(entering.begin(), entering.end());
      int second = -1;
      for (int a : entering)
        if (d.arc(a).tail != d.arc(entering[0]).tail) {
          second = a;
          break;
        }
      if (second == -1) throw Error(Errc::internal_defect, "odd critical circuit fed by a single vertex");
      selected.emplace_back(entering[0], second);
    }
  }

  // Conflict graph on D' = arcs with head in D1.
  std::vector<int> local(d.arc_count(), -1), dprime;
  for (int a = 0; a < d.arc_count(); ++a)
    if (in_d1[d.arc(a).head]) {
      local[a] = static_cast<int>(dprime.size());
      dprime.push_back(a);
    }
  Graph conflict(static_cast<int>(dprime.size()));
  for (int a : dprime)
    for (int b : d.out_arcs(d.arc(a).head))
      if (local[b] != -1) conflict.add_edge(local[a], local[b]);
  for (auto [s1, s2] : selected) {
    const int e1 = d.in_arcs(d.arc(s1).tail)[0];
    const int e2 = d.in_arcs(d.arc(s2).tail)[0];
    conflict.add_edge(local[e1], local[e2]);
  }
  if (conflict.max_degree() > 3) throw Error(Errc::internal_defect, "conflict graph has a vertex of degree above 3");

  for (const auto& comp : conflict.components()) {
    if (comp.size() != 4 || std::any_of(comp.begin(), comp.end(), [&](int x) { return conflict.degree(x) != 3; }))
      continue;
    // K4 in the conflict graph: drop its arcs' endpoints, colour the rest,
    // then complete by exhaustive search.
    std::vector<char> gone(n, 0);
    for (int x : comp) gone[d.arc(dprime[x]).tail] = gone[d.arc(dprime[x]).head] = 1;
    std::vector<int> rest, todo;
    for (int a = 0; a < d.arc_count(); ++a) (gone[d.arc(a).tail] || gone[d.arc(a).head] ? todo : rest).push_back(a);
    colour_subset(d, rest, colour);
    if (!complete_by_search(d, colour, todo)) throw Error(Errc::internal_defect, "K4 configuration could not be completed");
    return colour;
  }

  const auto cc = brooks_three_colouring(conflict);
  for (std::size_t i = 0; i < dprime.size(); ++i) colour[dprime[i]] = cc[i];

  // D'': the arcs touching D2, with every D1 vertex split into a source (its
  // leaving arcs) and a sink (its entering arc).
  std::vector<int> sink_copy(n, -1);
  int next = n;
  for (int v = 0; v < n; ++v)
    if (in_d1[v]) sink_copy[v] = next++;
  std::vector<Arc> arcs2;
  ListAssignment lists2;
  std::vector<int> origin;
  for (int a = 0; a < d.arc_count(); ++a) {
    const auto [t, h] = d.arc(a);
    if (in_d1[t] && in_d1[h]) continue;
    origin.push_back(a);
    if (in_d1[h]) {
      arcs2.push_back({t, sink_copy[h]});
      lists2.push_back(ColourSet::of({colour[a]}));
    } else if (in_d1[t]) {
      arcs2.push_back({t, h});
      lists2.push_back(kAll - ColourSet::of({colour[d.in_arcs(t)[0]]}));
    } else {
      arcs2.push_back({t, h});
      lists2.push_back(kAll);
    }
  }
  const Digraph d2(next, std::move(arcs2), true);
  auto rest = star_list_colouring_outdegree_one(d2, lists2);
  if (!rest) throw Error(Errc::internal_defect, "extension lists admit no colouring");
  for (std::size_t i = 0; i < origin.size(); ++i) colour[origin[i]] = (*rest)[i];
  return colour;
}

}  // namespace

ArcColouring star_colouring_subcubic(const Digraph& d) {
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.degree(v) > 3) throw Error(Errc::not_subcubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(d.degree(v)));
  if (d.has_parallel_arcs()) throw Error(Errc::precondition_violated, "parallel arcs are not supported");
  ArcColouring c{colour_rec(d), 3};
  if (auto bad = verify_star_colouring(d, c))
    throw Error(Errc::internal_defect, "arcs " + std::to_string(bad->first_arc) + " and " + std::to_string(bad->second_arc) +
                                           " share a colour");
  return c;
}

}  // namespace galaxia
