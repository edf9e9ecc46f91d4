#include "galaxia/acircuitic.hpp"

#include <algorithm>
#include <string>

#include "galaxia/brooks.hpp"
#include "galaxia/error.hpp"
#include "galaxia/oracle.hpp"

namespace galaxia {

ArcColouring list_colouring_acyclic(const Digraph& d, const ListAssignment& lists) {
  if (static_cast<int>(lists.size()) != d.arc_count())
    throw Error(Errc::precondition_violated, "one list per arc required");
  if (!is_acyclic(d)) throw Error(Errc::precondition_violated, "digraph has a circuit");
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.degree(v) > 3) throw Error(Errc::precondition_violated, "vertex " + std::to_string(v) + " has degree above 3");
  for (int a = 0; a < d.arc_count(); ++a)
    if (lists[a].size() < d.degree(d.arc(a).head))
      throw Error(Errc::precondition_violated, "list of arc " + std::to_string(a) + " is shorter than its head's degree");

  ListAssignment live = lists;
  ArcColouring c{std::vector<int>(d.arc_count(), 0), 0};
  std::vector<int> out_left(d.vertex_count());
  for (int v = 0; v < d.vertex_count(); ++v) out_left[v] = d.out_degree(v);
  std::vector<char> done(d.arc_count(), 0);
  // Sinks of the shrinking digraph; arcs into them are coloured in index order.
  std::vector<int> ready;
  for (int a = 0; a < d.arc_count(); ++a)
    if (out_left[d.arc(a).head] == 0) ready.push_back(a);
  while (!ready.empty()) {
    std::pop_heap(ready.begin(), ready.end(), std::greater<>());
    const int a = ready.back();
    ready.pop_back();
    const auto [x, y] = d.arc(a);
    if (live[a].empty()) throw Error(Errc::internal_defect, "list of arc " + std::to_string(a) + " ran out");
    const int w = live[a].smallest();
    c.colour[a] = w;
    done[a] = 1;
    for (int v : {x, y})
      for (int b : d.in_arcs(v))
        if (!done[b]) live[b].erase(w);
    if (--out_left[x] == 0)
      for (int b : d.in_arcs(x)) {
        ready.push_back(b);
        std::push_heap(ready.begin(), ready.end(), std::greater<>());
      }
  }
  c.colour_count = c.max_colour();
  return c;
}

bool is_matching(const Digraph& d, const std::vector<int>& arcs) {
  std::vector<char> used(d.vertex_count(), 0);
  for (int a : arcs) {
    const auto [t, h] = d.arc(a);
    if (used[t] || used[h]) return false;
    used[t] = used[h] = 1;
  }
  return true;
}

AcircuiticColouring acircuitic_colouring_detailed(const Digraph& d) {
  const int n = d.vertex_count();
  for (int v = 0; v < n; ++v)
    if (d.degree(v) > 3) throw Error(Errc::not_subcubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(d.degree(v)));
  if (d.has_parallel_arcs()) throw Error(Errc::precondition_violated, "parallel arcs are not supported");
  for (int a = 0; a < d.arc_count(); ++a)
    for (int b : d.out_arcs(d.arc(a).head))
      if (d.arc(b).head == d.arc(a).tail)
        throw Error(Errc::has_digon, "arcs " + std::to_string(a) + " and " + std::to_string(b) + " form a digon");

  std::vector<char> low(n, 0);  // V1: outdegree at most one
  for (int v = 0; v < n; ++v) low[v] = d.out_degree(v) <= 1;

  std::vector<int> colour(d.arc_count(), 0);
  std::vector<int> match_of_tail(n, -1), match_of_head(n, -1);
  for (int a = 0; a < d.arc_count(); ++a) {
    const auto [t, h] = d.arc(a);
    if (low[t] && !low[h]) {
      colour[a] = 4;
      match_of_tail[t] = match_of_head[h] = a;
    }
  }
  // Circuits inside V1 or V2 are vertex-disjoint; each loses its lowest arc.
  {
    std::vector<char> inside(d.arc_count(), 0);
    for (int a = 0; a < d.arc_count(); ++a) inside[a] = low[d.arc(a).tail] == low[d.arc(a).head];
    std::vector<int> state(n, 0);
    for (int s = 0; s < n; ++s) {
      if (state[s]) continue;
      // Walk forward in V1 (unique leaving arc) or backward in V2 (unique entering arc).
      auto step = [&](int v) -> int {
        if (low[v]) {
          for (int a : d.out_arcs(v))
            if (inside[a]) return a;
        } else {
          for (int a : d.in_arcs(v))
            if (inside[a]) return a;
        }
        return -1;
      };
      std::vector<int> walk;
      int v = s;
      while (v != -1 && state[v] == 0) {
        state[v] = 1;
        walk.push_back(v);
        const int a = step(v);
        v = a == -1 ? -1 : (low[v] ? d.arc(a).head : d.arc(a).tail);
      }
      if (v != -1 && state[v] == 1) {
        int lowest = -1;
        for (int w = v;;) {
          const int a = step(w);
          if (lowest == -1 || a < lowest) lowest = a;
          w = low[w] ? d.arc(a).head : d.arc(a).tail;
          if (w == v) break;
        }
        colour[lowest] = 4;
      }
      for (int w : walk) state[w] = 2;
    }
  }

  // H on the arcs from Y (heads of M) to X (tails of M).
  std::vector<int> cross, pos(d.arc_count(), -1);
  for (int a = 0; a < d.arc_count(); ++a) {
    const auto [t, h] = d.arc(a);
    if (match_of_head[t] != -1 && match_of_tail[h] != -1) {
      pos[a] = static_cast<int>(cross.size());
      cross.push_back(a);
    }
  }
  Graph h(static_cast<int>(cross.size()));
  for (int e : cross) {
    const int i = match_of_head[d.arc(e).tail];
    const int j = match_of_tail[d.arc(e).head];
    for (int f : d.in_arcs(d.arc(e).head))  // (a): same head
      if (f != e && pos[f] != -1) h.add_edge(pos[e], pos[f]);
    if (i > j)  // (b): y_i x_j then y_j x_l with l > j
      for (int f : d.out_arcs(d.arc(j).head))
        if (pos[f] != -1 && match_of_tail[d.arc(f).head] > j) h.add_edge(pos[e], pos[f]);
  }
  if (h.max_degree() > 3) throw Error(Errc::internal_defect, "H has a vertex of degree above 3");
  const auto hc = brooks_three_colouring(h);
  for (std::size_t i = 0; i < cross.size(); ++i) colour[cross[i]] = hc[i];

  std::vector<int> rest;
  for (int a = 0; a < d.arc_count(); ++a)
    if (colour[a] == 0) rest.push_back(a);
  const Digraph residual = d.arc_subgraph(rest);
  ListAssignment lists;
  for (int a : rest) {
    ColourSet l = ColourSet::range(1, 3);
    for (int f : d.in_arcs(d.arc(a).head))
      if (pos[f] != -1) l.erase(colour[f]);
    lists.push_back(l);
  }
  const auto tail_colours = list_colouring_acyclic(residual, lists);
  for (std::size_t i = 0; i < rest.size(); ++i) colour[rest[i]] = tail_colours.colour[i];

  AcircuiticColouring out{ArcColouring{std::move(colour), 4}, {}, std::move(cross), std::move(h)};
  for (int a = 0; a < d.arc_count(); ++a)
    if (out.colouring.colour[a] == 4) out.colour_four.push_back(a);
  if (auto bad = verify_star_colouring(d, out.colouring))
    throw Error(Errc::internal_defect, "arcs " + std::to_string(bad->first_arc) + " and " + std::to_string(bad->second_arc) +
                                           " share a colour");
  if (!is_matching(d, out.colour_four)) throw Error(Errc::internal_defect, "colour 4 is not a matching");
  if (!find_bicoloured_circuit(d, out.colouring).empty()) throw Error(Errc::internal_defect, "a circuit uses two colours");
  return out;
}

ArcColouring acircuitic_colouring(const Digraph& d) { return acircuitic_colouring_detailed(d).colouring; }

}  // namespace galaxia
