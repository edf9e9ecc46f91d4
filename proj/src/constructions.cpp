#include "galaxia/constructions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "galaxia/colouring.hpp"
#include "galaxia/error.hpp"
#include "galaxia/oracle.hpp"

namespace galaxia {

namespace {

// n choose k, saturating at `limit`.
std::int64_t choose_capped(std::int64_t n, int k, std::int64_t limit) {
  if (k < 0 || k > n) return 0;
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > limit) return limit + 1;
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

ExtremalInstance extremal_gnmk(int n, int m, int k, std::optional<int> y_cap, std::int64_t arc_budget) {
  if (n < 1 || m < 1 || k < 1) throw Error(Errc::bad_params, "n, m and k must be at least 1");
  if (y_cap && *y_cap < k) throw Error(Errc::bad_params, "y_cap must be at least k");
  const std::int64_t big = std::int64_t{1} << 40;
  const int shift = (m + 1) * k;
  std::int64_t y_full = shift >= 40 ? big + 1 : std::int64_t{k} << shift;
  if (y_full > big) y_full = big + 1;
  const bool reduced = y_cap && *y_cap < y_full;
  const std::int64_t y = reduced ? *y_cap : y_full;
  const std::int64_t subsets = choose_capped(y, k, big);
  const __int128 z = static_cast<__int128>(m) * subsets;
  const __int128 arcs = static_cast<__int128>(k) * y + z * k;
  if (y > big || subsets > big || arcs > arc_budget || k + y + z > (1 << 30))
    throw Error(Errc::size_overflow, "G(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k) +
                                         ") exceeds the arc budget; pass a Y cap for a reduced instance");

  ExtremalInstance out;
  out.x_count = k;
  out.y_count = static_cast<int>(y);
  out.z_count = static_cast<int>(z);
  out.reduced = reduced;
  std::vector<LabelledArc> list;
  for (int x = 0; x < k; ++x)
    for (int j = 0; j < out.y_count; ++j) list.push_back({x, k + j, 1});
  int next = k + out.y_count;
  for (int label = 1; label <= m; ++label) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      for (int j : pick) list.push_back({k + j, next, label});
      ++next;
      int i = k - 1;
      while (i >= 0 && pick[i] == out.y_count - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  out.digraph = LabelledDigraph(next, m, std::move(list));
  return out;
}

GadgetCertificate certify_gadget(const Gadget& g) {
  const Digraph& d = g.digraph;
  const int m = d.arc_count();
  GadgetCertificate cert;
  bool extends[4][4][4] = {};
  ArcColouring c{std::vector<int>(m, 1), 3};
  long total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    long x = code;
    for (int i = 0; i < m; ++i, x /= 3) c.colour[i] = static_cast<int>(x % 3) + 1;
    if (verify_star_colouring(d, c)) continue;
    ++cert.colourings;
    const int a = c.colour[g.a_in], b = c.colour[g.b_out], cc = c.colour[g.c_out];
    if (a == b || b == cc || a == cc)
      ++cert.repeated_interface;
    else
      extends[a][b][cc] = true;
  }
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int cc = 1; cc <= 3; ++cc)
        cert.extendable_triples += extends[a][b][cc];
  return cert;
}

Gadget np_gadget() {
  // 0: outside tail of a; 1, 2: outside heads of b, c; 3, 4, 5 inside.
  Gadget g{Digraph(6, {{0, 3}, {5, 1}, {3, 2}, {5, 3}, {3, 5}, {4, 5}}), 0, 1, 2, 0, 1, 2};
  if (!certify_gadget(g).holds()) throw Error(Errc::internal_defect, "frozen gadget failed certification");
  return g;
}

std::vector<Arc> orientation_without_sources(const Graph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) throw Error(Errc::precondition_violated, "vertex " + std::to_string(v) + " has degree below 2");
  std::vector<Arc> arcs;
  for (auto [u, v] : g.edges()) arcs.push_back({u, v});
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < static_cast<int>(arcs.size()); ++e) {
    incident[arcs[e].tail].push_back(e);
    incident[arcs[e].head].push_back(e);
  }
  std::vector<int> in(n, 0);
  for (auto a : arcs) ++in[a.head];
  // Reverse a directed path from a source (or, backwards, into a sink) to the
  // nearest vertex that can spare an arc of the needed direction.
  auto fix = [&](int s, bool source) {
    std::vector<int> via(n, -2);
    std::deque<int> q{s};
    via[s] = -1;
    int t = -1;
    while (!q.empty() && t == -1) {
      const int v = q.front();
      q.pop_front();
      for (int e : incident[v]) {
        const int w = source ? arcs[e].head : arcs[e].tail;
        if ((source ? arcs[e].tail : arcs[e].head) != v || via[w] != -2) continue;
        via[w] = e;
        const int spare = source ? in[w] : g.degree(w) - in[w];
        if (spare >= 2) {
          t = w;
          break;
        }
        q.push_back(w);
      }
    }
    if (t == -1) throw Error(Errc::internal_defect, "no path to repair vertex " + std::to_string(s));
    for (int v = t; v != s;) {
      const int e = via[v];
      const int prev = source ? arcs[e].tail : arcs[e].head;
      --in[arcs[e].head];
      std::swap(arcs[e].tail, arcs[e].head);
      ++in[arcs[e].head];
      v = prev;
    }
  };
  for (int v = 0; v < n; ++v) {
    if (in[v] == 0) fix(v, true);
    if (in[v] == g.degree(v)) fix(v, false);
  }
  for (int v = 0; v < n; ++v)
    if (in[v] == 0 || in[v] == g.degree(v)) throw Error(Errc::internal_defect, "orientation repair left a source or sink");
  return arcs;
}

Digraph np_reduction(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) throw Error(Errc::not_cubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
  const auto oriented = orientation_without_sources(g);
  const Digraph d(g.vertex_count(), oriented);
  const Gadget gadget = np_gadget();
  const Digraph& h = gadget.digraph;
  // Gadget vertex 3 keeps the original id; 4 and 5 are new.
  int next = d.vertex_count();
  std::vector<int> b_arc(d.vertex_count(), -1), inner(d.vertex_count(), -1);
  std::vector<Arc> arcs;
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.in_degree(v) == 1) {
      b_arc[v] = d.out_arcs(v)[0];
      inner[v] = next;
      next += 2;
    }
  auto place = [&](int v, int x) { return x == 3 ? v : inner[v] + (x - 4); };
  for (int e = 0; e < d.arc_count(); ++e) {
    const auto [t, hd] = d.arc(e);
    arcs.push_back({b_arc[t] == e ? place(t, h.arc(gadget.b_out).tail) : t, hd});
  }
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (inner[v] == -1) continue;
    for (int a = 0; a < h.arc_count(); ++a) {
      if (a == gadget.a_in || a == gadget.b_out || a == gadget.c_out) continue;
      arcs.push_back({place(v, h.arc(a).tail), place(v, h.arc(a).head)});
    }
  }
  return Digraph(next, std::move(arcs));
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph generalized_petersen(int n, int k) {
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n + i);
    g.add_edge(n + i, n + (i + k) % n);
  }
  return g;
}

Graph prism_graph() { return generalized_petersen(3, 1); }
Graph petersen_graph() { return generalized_petersen(5, 2); }
Graph mobius_kantor_graph() { return generalized_petersen(8, 3); }
Graph cube_graph() { return generalized_petersen(4, 1); }

Graph random_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2) throw Error(Errc::infeasible, "a cubic graph needs an even number of at least 4 vertices");
  std::mt19937_64 rng(seed);
  std::vector<int> points(3 * n);
  for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    Graph g(n);
    bool simple = true;
    for (int i = 0; i < 3 * n && simple; i += 2) simple = g.add_edge(points[i], points[i + 1]);
    if (simple) return g;
  }
  throw Error(Errc::internal_defect, "pairing model kept producing loops or multi-edges");
}

std::optional<Graph> named_cubic(const std::string& name) {
  if (name == "k4") return complete_graph(4);
  if (name == "k33") return complete_bipartite(3, 3);
  if (name == "prism") return prism_graph();
  if (name == "cube") return cube_graph();
  if (name == "petersen") return petersen_graph();
  if (name == "mobius-kantor") return mobius_kantor_graph();
  return std::nullopt;
}

Digraph parallel_triangle(int multiplicity) {
  if (multiplicity < 1) throw Error(Errc::bad_params, "multiplicity must be at least 1");
  std::vector<Arc> arcs;
  for (int v = 0; v < 3; ++v)
    for (int i = 0; i < multiplicity; ++i) arcs.push_back({v, (v + 1) % 3});
  return Digraph(3, std::move(arcs), true);
}

Digraph random_digraph(int n, int in_cap, int out_cap, std::uint64_t seed) {
  if (n < 0 || in_cap < 0 || out_cap < 0) throw Error(Errc::infeasible, "negative size or cap");
  if ((in_cap == 0) != (out_cap == 0) || in_cap > n - 1 || out_cap > n - 1)
    if (!(in_cap == 0 && out_cap == 0))
      throw Error(Errc::infeasible, "caps " + std::to_string(in_cap) + "/" + std::to_string(out_cap) + " cannot both be attained on " +
                                        std::to_string(n) + " vertices");
  std::mt19937_64 rng(seed);
  if (in_cap == 0) return Digraph(n, {});
  // A hub takes in_cap entering arcs, then a vertex (the hub if needed) takes
  // out_cap leaving arcs, so both caps are attained; the rest is a random fill.
  std::vector<int> in(n, 0), out(n, 0);
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  std::vector<Arc> arcs;
  auto add = [&](int t, int h) {
    arcs.push_back({t, h});
    present[t][h] = 1;
    ++in[h];
    ++out[t];
  };
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int hub = order[0];
  for (int i = 1; i <= in_cap; ++i) add(order[i], hub);
  auto heads_for = [&](int s) {
    std::vector<int> hs;
    for (int v : order)
      if (v != s && in[v] < in_cap && !present[s][v]) hs.push_back(v);
    return hs;
  };
  int s = order[std::uniform_int_distribution<int>(0, n - 1)(rng)];
  std::vector<int> heads = heads_for(s);
  if (static_cast<int>(heads.size()) < out_cap - out[s]) {
    s = hub;
    heads = heads_for(s);
  }
  for (int i = 0; out[s] < out_cap; ++i) add(s, heads[i]);
  std::vector<std::pair<int, int>> pairs;
  for (int t = 0; t < n; ++t)
    for (int h = 0; h < n; ++h)
      if (t != h && !present[t][h]) pairs.emplace_back(t, h);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (auto [t, h] : pairs)
    if (in[h] < in_cap && out[t] < out_cap) add(t, h);
  return Digraph(n, std::move(arcs));
}

namespace {

Digraph random_low_degree(int n, std::uint64_t seed, bool digons) {
  if (n < 0) throw Error(Errc::infeasible, "negative size");
  std::mt19937_64 rng(seed);
  std::vector<int> deg(n, 0);
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> near(n);
  std::uniform_int_distribution<int> pick(0, std::max(0, n - 1));
  for (long k = 0; n > 1 && k < 4L * n; ++k) {
    const int t = pick(rng), h = pick(rng);
    if (t == h || deg[t] == 3 || deg[h] == 3) continue;
    bool clash = false;
    for (int a : near[t]) {
      const Arc& x = arcs[a];
      clash = clash || (x.tail == t && x.head == h) || (!digons && x.tail == h && x.head == t);
    }
    if (clash) continue;
    near[t].push_back(static_cast<int>(arcs.size()));
    near[h].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({t, h});
    ++deg[t];
    ++deg[h];
  }
  return Digraph(n, std::move(arcs));
}

}  // namespace

Digraph random_subcubic(int n, std::uint64_t seed) { return random_low_degree(n, seed, true); }
Digraph random_oriented_subcubic(int n, std::uint64_t seed) { return random_low_degree(n, seed, false); }

LabelledDigraph random_labelled_dag(int n, int m, int k, std::uint64_t seed) {
  if (n < 1 || m < 1 || k < 0) throw Error(Errc::infeasible, "need n, m >= 1 and k >= 0");
  if (static_cast<std::int64_t>(n - 1) * m < k)
    throw Error(Errc::infeasible, "indegree " + std::to_string(k) + " is unreachable with " + std::to_string(n) +
                                      " vertices and " + std::to_string(m) + " labels");
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<LabelledArc> arcs;
  for (int p = 1; p < n; ++p) {
    const int h = order[p];
    const std::int64_t room = static_cast<std::int64_t>(p) * m;
    // The last vertex always reaches indegree k; the others vary.
    int want = p == n - 1 ? k : static_cast<int>(rng() % (k + 1));
    want = static_cast<int>(std::min<std::int64_t>(want, room));
    std::vector<std::pair<int, int>> chosen;
    while (static_cast<int>(chosen.size()) < want) {
      const int t = order[rng() % p];
      const int label = 1 + static_cast<int>(rng() % m);
      if (std::find(chosen.begin(), chosen.end(), std::pair{t, label}) != chosen.end()) continue;
      chosen.emplace_back(t, label);
    }
    for (auto [t, label] : chosen) arcs.push_back({t, h, label});
  }
  return LabelledDigraph(n, m, std::move(arcs));
}

}  // namespace galaxia
