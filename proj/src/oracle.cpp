#include "galaxia/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "galaxia/error.hpp"

namespace galaxia {

std::optional<StarViolation> verify_star_colouring(const Digraph& d, const ArcColouring& c) {
  if (static_cast<int>(c.colour.size()) != d.arc_count())
    throw Error(Errc::invalid_colouring, "colouring has " + std::to_string(c.colour.size()) + " entries for " +
                                             std::to_string(d.arc_count()) + " arcs");
  for (int a = 0; a < d.arc_count(); ++a)
    if (c.colour[a] < 1 || c.colour[a] > c.colour_count)
      throw Error(Errc::invalid_colouring, "arc " + std::to_string(a) + " has colour outside 1.." +
                                               std::to_string(c.colour_count));
  for (int v = 0; v < d.vertex_count(); ++v) {
    const auto ins = d.in_arcs(v);
    const auto outs = d.out_arcs(v);
    for (std::size_t i = 0; i < ins.size(); ++i) {
      for (std::size_t j = i + 1; j < ins.size(); ++j)
        if (c.colour[ins[i]] == c.colour[ins[j]]) return StarViolation{ins[i], ins[j], 2};
      for (int b : outs)
        if (c.colour[ins[i]] == c.colour[b]) return StarViolation{ins[i], b, 1};
    }
  }
  return std::nullopt;
}

Graph arc_conflict_graph(const Digraph& d) {
  Graph g(d.arc_count());
  for (int v = 0; v < d.vertex_count(); ++v) {
    const auto ins = d.in_arcs(v);
    for (std::size_t i = 0; i < ins.size(); ++i) {
      for (std::size_t j = i + 1; j < ins.size(); ++j) g.add_edge(ins[i], ins[j]);
      for (int b : d.out_arcs(v)) g.add_edge(ins[i], b);
    }
  }
  return g;
}

int default_arc_limit() {
  if (const char* env = std::getenv("GALAXIA_ARC_LIMIT")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 40;
}

namespace {

// DSATUR backtracking on one connected component.
class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, const std::vector<int>& vertices, int colours)
      : g_(g), vertices_(vertices), k_(colours), colour_(g.vertex_count(), 0),
        count_(static_cast<std::size_t>(g.vertex_count()) * (colours + 1), 0),
        mask_(g.vertex_count(), 0) {}

  bool run() { return step(static_cast<int>(vertices_.size()), 0); }
  int colour(int v) const { return colour_[v]; }

 private:
  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v : vertices_) {
      if (colour_[v] != 0) continue;
      const int sat = std::popcount(mask_[v]);
      const int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void set(int v, int c, int delta) {
    for (int w : g_.neighbours(v)) {
      int& cnt = count_[static_cast<std::size_t>(w) * (k_ + 1) + c];
      cnt += delta;
      if (cnt == 0)
        mask_[w] &= ~(1u << c);
      else
        mask_[w] |= 1u << c;
    }
    colour_[v] = delta > 0 ? c : 0;
  }

  bool step(int remaining, int max_used) {
    if (remaining == 0) return true;
    const int v = pick();
    const int limit = std::min(k_, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (mask_[v] >> c & 1u) continue;
      set(v, c, +1);
      if (step(remaining - 1, std::max(max_used, c))) return true;
      set(v, c, -1);
    }
    return false;
  }

  const Graph& g_;
  const std::vector<int>& vertices_;
  int k_;
  std::vector<int> colour_;
  std::vector<int> count_;
  std::vector<std::uint32_t> mask_;
};

}  // namespace

std::optional<std::vector<int>> exact_graph_colouring(const Graph& g, int colours) {
  if (colours > 31) throw Error(Errc::bad_params, "at most 31 colours supported");
  std::vector<int> result(g.vertex_count(), 0);
  for (const auto& comp : g.components()) {
    if (colours < 1) return std::nullopt;
    DsaturSearch search(g, comp, colours);
    if (!search.run()) return std::nullopt;
    for (int v : comp) result[v] = search.colour(v);
  }
  return result;
}

ExactDst exact_dst(const Digraph& d, int colour_cap, int arc_limit) {
  if (d.arc_count() > arc_limit)
    throw Error(Errc::too_large, std::to_string(d.arc_count()) + " arcs exceed the limit of " + std::to_string(arc_limit));
  if (d.arc_count() == 0) return {0, ArcColouring{{}, 0}};
  const Graph conflict = arc_conflict_graph(d);
  const int lower = std::max(1, degree_profile(d).max_in);
  for (int c = lower; c <= std::min(colour_cap, 31); ++c) {
    if (auto col = exact_graph_colouring(conflict, c)) return {c, ArcColouring{std::move(*col), c}};
  }
  throw Error(Errc::above_cap, "more than " + std::to_string(colour_cap) + " colours needed");
}

namespace {

class LambdaSearch {
 public:
  LambdaSearch(const LabelledDigraph& ld, int fibres, int colours)
      : ld_(ld), n_(fibres), k_(colours), m_(ld.label_count()),
        in_(static_cast<std::size_t>(ld.vertex_count()) * (colours + 1), 0),
        out_(in_.size(), 0),
        label_(in_.size() * (ld.label_count() + 1), 0),
        colour_(ld.arc_count(), 0) {
    order_.resize(ld.arc_count());
    std::iota(order_.begin(), order_.end(), 0);
    const Digraph& d = ld.digraph();
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return d.in_degree(ld.arc(a).head) > d.in_degree(ld.arc(b).head);
    });
  }

  bool run() { return step(0, 0); }
  const std::vector<int>& colour() const { return colour_; }

 private:
  std::size_t vc(int v, int c) const { return static_cast<std::size_t>(v) * (k_ + 1) + c; }
  std::size_t vcl(int v, int c, int l) const { return vc(v, c) * (m_ + 1) + l; }

  bool step(std::size_t i, int max_used) {
    if (i == order_.size()) return true;
    const int a = order_[i];
    const auto [t, h, l] = ld_.arc(a);
    const int limit = std::min(k_, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (in_[vc(h, c)] + 1 + out_[vc(h, c)] > n_) continue;
      const bool new_label = label_[vcl(t, c, l)] == 0;
      if (new_label && in_[vc(t, c)] + out_[vc(t, c)] + 1 > n_) continue;
      ++in_[vc(h, c)];
      ++label_[vcl(t, c, l)];
      if (new_label) ++out_[vc(t, c)];
      colour_[a] = c;
      if (step(i + 1, std::max(max_used, c))) return true;
      --in_[vc(h, c)];
      --label_[vcl(t, c, l)];
      if (new_label) --out_[vc(t, c)];
    }
    colour_[a] = 0;
    return false;
  }

  const LabelledDigraph& ld_;
  int n_, k_, m_;
  std::vector<int> in_, out_, label_;
  std::vector<int> colour_;
  std::vector<int> order_;
};

}  // namespace

ExactLambda exact_lambda_n(const LabelledDigraph& ld, int fibres, int colour_cap, int arc_limit) {
  if (fibres < 1) throw Error(Errc::bad_params, "fibre count must be positive");
  if (ld.arc_count() > arc_limit)
    throw Error(Errc::too_large, std::to_string(ld.arc_count()) + " arcs exceed the limit of " + std::to_string(arc_limit));
  if (ld.arc_count() == 0) return {0, FibreColouring{fibres, {}, 0}};
  const int max_in = degree_profile(ld.digraph()).max_in;
  const int lower = std::max(1, (max_in + fibres - 1) / fibres);
  for (int c = lower; c <= colour_cap; ++c) {
    LambdaSearch search(ld, fibres, c);
    if (search.run()) return {c, FibreColouring{fibres, search.colour(), c}};
  }
  throw Error(Errc::above_cap, "more than " + std::to_string(colour_cap) + " colours needed");
}

std::vector<int> find_bicoloured_circuit(const Digraph& d, const ArcColouring& c) {
  const std::set<int> used(c.colour.begin(), c.colour.end());
  const std::vector<int> colours(used.begin(), used.end());
  std::vector<bool> mask(d.arc_count());
  auto test = [&](int x, int y) {
    for (int a = 0; a < d.arc_count(); ++a) mask[a] = c.colour[a] == x || c.colour[a] == y;
    return find_circuit(d, mask);
  };
  if (colours.size() == 1) return test(colours[0], colours[0]);
  for (std::size_t i = 0; i < colours.size(); ++i)
    for (std::size_t j = i + 1; j < colours.size(); ++j)
      if (auto circuit = test(colours[i], colours[j]); !circuit.empty()) return circuit;
  return {};
}

std::optional<std::vector<int>> edge_colouring_3regular(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) throw Error(Errc::not_cubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
  if (g.vertex_count() > 20) throw Error(Errc::too_large, "edge colouring is limited to 20 vertices");
  // Properly colouring the line graph is the same problem.
  const auto& edges = g.edges();
  Graph line(g.edge_count());
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, e] = edges[j];
      if (a == c || a == e || b == c || b == e) line.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return exact_graph_colouring(line, 3);
}

}  // namespace galaxia
