#include "galaxia/digraph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "galaxia/error.hpp"

namespace galaxia {

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs, bool allow_parallel)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)), allow_parallel_(allow_parallel) {
  if (vertex_count < 0) throw Error(Errc::validate, "negative vertex count");
  out_.resize(vertex_count);
  in_.resize(vertex_count);
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < arc_count(); ++i) {
    const auto [t, h] = arcs_[i];
    if (t < 0 || t >= vertex_count || h < 0 || h >= vertex_count)
      throw Error(Errc::validate, "arc " + std::to_string(i) + " has an endpoint out of range");
    if (t == h) throw Error(Errc::validate, "arc " + std::to_string(i) + " is a self-loop");
    if (!allow_parallel && !seen.emplace(t, h).second)
      throw Error(Errc::validate, "parallel arc " + std::to_string(t) + "->" + std::to_string(h));
    out_[t].push_back(i);
    in_[h].push_back(i);
  }
}

bool Digraph::has_parallel_arcs() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& a : arcs_)
    if (!seen.emplace(a.tail, a.head).second) return true;
  return false;
}

Digraph Digraph::arc_subgraph(std::span<const int> arc_ids) const {
  std::vector<Arc> arcs;
  arcs.reserve(arc_ids.size());
  for (int id : arc_ids) arcs.push_back(arcs_[id]);
  return Digraph(vertex_count_, std::move(arcs), allow_parallel_);
}

LabelledDigraph::LabelledDigraph(int vertex_count, int label_count, std::vector<LabelledArc> arcs)
    : vertex_count_(vertex_count), label_count_(label_count), arcs_(std::move(arcs)) {
  if (label_count < 1) throw Error(Errc::validate, "label count must be positive");
  std::set<std::tuple<int, int, int>> seen;
  std::vector<Arc> plain;
  plain.reserve(arcs_.size());
  for (int i = 0; i < arc_count(); ++i) {
    const auto& a = arcs_[i];
    if (a.label < 1 || a.label > label_count)
      throw Error(Errc::validate, "arc " + std::to_string(i) + " has label outside 1..m");
    if (!seen.emplace(a.tail, a.head, a.label).second)
      throw Error(Errc::validate, "duplicate arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                                      " with label " + std::to_string(a.label));
    plain.push_back({a.tail, a.head});
  }
  digraph_ = Digraph(vertex_count, std::move(plain), /*allow_parallel=*/true);
}

LabelledDigraph LabelledDigraph::from_digraph(const Digraph& d) {
  std::vector<LabelledArc> arcs;
  arcs.reserve(d.arc_count());
  for (const auto& a : d.arcs()) arcs.push_back({a.tail, a.head, 1});
  return LabelledDigraph(d.vertex_count(), 1, std::move(arcs));
}

DegreeProfile degree_profile(const Digraph& d) {
  DegreeProfile p;
  const int n = d.vertex_count();
  p.in.resize(n);
  p.out.resize(n);
  p.total.resize(n);
  for (int v = 0; v < n; ++v) {
    p.in[v] = d.in_degree(v);
    p.out[v] = d.out_degree(v);
    p.total[v] = p.in[v] + p.out[v];
    p.max_in = std::max(p.max_in, p.in[v]);
    p.max_out = std::max(p.max_out, p.out[v]);
    p.max_total = std::max(p.max_total, p.total[v]);
  }
  return p;
}

std::vector<std::vector<int>> strong_components(const Digraph& d) {
  // Iterative Tarjan. Components are emitted sinks-first, which is the
  // reverse topological order of the condensation.
  const int n = d.vertex_count();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> result;
  int counter = 0;

  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& f = call.back();
      const auto outs = d.out_arcs(f.v);
      if (f.next < outs.size()) {
        const int w = d.arc(outs[f.next++]).head;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const int v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
      }
    }
  }
  return result;
}

std::vector<std::vector<int>> weak_components(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> result;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(result.size());
    result.emplace_back();
    std::vector<int> todo{s};
    comp[s] = id;
    while (!todo.empty()) {
      const int v = todo.back();
      todo.pop_back();
      result[id].push_back(v);
      auto visit = [&](int w) {
        if (comp[w] == -1) {
          comp[w] = id;
          todo.push_back(w);
        }
      };
      for (int a : d.out_arcs(v)) visit(d.arc(a).head);
      for (int a : d.in_arcs(v)) visit(d.arc(a).tail);
    }
    std::sort(result[id].begin(), result[id].end());
  }
  return result;
}

std::vector<int> find_circuit(const Digraph& d, const std::vector<bool>& mask) {
  const int n = d.vertex_count();
  auto usable = [&](int a) { return mask.empty() || mask[a]; };
  // 0 = unvisited, 1 = on the DFS path, 2 = finished
  std::vector<char> state(n, 0);
  std::vector<int> via(n, -1);  // arc used to enter the vertex on the DFS path
  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (int root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    state[root] = 1;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& f = call.back();
      const auto outs = d.out_arcs(f.v);
      if (f.next < outs.size()) {
        const int a = outs[f.next++];
        if (!usable(a)) continue;
        const int w = d.arc(a).head;
        if (state[w] == 0) {
          state[w] = 1;
          via[w] = a;
          call.push_back({w, 0});
        } else if (state[w] == 1) {
          std::vector<int> circuit{a};
          for (int x = f.v; x != w; x = d.arc(via[x]).tail) circuit.push_back(via[x]);
          std::reverse(circuit.begin(), circuit.end());
          return circuit;
        }
        continue;
      }
      state[f.v] = 2;
      call.pop_back();
    }
  }
  return {};
}

std::vector<int> topological_order(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> indeg(n);
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v) {
    indeg[v] = d.in_degree(v);
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int a : d.out_arcs(v))
      if (--indeg[d.arc(a).head] == 0) ready.push(d.arc(a).head);
  }
  if (static_cast<int>(order.size()) != n) throw CyclicError(find_circuit(d));
  return order;
}

bool is_acyclic(const Digraph& d) { return find_circuit(d).empty(); }

AcyclicEulerianSplit split_acyclic_eulerian(const Digraph& d) {
  std::vector<bool> residual(d.arc_count(), true);
  std::vector<int> eulerian;
  for (;;) {
    auto circuit = find_circuit(d, residual);
    if (circuit.empty()) break;
    for (int a : circuit) {
      residual[a] = false;
      eulerian.push_back(a);
    }
  }
  std::sort(eulerian.begin(), eulerian.end());
  AcyclicEulerianSplit split;
  for (int a = 0; a < d.arc_count(); ++a)
    if (residual[a]) split.acyclic_arcs.push_back(a);
  split.eulerian_arcs = std::move(eulerian);
  split.acyclic = d.arc_subgraph(split.acyclic_arcs);
  split.eulerian = d.arc_subgraph(split.eulerian_arcs);
  return split;
}

}  // namespace galaxia
