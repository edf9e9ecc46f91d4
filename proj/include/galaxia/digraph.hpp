#pragma once

#include <span>
#include <vector>

namespace galaxia {

struct Arc {
  int tail;
  int head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct LabelledArc {
  int tail;
  int head;
  int label;
  friend bool operator==(const LabelledArc&, const LabelledArc&) = default;
};

/// Directed multigraph on vertices 0..vertex_count-1. Arc ids are positions
/// in the arc list and key every colouring. Self-loops are rejected; parallel
/// arcs only when allow_parallel is set. Immutable after construction.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int vertex_count, std::vector<Arc> arcs, bool allow_parallel = false);

  int vertex_count() const noexcept { return vertex_count_; }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  bool allow_parallel() const noexcept { return allow_parallel_; }

  const Arc& arc(int id) const { return arcs_[id]; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  /// Arc ids, ascending.
  std::span<const int> out_arcs(int v) const { return out_[v]; }
  std::span<const int> in_arcs(int v) const { return in_[v]; }

  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int degree(int v) const { return in_degree(v) + out_degree(v); }

  bool has_parallel_arcs() const;

  /// Same vertex set, only the listed arcs (renumbered in the given order).
  Digraph arc_subgraph(std::span<const int> arc_ids) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arcs_ == b.arcs_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  bool allow_parallel_ = false;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// m-labelled digraph: (tail, head, label) triples are distinct, labels in 1..m.
class LabelledDigraph {
 public:
  LabelledDigraph() = default;
  LabelledDigraph(int vertex_count, int label_count, std::vector<LabelledArc> arcs);

  /// Canonical 1-labelled embedding of an unlabelled digraph.
  static LabelledDigraph from_digraph(const Digraph& d);

  int vertex_count() const noexcept { return vertex_count_; }
  int label_count() const noexcept { return label_count_; }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  const LabelledArc& arc(int id) const { return arcs_[id]; }
  std::span<const LabelledArc> arcs() const noexcept { return arcs_; }

  /// Underlying multidigraph with the same arc ids.
  const Digraph& digraph() const noexcept { return digraph_; }

  friend bool operator==(const LabelledDigraph& a, const LabelledDigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.label_count_ == b.label_count_ &&
           a.arcs_ == b.arcs_;
  }

 private:
  int vertex_count_ = 0;
  int label_count_ = 1;
  std::vector<LabelledArc> arcs_;
  Digraph digraph_;
};

struct DegreeProfile {
  std::vector<int> in;
  std::vector<int> out;
  std::vector<int> total;
  int max_in = 0;
  int max_out = 0;
  int max_total = 0;
};

DegreeProfile degree_profile(const Digraph& d);

/// Strongly connected components in reverse topological order of the
/// condensation (components with no leaving arcs come first). Each class is
/// sorted ascending; output is deterministic.
std::vector<std::vector<int>> strong_components(const Digraph& d);

/// Weakly connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> weak_components(const Digraph& d);

/// Vertex order in which every arc goes forward. Throws CyclicError with a
/// witness circuit otherwise. Among available vertices the smallest id goes first.
std::vector<int> topological_order(const Digraph& d);

bool is_acyclic(const Digraph& d);

/// A circuit (arc ids in order) among the arcs whose mask entry is true, found
/// by DFS that visits vertices and arcs in ascending id order. Empty mask
/// means all arcs.
std::vector<int> find_circuit(const Digraph& d, const std::vector<bool>& mask = {});

struct AcyclicEulerianSplit {
  std::vector<int> acyclic_arcs;
  std::vector<int> eulerian_arcs;
  Digraph acyclic;
  Digraph eulerian;
};

/// Peels circuits off the residual digraph until it is acyclic.
AcyclicEulerianSplit split_acyclic_eulerian(const Digraph& d);

}  // namespace galaxia
