#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galaxia/digraph.hpp"
#include "galaxia/graph.hpp"

namespace galaxia {

struct ExtremalInstance {
  LabelledDigraph digraph;
  int x_count = 0;  // vertices 0..x_count-1
  int y_count = 0;  // then Y, then Z
  int z_count = 0;
  bool reduced = false;  // Y truncated to y_cap
};

/// Lower-bound digraph: X (k vertices) -> every Y vertex with label 1, and for
/// each k-subset S of Y and label i a Z vertex entered from S by label i arcs.
/// |Y| = k * 2^((m+1)k) unless `y_cap` truncates it. Throws SizeOverflow when
/// the arc count would exceed `arc_budget`, BadParams unless n, m, k >= 1.
ExtremalInstance extremal_gnmk(int n, int m, int k, std::optional<int> y_cap = std::nullopt,
                               std::int64_t arc_budget = 1'000'000);

struct Gadget {
  Digraph digraph;
  int a_in = 0;  // arc ids of the interface arcs
  int b_out = 0;
  int c_out = 0;
  int outside_tail = 0;  // the degree-one endpoints standing for the rest of the graph
  int outside_b = 0;
  int outside_c = 0;
};

struct GadgetCertificate {
  long colourings = 0;           // directed star 3-colourings of the gadget
  long repeated_interface = 0;   // of those, how many repeat a colour on a, b, c (must be 0)
  int extendable_triples = 0;    // distinct precolourings of a, b, c that extend (must be 6)
  bool holds() const { return colourings > 0 && repeated_interface == 0 && extendable_triples == 6; }
};

/// Exhaustive check of both interface properties.
GadgetCertificate certify_gadget(const Gadget& g);

/// The frozen gadget: one entering arc, two leaving arcs, in- and outdegree at
/// most 2. Certified on every call; throws InternalDefect if that ever fails.
Gadget np_gadget();

/// Orientation of a graph with minimum degree 2 in which no vertex is a
/// source or a sink. Returns arcs (tail, head), one per edge in edges() order.
std::vector<Arc> orientation_without_sources(const Graph& g);

/// Digraph with in- and outdegree at most 2 that is directed star
/// 3-colourable iff the cubic graph g is 3-edge-colourable. Throws NotCubic.
Digraph np_reduction(const Graph& g);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph generalized_petersen(int n, int k);
Graph prism_graph();         // two triangles joined by a matching
Graph petersen_graph();      // GP(5,2)
Graph mobius_kantor_graph(); // GP(8,3)
Graph cube_graph();          // Q3
/// Uniform-ish random 3-regular simple graph on an even number of vertices.
Graph random_cubic(int n, std::uint64_t seed);

/// Named cubic graph by name (k4, k33, prism, cube, petersen, mobius-kantor).
std::optional<Graph> named_cubic(const std::string& name);

/// Triangle u->v->w->u with every arc repeated `multiplicity` times.
Digraph parallel_triangle(int multiplicity);

/// Random simple digraph with maximum indegree exactly `in_cap` and maximum
/// outdegree exactly `out_cap`. Throws Infeasible when no such digraph exists.
Digraph random_digraph(int n, int in_cap, int out_cap, std::uint64_t seed);
/// Random digraph with d-(v) + d+(v) <= 3, digons allowed, no parallel arcs.
Digraph random_subcubic(int n, std::uint64_t seed);
/// As random_subcubic, without digons.
Digraph random_oriented_subcubic(int n, std::uint64_t seed);
/// Random acyclic m-labelled digraph with maximum indegree exactly k.
LabelledDigraph random_labelled_dag(int n, int m, int k, std::uint64_t seed);

}  // namespace galaxia
