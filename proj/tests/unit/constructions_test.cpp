#include <doctest.h>

#include "galaxia/constructions.hpp"
#include "galaxia/error.hpp"
#include "galaxia/oracle.hpp"

using namespace galaxia;

namespace {

int max_in(const Digraph& d) {
  int best = 0;
  for (int v = 0; v < d.vertex_count(); ++v) best = std::max(best, d.in_degree(v));
  return best;
}

int max_out(const Digraph& d) {
  int best = 0;
  for (int v = 0; v < d.vertex_count(); ++v) best = std::max(best, d.out_degree(v));
  return best;
}

}  // namespace

TEST_CASE("extremal digraph for n = m = k = 1") {
  auto e = extremal_gnmk(1, 1, 1);
  CHECK(e.x_count == 1);
  CHECK(e.y_count == 4);
  CHECK(e.z_count == 4);
  CHECK_FALSE(e.reduced);
  const Digraph& d = e.digraph.digraph();
  CHECK(max_in(d) == 1);
  CHECK(exact_dst(d, 4).colours == 2);
}

TEST_CASE("extremal digraph layers and labels") {
  auto e = extremal_gnmk(1, 2, 2, 6);
  CHECK(e.reduced);
  CHECK(e.y_count == 6);
  CHECK(e.z_count == 2 * 15);
  const Digraph& d = e.digraph.digraph();
  CHECK(max_in(d) == 2);
  for (int z = e.x_count + e.y_count; z < d.vertex_count(); ++z) {
    CHECK(d.in_degree(z) == 2);
    const int label = e.digraph.arc(d.in_arcs(z)[0]).label;
    CHECK(e.digraph.arc(d.in_arcs(z)[1]).label == label);
  }
  CHECK_THROWS_AS(extremal_gnmk(1, 2, 3), Error);
  CHECK_THROWS_AS(extremal_gnmk(1, 0, 1), Error);
  // k = 2, m = 1: |Y| = 2 * 2^4 = 32, |Z| = C(32,2) = 496, within budget
  auto full = extremal_gnmk(2, 1, 2);
  CHECK(full.y_count == 32);
  CHECK(full.z_count == 496);
}

TEST_CASE("gadget certificate") {
  auto g = np_gadget();
  auto cert = certify_gadget(g);
  CHECK(cert.repeated_interface == 0);
  CHECK(cert.extendable_triples == 6);
  CHECK(cert.colourings > 0);
  const Digraph& d = g.digraph;
  CHECK(max_in(d) <= 2);
  CHECK(max_out(d) <= 2);
  CHECK(d.arc(g.a_in).tail == g.outside_tail);
  CHECK(d.arc(g.b_out).head == g.outside_b);
  CHECK(d.arc(g.c_out).head == g.outside_c);
  for (int v : {g.outside_tail, g.outside_b, g.outside_c}) CHECK(d.degree(v) == 1);
}

TEST_CASE("orientation without sources or sinks") {
  for (auto name : {"k4", "k33", "prism", "cube", "petersen", "mobius-kantor"}) {
    const Graph g = *named_cubic(name);
    const Digraph d(g.vertex_count(), orientation_without_sources(g));
    for (int v = 0; v < d.vertex_count(); ++v) {
      CHECK(d.in_degree(v) >= 1);
      CHECK(d.out_degree(v) >= 1);
    }
  }
}

TEST_CASE("reduction matches edge colourability") {
  struct Case {
    const char* name;
    int expected;
  };
  for (auto [name, expected] : {Case{"k4", 3}, Case{"k33", 3}, Case{"prism", 3}, Case{"petersen", 4}}) {
    const Graph g = *named_cubic(name);
    const Digraph d = np_reduction(g);
    CHECK(max_in(d) <= 2);
    CHECK(max_out(d) <= 2);
    const bool colourable = edge_colouring_3regular(g).has_value();
    CHECK(colourable == (expected == 3));
    CHECK(exact_dst(d, 4, 200).colours == expected);
  }
  CHECK_THROWS_AS(np_reduction(complete_graph(5)), Error);
}

TEST_CASE("random generators") {
  auto a = random_digraph(30, 2, 2, 5);
  CHECK(max_in(a) == 2);
  CHECK(max_out(a) == 2);
  CHECK(a == random_digraph(30, 2, 2, 5));
  CHECK_THROWS_AS(random_digraph(3, 3, 1, 1), Error);
  // lopsided and saturating caps are still attained
  for (int n = 2; n <= 9; ++n)
    for (int in = 1; in < n; ++in)
      for (int out = 1; out < n; ++out)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
          auto d = random_digraph(n, in, out, seed);
          CHECK(max_in(d) == in);
          CHECK(max_out(d) == out);
        }
  CHECK(max_in(random_digraph(200, 5, 1, 3)) == 5);

  auto s = random_subcubic(50, 9);
  for (int v = 0; v < s.vertex_count(); ++v) CHECK(s.degree(v) <= 3);
  CHECK(s == random_subcubic(50, 9));

  auto o = random_oriented_subcubic(50, 9);
  for (int v = 0; v < o.vertex_count(); ++v)
    for (int x : o.out_arcs(v))
      for (int y : o.out_arcs(o.arc(x).head)) CHECK(o.arc(y).head != v);

  auto dag = random_labelled_dag(40, 3, 4, 2);
  CHECK(is_acyclic(dag.digraph()));
  CHECK(max_in(dag.digraph()) == 4);
  CHECK(dag == random_labelled_dag(40, 3, 4, 2));
  CHECK_THROWS_AS(random_labelled_dag(2, 1, 3, 0), Error);

  auto cubic = random_cubic(14, 3);
  for (int v = 0; v < 14; ++v) CHECK(cubic.degree(v) == 3);
}
