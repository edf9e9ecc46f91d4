#include <doctest.h>

#include <sstream>

#include "galaxia/digraph.hpp"
#include "galaxia/error.hpp"
#include "galaxia/io.hpp"
#include "helpers.hpp"

using namespace galaxia;
using testing_helpers::circuit;
using testing_helpers::complete;
using testing_helpers::make;

TEST_CASE("constructor rejects malformed arcs") {
  CHECK_THROWS_AS(make(2, {{0, 2}}), Error);
  CHECK_THROWS_AS(make(2, {{1, 1}}), Error);
  CHECK_THROWS_AS(make(2, {{0, 1}, {0, 1}}), Error);
  CHECK_NOTHROW(make(2, {{0, 1}, {0, 1}}, true));
  CHECK_NOTHROW(make(2, {{0, 1}, {1, 0}}));
}

TEST_CASE("degree profiles") {
  auto empty = degree_profile(Digraph(3, {}));
  CHECK(empty.max_total == 0);
  CHECK(empty.in == std::vector<int>{0, 0, 0});

  auto c3 = degree_profile(circuit(3));
  CHECK(c3.in == std::vector<int>{1, 1, 1});
  CHECK(c3.out == std::vector<int>{1, 1, 1});
  CHECK(c3.max_total == 2);

  auto k3 = degree_profile(complete(3));
  for (int v = 0; v < 3; ++v) {
    CHECK(k3.in[v] == 2);
    CHECK(k3.out[v] == 2);
    CHECK(k3.total[v] == 4);
  }
}

TEST_CASE("strong components come sinks first") {
  CHECK(strong_components(circuit(3)) == std::vector<std::vector<int>>{{0, 1, 2}});
  auto path = strong_components(make(3, {{0, 1}, {1, 2}}));
  CHECK(path == std::vector<std::vector<int>>{{2}, {1}, {0}});
  auto two = strong_components(make(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {1, 2}}));
  CHECK(two == std::vector<std::vector<int>>{{2, 3}, {0, 1}});
}

TEST_CASE("topological order") {
  CHECK(topological_order(make(3, {{0, 1}, {1, 2}})) == std::vector<int>{0, 1, 2});
  try {
    topological_order(make(2, {{0, 1}, {1, 0}}));
    FAIL("expected CyclicError");
  } catch (const CyclicError& e) {
    CHECK(e.code() == Errc::cyclic);
    CHECK(e.circuit().size() == 2);
  }
  auto diamond = make(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto order = topological_order(diamond);
  CHECK(order.front() == 0);
  CHECK(order.back() == 3);
  std::vector<int> pos(4);
  for (int i = 0; i < 4; ++i) pos[order[i]] = i;
  for (const auto& a : diamond.arcs()) CHECK(pos[a.tail] < pos[a.head]);
}

TEST_CASE("find_circuit returns arcs in order") {
  auto d = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}});
  auto c = find_circuit(d);
  REQUIRE(c.size() == 3);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(d.arc(c[i]).head == d.arc(c[(i + 1) % c.size()]).tail);
  CHECK(find_circuit(make(3, {{0, 1}, {1, 2}})).empty());
}

TEST_CASE("acyclic / Eulerian split") {
  auto c4 = split_acyclic_eulerian(circuit(4));
  CHECK(c4.acyclic_arcs.empty());
  CHECK(c4.eulerian_arcs.size() == 4);

  auto dag = split_acyclic_eulerian(make(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  CHECK(dag.eulerian_arcs.empty());

  // 3-circuit plus chord 0->2 (arc 3)
  auto chord = split_acyclic_eulerian(make(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}}));
  CHECK(chord.acyclic_arcs == std::vector<int>{3});
  CHECK(chord.eulerian_arcs == std::vector<int>{0, 1, 2});

  auto k4 = split_acyclic_eulerian(complete(4));
  CHECK(is_acyclic(k4.acyclic));
  for (int v = 0; v < 4; ++v) CHECK(k4.eulerian.in_degree(v) == k4.eulerian.out_degree(v));
  CHECK(k4.acyclic.arc_count() + k4.eulerian.arc_count() == 12);
}

TEST_CASE("file round trip") {
  LabelledDigraph ld(4, 2, {{0, 1, 1}, {0, 1, 2}, {1, 2, 1}, {3, 2, 2}});
  std::stringstream ss;
  write_digraph(ss, ld, {"generator=test"});
  CHECK(read_digraph(ss) == ld);

  std::stringstream plain("p dsa 3 2 1\na 0 1\n# comment\na 1 2 # trailing\n");
  auto p = read_digraph(plain);
  CHECK(p.arc_count() == 2);
  CHECK(p.arc(1).label == 1);
}

TEST_CASE("parse and validation errors") {
  std::stringstream label0("p dsa 2 1 1\na 0 1 0\n");
  CHECK_THROWS_AS(read_digraph(label0), ParseError);
  std::stringstream dup("p dsa 2 2 1\na 0 1 1\na 0 1 1\n");
  try {
    read_digraph(dup);
    FAIL("expected validation error");
  } catch (const ParseError&) {
    FAIL("duplicate triple is a validation error, not a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validate);
  }
  std::stringstream count("p dsa 2 2 1\na 0 1\n");
  CHECK_THROWS_AS(read_digraph(count), ParseError);
  std::stringstream junk("p dsa 2 1 1\na 0 x\n");
  try {
    read_digraph(junk);
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("solution files") {
  std::stringstream ss("c 0 1\nc 1 2\ni 0 3 2\n");
  auto sol = read_solution(ss, 2);
  CHECK(sol.colouring.colour == std::vector<int>{1, 2});
  CHECK(sol.intervals.at(0) == CyclicInterval(4, 3, 2));
  std::stringstream missing("c 0 1\n");
  CHECK_THROWS_AS(read_solution(missing, 2), ParseError);
  std::stringstream w("w 0 1 1 2\n");
  auto ws = read_solution(w, 1);
  REQUIRE(ws.wavelengths.size() == 1);
  CHECK(ws.wavelengths[0] == Wavelength{1, 1, 2});
}
