#include "doctest.h"

#include "galaxia/constructions.hpp"
#include "galaxia/error.hpp"
#include "galaxia/fibre.hpp"
#include "galaxia/oracle.hpp"
#include "galaxia/solve.hpp"
#include "helpers.hpp"

using namespace galaxia;
using testing_helpers::circuit;
using testing_helpers::complete;
using testing_helpers::make;

namespace {

Algorithm pick(const Digraph& d, int fibres = 1) {
  return select_algorithm(classify(LabelledDigraph::from_digraph(d), fibres));
}

}  // namespace

TEST_CASE("automatic choice takes the smallest bound") {
  // a path is acyclic with indegree one: 2 colours beats 3
  CHECK(pick(make(3, {{0, 1}, {1, 2}})) == Algorithm::acyclic);
  // acyclic, subcubic, indegree three: 3 beats 6
  CHECK(pick(make(4, {{0, 3}, {1, 3}, {2, 3}})) == Algorithm::subcubic);
  CHECK(pick(circuit(5)) == Algorithm::subcubic);
  CHECK(pick(complete(3)) == Algorithm::diregular4);
  // acyclic with indegree two ties diregular4 at 4 and keeps the intervals
  CHECK(pick(make(5, {{0, 2}, {1, 2}, {0, 3}, {2, 3}, {2, 4}, {1, 4}})) == Algorithm::acyclic);
  CHECK(pick(complete(5)) == Algorithm::upper_2k1);
  // one label on two fibres is the small-m case, circuit or not
  CHECK(pick(make(3, {{0, 1}}), 2) == Algorithm::smallm);
  CHECK(pick(circuit(3), 2) == Algorithm::smallm);
  LabelledDigraph two(3, 2, {{0, 1, 1}, {0, 2, 2}, {1, 2, 1}});
  CHECK(select_algorithm(classify(two, 2)) == Algorithm::fibre_acyclic);

  LabelledDigraph cyc(3, 2, {{0, 1, 1}, {1, 2, 2}, {2, 0, 1}});
  CHECK_THROWS_AS(select_algorithm(classify(cyc, 2)), Error);
}

TEST_CASE("solve verifies and honours its bound") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Digraph d = random_digraph(25, 1 + seed % 4, 1 + (seed / 4) % 4, seed);
    auto r = solve(LabelledDigraph::from_digraph(d), 1, Algorithm::automatic);
    CHECK_FALSE(verify_star_colouring(d, r.colouring));
    CHECK(r.colouring.max_colour() <= r.bound);
  }
  auto ld = random_labelled_dag(20, 3, 4, 1);
  auto r = solve(ld, 2, Algorithm::automatic);
  CHECK(r.algorithm == Algorithm::fibre_acyclic);
  CHECK(r.bound == fibre_bound_acyclic(2, 3, 4));
  CHECK_FALSE(verify_wavelength_assignment(ld, 2, r.wavelengths));

  CHECK_THROWS_AS(solve(LabelledDigraph::from_digraph(complete(5)), 1, Algorithm::subcubic), Error);
  CHECK_THROWS_AS(solve(ld, 2, Algorithm::subcubic), Error);
  CHECK_THROWS_AS(solve(ld, 0, Algorithm::automatic), Error);
}

TEST_CASE("algorithm names round trip") {
  for (Algorithm a : {Algorithm::automatic, Algorithm::upper_2k1, Algorithm::acyclic, Algorithm::subcubic,
                      Algorithm::diregular4, Algorithm::acircuitic, Algorithm::smallm, Algorithm::fibre_acyclic})
    CHECK(parse_algorithm(algorithm_name(a)) == a);
  CHECK_FALSE(parse_algorithm("fastest"));
}
