#include <doctest.h>

#include <algorithm>
#include <random>

#include "galaxia/error.hpp"
#include "galaxia/galaxy.hpp"
#include "galaxia/oracle.hpp"
#include "galaxia/spanning.hpp"
#include "helpers.hpp"

using namespace galaxia;
using testing_helpers::circuit;
using testing_helpers::complete;
using testing_helpers::make;

namespace {

bool covers_four(const Digraph& d, const std::vector<int>& g) {
  std::vector<char> hit(d.vertex_count(), 0);
  for (int a : g) hit[d.arc(a).tail] = hit[d.arc(a).head] = 1;
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.degree(v) == 4 && !hit[v]) return false;
  return true;
}

// Galaxy check and search written out independently: every subset of arcs.
bool brute_spanning_exists(const Digraph& d) {
  const int m = d.arc_count();
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::vector<int> in(d.vertex_count(), 0), out(d.vertex_count(), 0), arcs;
    for (int a = 0; a < m; ++a)
      if (mask >> a & 1) {
        ++out[d.arc(a).tail];
        ++in[d.arc(a).head];
        arcs.push_back(a);
      }
    bool ok = true;
    for (int v = 0; v < d.vertex_count(); ++v) ok = ok && in[v] <= 1 && !(in[v] && out[v]);
    if (ok && covers_four(d, arcs)) return true;
  }
  return false;
}

Digraph random_two_two(std::mt19937& rng, int n) {
  std::vector<int> in(n, 0), out(n, 0);
  std::vector<Arc> arcs;
  for (int k = 0; k < 4 * n; ++k) {
    const int t = static_cast<int>(rng() % n), h = static_cast<int>(rng() % n);
    if (t == h || out[t] == 2 || in[h] == 2 || std::find(arcs.begin(), arcs.end(), Arc{t, h}) != arcs.end()) continue;
    arcs.push_back({t, h});
    ++out[t];
    ++in[h];
  }
  return Digraph(n, std::move(arcs));
}

struct Closure {
  std::vector<std::vector<char>> leq;
};

Closure floyd(int n, const std::vector<Arc>& rel) {
  Closure c{std::vector<std::vector<char>>(n, std::vector<char>(n, 0))};
  for (int i = 0; i < n; ++i) c.leq[i][i] = 1;
  for (auto [a, b] : rel) c.leq[a][b] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (c.leq[i][k] && c.leq[k][j]) c.leq[i][j] = 1;
  return c;
}

}  // namespace

TEST_CASE("order closure and ordered digraph axioms") {
  auto leq = order_closure(3, {{0, 1}, {1, 2}});
  CHECK(leq[0][2]);
  CHECK_FALSE(leq[2][0]);
  CHECK_THROWS_AS(order_closure(2, {{0, 1}, {1, 0}}), Error);

  OrderedDigraph chain{3, leq, make(3, {{0, 1}, {1, 2}, {2, 0}})};
  CHECK(is_ordered_digraph(chain));
  OrderedDigraph missing_hasse{3, leq, make(3, {{0, 1}, {2, 0}})};
  CHECK_FALSE(is_ordered_digraph(missing_hasse));
}

TEST_CASE("ordig witness rejects low indegree") {
  auto leq = order_closure(3, {{0, 1}, {1, 2}});
  OrderedDigraph chain{3, leq, make(3, {{0, 1}, {1, 2}, {2, 0}})};
  try {
    ordig_witness(chain);
    FAIL("expected a precondition failure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition_violated);
  }
}

TEST_CASE("ordig witness can be missing when one indegree is one") {
  OrderedDigraph chain{3, order_closure(3, {{0, 1}, {1, 2}}), make(3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 1}})};
  REQUIRE(is_ordered_digraph(chain));
  try {
    ordig_witness(chain, 0);
    FAIL("expected no witness");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::infeasible);
  }
}

TEST_CASE("ordig witness on random ordered digraphs") {
  std::mt19937 rng(3);
  int tested = 0;
  for (int round = 0; round < 200000 && tested < 150; ++round) {
    const int n = 3 + static_cast<int>(rng() % 5);
    std::vector<Arc> rel;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) rel.push_back({a, b});
    const auto c = floyd(n, rel);
    std::vector<Arc> arcs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b || !(c.leq[a][b] || c.leq[b][a])) continue;
        bool hasse = c.leq[a][b];
        for (int m = 0; m < n && hasse; ++m)
          if (m != a && m != b && c.leq[a][m] && c.leq[m][b]) hasse = false;
        if (hasse || rng() % 2) arcs.push_back({a, b});
      }
    Digraph d(n, arcs);
    OrderedDigraph od{n, c.leq, d};
    REQUIRE(is_ordered_digraph(od));
    std::optional<int> low;
    bool fits = true;
    for (int v = 0; v < n && fits; ++v) {
      int back = 0, fwd = 0;
      for (int a : d.out_arcs(v)) (c.leq[d.arc(a).head][v] ? back : fwd) += 1;
      fits = back <= 1 && fwd <= 2;
      if (d.in_degree(v) == 1 && !low)
        low = v;
      else if (d.in_degree(v) < 2)
        fits = false;
    }
    if (!fits) continue;
    bool exists = false;
    for (int x = 0; x < d.arc_count(); ++x)
      for (int y = 0; y < d.arc_count(); ++y) {
        const auto [g, a] = d.arc(x);
        const auto [b, l] = d.arc(y);
        exists = exists || (c.leq[a][b] && c.leq[b][g] && c.leq[b][l] && !c.leq[g][l] && g != a && g != b && l != b &&
                            l != a && x != y);
      }
    if (!exists) {
      CHECK(low.has_value());
      CHECK_THROWS_AS(ordig_witness(od, low), Error);
      continue;
    }
    ++tested;
    const auto w = ordig_witness(od, low);
    const auto [gamma, alpha] = d.arc(w.gamma_alpha);
    const auto [beta, lambda] = d.arc(w.beta_lambda);
    CHECK(c.leq[alpha][beta]);
    CHECK(c.leq[beta][gamma]);
    CHECK(c.leq[beta][lambda]);
    CHECK_FALSE(c.leq[gamma][lambda]);
    CHECK(gamma != alpha);
    CHECK(gamma != beta);
    CHECK(lambda != beta);
    CHECK(lambda != alpha);
  }
  CHECK(tested >= 20);
}

TEST_CASE("spanning galaxy on small examples") {
  auto k3 = complete(3);
  auto g = spanning_galaxy(k3);
  CHECK(is_galaxy(k3, g));
  CHECK(covers_four(k3, g));
  CHECK(brute_spanning_exists(k3));

  // centre 0 in two digons
  auto bow = make(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}});
  g = spanning_galaxy(bow);
  CHECK(is_galaxy(bow, g));
  CHECK(covers_four(bow, g));

  CHECK(spanning_galaxy(circuit(5)).size() <= 5);
  CHECK_THROWS_AS(spanning_galaxy(make(4, {{0, 1}, {0, 2}, {0, 3}})), Error);
}

TEST_CASE("spanning galaxy exists on all small random instances") {
  std::mt19937 rng(17);
  for (int round = 0; round < 150; ++round) {
    auto d = random_two_two(rng, 2 + static_cast<int>(rng() % 7));
    if (d.arc_count() > 16) continue;
    CHECK(brute_spanning_exists(d));
    CHECK(spanning_galaxy_exhaustive(d).has_value());
    auto g = spanning_galaxy(d);
    CHECK(is_galaxy(d, g));
    CHECK(covers_four(d, g));
  }
}

TEST_CASE("four colours for in- and outdegree two") {
  auto k3 = complete(3);
  auto c = dst4_colouring(k3);
  CHECK(c.used_colours() <= 4);
  CHECK_FALSE(verify_star_colouring(k3, c));
  CHECK(exact_dst(k3, 4).colours <= 4);

  auto odd = dst4_colouring(circuit(7));
  CHECK(odd.used_colours() == 3);

  std::mt19937 rng(23);
  for (int round = 0; round < 40; ++round) {
    auto d = random_two_two(rng, 100);
    auto col = dst4_colouring(d);
    CHECK(col.max_colour() <= 4);
    CHECK_FALSE(verify_star_colouring(d, col));
  }
}
