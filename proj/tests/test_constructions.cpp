#include <doctest.h>

#include "bergebook/constructions.hpp"
#include "bergebook/detect.hpp"

using namespace bergebook;

TEST_CASE("fig1 edge counts") {
  for (int n = 4; n <= 64; ++n) {
    int cx = (n + 3) / 4, cy = n / 4;
    CHECK(int(fig1(n).edges.size()) == 2 * cx * cy);
    if (n % 4 == 0) CHECK(int(fig1(n).edges.size()) == n * n / 8);
  }
  CHECK(fig1(4).edges.size() == 2);
  CHECK(fig1(8).edges.size() == 8);
  CHECK(fig1(16).edges.size() == 32);
  CHECK_THROWS_AS(fig1(3), OutOfRange);
}

TEST_CASE("fig1(4) is the single doubled bipartite edge") {
  Fig1Layout l = fig1_layout(4);
  Hypergraph h = fig1(4);
  REQUIRE(h.edges.size() == 2);
  CHECK(h.has_edge(make_triple(l.x(0), l.y(0), l.yp(0))));
  CHECK(h.has_edge(make_triple(l.y(0), l.yp(0), l.xp(0))));
}

TEST_CASE("fig1 is Berge-triangle-free") {
  for (int n = 4; n <= 24; ++n)
    CHECK(!find_berge_triangle(fig1(n)).has_value());
}

TEST_CASE("bose_sts") {
  Hypergraph s9 = bose_sts(9);
  CHECK(s9.edges.size() == 12);
  CHECK(is_linear(s9));
  ShadowGraph sh = shadow(s9);
  for (Vertex u = 0; u < 9; ++u)
    for (Vertex v = u + 1; v < 9; ++v) CHECK(sh.codegree(u, v) == 1);

  CHECK(bose_sts(3).edges.size() == 1);
  CHECK_THROWS_AS(bose_sts(7), BadOrder);

  for (int n : {15, 21, 27}) {
    Hypergraph s = bose_sts(n);
    CHECK(int(s.edges.size()) == n * (n - 1) / 6);
    ShadowGraph sn = shadow(s);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) CHECK(sn.codegree(u, v) == 1);
  }
}

TEST_CASE("random generators") {
  Hypergraph a = random_uniform(6, 10, 1);
  Hypergraph b = random_uniform(6, 10, 1);
  CHECK(a.edges == b.edges);
  CHECK(a.edges.size() == 10);
  CHECK(random_uniform(6, 10, 2).edges != a.edges);
  CHECK(random_uniform(6, 20, 3).edges.size() == 20);  // the full triple set
  CHECK_THROWS_AS(random_uniform(5, 11, 0), Infeasible);

  CHECK(is_linear(random_linear_greedy(12, 8, 3)));

  Hypergraph planted = random_planted_book(12, 2, 0, 7);
  CHECK(find_berge_book(planted, 2).has_value());
  Hypergraph noisy = random_planted_book(12, 2, 10, 7);
  CHECK(find_berge_book(noisy, 2).has_value());
  CHECK_THROWS_AS(random_planted_book(5, 2, 0, 0), Infeasible);
}
