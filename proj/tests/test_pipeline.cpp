#include <doctest.h>

#include <algorithm>
#include <bit>

#include "bergebook/constructions.hpp"
#include "bergebook/pipeline.hpp"

using namespace bergebook;

TEST_CASE("red_graph") {
  RedGraph r1 = red_graph(build(4, {{0, 1, 2}}));
  CHECK(r1.size() == 3);
  for (const auto& [pr, e] : r1.edges) CHECK(e == Triple{0, 1, 2});

  RedGraph r2 = red_graph(build(4, {{0, 1, 2}, {0, 1, 3}}));
  CHECK(r2.size() == 4);
  CHECK(r2.carrier(0, 1) == nullptr);
  REQUIRE(r2.carrier(0, 2) != nullptr);
  CHECK(*r2.carrier(0, 2) == Triple{0, 1, 2});

  CHECK(red_graph(bose_sts(9)).size() == 36);  // C(9,2): linear covers all pairs
}

TEST_CASE("red edge count >= 2 e(H1) restricted to H1 contributions") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Hypergraph h = random_uniform(8, 14, seed);
    ShadowGraph s = shadow(h);
    Partition p = make_partition(h, s);
    std::size_t red_from_h1 = 0;
    for (const Triple& e : p.h1) {
      Vertex prs[3][2] = {{e.a, e.b}, {e.a, e.c}, {e.b, e.c}};
      for (auto& pr : prs)
        if (s.codegree(pr[0], pr[1]) == 1) ++red_from_h1;
    }
    CHECK(red_from_h1 >= 2 * p.h1.size());
  }
}

TEST_CASE("find_heavy_edge") {
  Graph k4(4);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  auto r = find_heavy_edge(k4, 4, 6);
  REQUIRE(r.has_value());
  CHECK(r->triangle_count == 2);
  CHECK(r->u == 0);
  CHECK(r->v == 1);

  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(!find_heavy_edge(c5, 5, 6).has_value());
}

TEST_CASE("heavy edge exists in every 6-vertex graph above n^2/4 edges") {
  for (unsigned mask = 0; mask < (1u << 15); ++mask) {
    if (std::popcount(mask) * 4 <= 36) continue;
    Graph g(6);
    int bit = 0;
    for (Vertex u = 0; u < 6; ++u)
      for (Vertex v = u + 1; v < 6; ++v, ++bit)
        if (mask & (1u << bit)) g.add_edge(u, v);
    auto r = find_heavy_edge(g, 6, 6);
    REQUIRE(r.has_value());
    CHECK(r->triangle_count >= 1);
  }
}

TEST_CASE("lemma1_extract") {
  Hypergraph sts27 = bose_sts(27);
  BookCertificate c = lemma1_extract(sts27, 2);
  CHECK(verify_book(sts27, c, 2));
  // the certificate's own hyperedges already witness the book
  std::vector<Triple> own{c.apex};
  for (const auto& p : c.pages) {
    own.push_back(p.e);
    own.push_back(p.f);
  }
  std::sort(own.begin(), own.end());
  CHECK(oracle_contains_book(from_edges(27, own), 2));

  // sparse input: red graph below n^2/4
  CHECK_THROWS_AS(lemma1_extract(build(30, {{0, 1, 2}}), 2), HypothesisUnmet);
  // n too small for k
  CHECK_THROWS_AS(lemma1_extract(bose_sts(15), 2), HypothesisUnmet);
}

TEST_CASE("lemma2_extract") {
  Hypergraph h = build(
      8, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 5}, {0, 3, 6}, {0, 4, 7}});
  BookCertificate c = lemma2_extract(h, 0, 1, 2);
  CHECK(verify_book(h, c, 2));
  std::vector<Triple> own{c.apex};
  for (const auto& p : c.pages) {
    own.push_back(p.e);
    own.push_back(p.f);
  }
  std::sort(own.begin(), own.end());
  CHECK(oracle_contains_book(from_edges(8, own), 2));

  // pair of codegree 1
  CHECK_THROWS_AS(lemma2_extract(build(5, {{0, 1, 2}}), 0, 1, 2),
                  HypothesisUnmet);
}

TEST_CASE("lemma 2 contrapositive on B_k-free instances") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Hypergraph h = random_uniform(6, int(seed % 11), seed * 31 + 1);
    for (int k : {2, 3}) {
      if (find_berge_book(h, k)) continue;
      Partition p = make_partition(h);
      std::vector<int> codeg(36, 0);
      for (const Triple& e : p.h2) {
        Vertex prs[3][2] = {{e.a, e.b}, {e.a, e.c}, {e.b, e.c}};
        for (auto& pr : prs) ++codeg[pr[0] * 6 + pr[1]];
      }
      for (int c : codeg) CHECK(c <= 2 * k - 2);
    }
  }
}

TEST_CASE("linearize") {
  Hypergraph lin = build(5, {{0, 1, 2}, {2, 3, 4}});
  CHECK(linearize(lin, 2).edges == lin.edges);

  Hypergraph two = build(4, {{0, 1, 2}, {0, 1, 3}});
  Hypergraph out = linearize(two, 2);
  CHECK(out.edges.size() == 1);  // 1 >= 2/(6*2-8)

  // pair (0,1) has codegree 3 > 2k-2
  Hypergraph dense = build(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  CHECK_THROWS_AS(linearize(dense, 2), HypothesisUnmet);
}

TEST_CASE("linearize and prune on random B_2-free h2 sets") {
  int tested = 0;
  for (std::uint64_t seed = 0; tested < 200 && seed < 5000; ++seed) {
    Hypergraph h = random_uniform(7, int(seed % 7), seed * 7 + 3);
    if (find_berge_book(h, 2)) continue;
    ++tested;
    Partition p = make_partition(h);
    Hypergraph h2 = from_edges(h.n, p.h2);
    Hypergraph hl = linearize(h2, 2);
    CHECK(is_linear(hl));
    CHECK(hl.edges.size() * (6 * 2 - 8) >= h2.edges.size());

    Hypergraph ht = triangle_free_prune(hl, 2);
    CHECK(is_linear(ht));
    CHECK(!find_berge_triangle(ht).has_value());
    CHECK(ht.edges.size() * (3 * 2 - 2) >= hl.edges.size());
  }
  CHECK(tested == 200);
}

TEST_CASE("triangle_free_prune") {
  Hypergraph clean = build(5, {{0, 1, 2}, {2, 3, 4}});
  CHECK(triangle_free_prune(clean, 2).edges == clean.edges);

  Hypergraph tri = build(12, {{0, 1, 9}, {0, 2, 10}, {1, 2, 11}});
  Hypergraph out = triangle_free_prune(tri, 2);
  CHECK(out.edges.size() == 2);
  CHECK(!find_berge_triangle(out).has_value());

  CHECK_THROWS_AS(triangle_free_prune(build(4, {{0, 1, 2}, {0, 1, 3}}), 2),
                  HypothesisUnmet);  // not linear
}

TEST_CASE("run_pipeline") {
  PipelineReport fig = run_pipeline(fig1(16), 2);
  CHECK(!fig.certificate.has_value());
  CHECK(fig.e_h2 == 0);
  CHECK(fig.e_h1 == 32);
  CHECK(fig.branch == "reduce");

  PipelineReport empty = run_pipeline(from_edges(6, {}), 2);
  CHECK(empty.branch == "empty");
  CHECK(!empty.certificate.has_value());

  Hypergraph sts27 = bose_sts(27);
  PipelineReport sts = run_pipeline(sts27, 2);
  CHECK(sts.branch == "lemma1");
  REQUIRE(sts.certificate.has_value());
  CHECK(verify_book(sts27, *sts.certificate, 2));

  CHECK_THROWS_AS(run_pipeline(fig1(8), 1), std::invalid_argument);
}
