#pragma once
#include <array>
#include <optional>
#include <vector>

#include "bergebook/hypergraph.hpp"

namespace bergebook {

/// Berge triangle witness: core vertices (v1,v2,v3) and three distinct
/// hyperedges with h1 ⊇ {v1,v2}, h2 ⊇ {v2,v3}, h3 ⊇ {v3,v1}.
struct BergeTriangleCertificate {
  std::array<Vertex, 3> core;
  std::array<Triple, 3> edges;
};

bool verify_triangle(const Hypergraph& h, const BergeTriangleCertificate& c);

/// Complete search; deterministic (lexicographically first core, then edges).
std::optional<BergeTriangleCertificate> find_berge_triangle(const Hypergraph& h);

/// Berge cycle witness: distinct core vertices v_1..v_len and distinct
/// hyperedges h_1..h_len with {v_i, v_{i+1}} ⊆ h_i, wrapping at the end.
struct BergeCycleCertificate {
  std::vector<Vertex> core;
  std::vector<Triple> edges;
};

bool verify_cycle(const Hypergraph& h, const BergeCycleCertificate& c);

/// One page of a Berge book: page vertex x with e ⊇ {u,x} and f ⊇ {x,v}.
struct BookPage {
  Vertex x;
  Triple e, f;
};

/// Berge copy of the book graph B_k: base pair {u,v}, apex hyperedge on the
/// base, and k pages. All page vertices distinct and outside the base; the
/// 2k+1 hyperedges pairwise distinct.
struct BookCertificate {
  Vertex u = 0, v = 0;
  Triple apex;
  std::vector<BookPage> pages;
};

bool verify_book(const Hypergraph& h, const BookCertificate& c, int k);

/// Complete and sound Berge-B_k search. Enumerates base pairs in lex order,
/// then page-vertex subsets, then solves the distinct-hyperedge assignment by
/// backtracking. Throws std::invalid_argument for k < 1.
std::optional<BookCertificate> find_berge_book(const Hypergraph& h, int k);

/// Same search restricted to base pairs sharing at least one vertex with t.
/// A Berge-B_k using hyperedge t must have such a base (every graph edge of
/// B_k touches the base), so this is complete for incremental checks.
std::optional<BookCertificate> find_berge_book_touching(const Hypergraph& h,
                                                        int k, const Triple& t);

/// Independent brute-force oracle: enumerates all (2k+1)-subsets of edges,
/// all base pairs, all injective page assignments. Only for small inputs.
bool oracle_contains_book(const Hypergraph& h, int k);

/// Every pair of hyperedges shares at most one vertex.
bool is_linear(const Hypergraph& h);

/// Number of distinct x ∉ {u,v} such that a Berge triangle with core (u,x,v)
/// exists using three distinct hyperedges of h.
int count_triangles_on_pair(const Hypergraph& h, Vertex u, Vertex v);

}  // namespace bergebook
