#pragma once
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bergebook/errors.hpp"

namespace bergebook {

using Vertex = int;

/// A 3-element hyperedge stored in strictly increasing vertex order,
/// so equality is structural.
struct Triple {
  Vertex a = 0, b = 0, c = 0;  // a < b < c

  auto operator<=>(const Triple&) const = default;

  bool contains(Vertex x) const { return x == a || x == b || x == c; }
  bool contains_pair(Vertex u, Vertex v) const {
    return contains(u) && contains(v);
  }
  /// The vertex other than u and v; requires contains_pair(u, v).
  Vertex third(Vertex u, Vertex v) const {
    if (a != u && a != v) return a;
    if (b != u && b != v) return b;
    return c;
  }
  std::array<Vertex, 3> verts() const { return {a, b, c}; }
  int shared_count(const Triple& o) const {
    return int(o.contains(a)) + int(o.contains(b)) + int(o.contains(c));
  }
};

/// Sorts the three vertices; throws Degenerate on a repeated vertex.
Triple make_triple(Vertex x, Vertex y, Vertex z);

/// 3-uniform hypergraph: vertex count n plus a sorted duplicate-free edge list.
struct Hypergraph {
  int n = 0;
  std::vector<Triple> edges;  // sorted ascending, unique

  std::size_t size() const { return edges.size(); }
  bool has_edge(const Triple& t) const;
  /// All hyperedges containing both u and v.
  std::vector<Triple> edges_on_pair(Vertex u, Vertex v) const;
};

/// Validates, canonicalizes and deduplicates raw triples.
/// Throws OutOfRange, Degenerate or Duplicate.
Hypergraph build(int n, const std::vector<std::array<Vertex, 3>>& triples);

/// Wraps an already-canonical edge list (sorts it; edges must be distinct).
Hypergraph from_edges(int n, std::vector<Triple> edges);

enum class EdgeColor { Red, Blue };

/// The 2-shadow with per-pair codegrees.
struct ShadowGraph {
  int n = 0;
  std::vector<int> codeg;  // n*n, symmetric, diagonal unused

  int codegree(Vertex u, Vertex v) const {
    return codeg[std::size_t(u) * n + v];
  }
  /// Red iff codegree 1, Blue iff >= 2, nullopt iff 0 (not a shadow edge).
  std::optional<EdgeColor> color(Vertex u, Vertex v) const {
    int d = codegree(u, v);
    if (d == 0) return std::nullopt;
    return d == 1 ? EdgeColor::Red : EdgeColor::Blue;
  }
};

ShadowGraph shadow(const Hypergraph& h);

/// h1: hyperedges with >= 2 red shadow pairs; h2: >= 2 blue. Disjoint, exhaustive.
struct Partition {
  std::vector<Triple> h1, h2;
};

Partition make_partition(const Hypergraph& h);
Partition make_partition(const Hypergraph& h, const ShadowGraph& s);

}  // namespace bergebook
