#include "bergebook/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace bergebook {

Triple make_triple(Vertex x, Vertex y, Vertex z) {
  if (x == y || y == z || x == z)
    throw Degenerate("repeated vertex in triple (" + std::to_string(x) + "," +
                     std::to_string(y) + "," + std::to_string(z) + ")");
  Vertex v[3] = {x, y, z};
  std::sort(v, v + 3);
  return Triple{v[0], v[1], v[2]};
}

bool Hypergraph::has_edge(const Triple& t) const {
  return std::binary_search(edges.begin(), edges.end(), t);
}

std::vector<Triple> Hypergraph::edges_on_pair(Vertex u, Vertex v) const {
  std::vector<Triple> out;
  for (const Triple& e : edges)
    if (e.contains_pair(u, v)) out.push_back(e);
  return out;
}

Hypergraph build(int n, const std::vector<std::array<Vertex, 3>>& triples) {
  Hypergraph h;
  h.n = n;
  h.edges.reserve(triples.size());
  for (const auto& t : triples) {
    for (Vertex x : t)
      if (x < 0 || x >= n)
        throw OutOfRange("vertex " + std::to_string(x) + " not in [0," +
                         std::to_string(n) + ")");
    h.edges.push_back(make_triple(t[0], t[1], t[2]));
  }
  std::sort(h.edges.begin(), h.edges.end());
  auto dup = std::adjacent_find(h.edges.begin(), h.edges.end());
  if (dup != h.edges.end())
    throw Duplicate("duplicate hyperedge (" + std::to_string(dup->a) + "," +
                    std::to_string(dup->b) + "," + std::to_string(dup->c) + ")");
  return h;
}

Hypergraph from_edges(int n, std::vector<Triple> edges) {
  std::sort(edges.begin(), edges.end());
  Hypergraph h;
  h.n = n;
  h.edges = std::move(edges);
  return h;
}

ShadowGraph shadow(const Hypergraph& h) {
  ShadowGraph s;
  s.n = h.n;
  s.codeg.assign(std::size_t(h.n) * h.n, 0);
  auto bump = [&](Vertex u, Vertex v) {
    ++s.codeg[std::size_t(u) * s.n + v];
    ++s.codeg[std::size_t(v) * s.n + u];
  };
  for (const Triple& e : h.edges) {
    bump(e.a, e.b);
    bump(e.a, e.c);
    bump(e.b, e.c);
  }
  return s;
}

Partition make_partition(const Hypergraph& h, const ShadowGraph& s) {
  Partition p;
  for (const Triple& e : h.edges) {
    int red = 0;
    Vertex pr[3][2] = {{e.a, e.b}, {e.a, e.c}, {e.b, e.c}};
    for (auto& q : pr)
      if (s.codegree(q[0], q[1]) == 1) ++red;
    // 3 colored pairs, so exactly one of ">=2 red" / ">=2 blue" holds
    if (red >= 2)
      p.h1.push_back(e);
    else
      p.h2.push_back(e);
  }
  return p;
}

Partition make_partition(const Hypergraph& h) {
  return make_partition(h, shadow(h));
}

}  // namespace bergebook
