#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bergebook/detect.hpp"
#include "bergebook/hypergraph.hpp"

namespace bergebook {

/// Simple graph over dense vertex ids, adjacency as bit rows.
struct Graph {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> bits;

  explicit Graph(int n_ = 0);
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  /// Number of common neighbours of u and v.
  int triangles_on(Vertex u, Vertex v) const;
  std::size_t edge_count() const;
};

/// The codegree-1 shadow pairs, each carrying the unique hyperedge
/// containing it.
struct RedGraph {
  int n = 0;
  // sorted by pair; pair is (min, max)
  std::vector<std::pair<std::pair<Vertex, Vertex>, Triple>> edges;

  std::size_t size() const { return edges.size(); }
  const Triple* carrier(Vertex u, Vertex v) const;
  Graph as_graph() const;
};

RedGraph red_graph(const Hypergraph& h);

struct HeavyEdgeResult {
  Vertex u = 0, v = 0;
  int triangle_count = 0;
  std::vector<Vertex> witnesses;
};

/// Edge maximizing the per-edge triangle count, if that maximum reaches
/// threshold num/den; ties broken by lexicographically smallest pair.
std::optional<HeavyEdgeResult> find_heavy_edge(const Graph& g,
                                               long threshold_num,
                                               long threshold_den);

/// Book extraction from a dense red graph (the H_1 route): Edwards' heavy
/// edge as the base, then the four-case witness sweep. Requires more than
/// n^2/4 red edges and n > 12k; throws HypothesisUnmet otherwise and
/// ExtractionFailed if the assembled certificate does not verify.
BookCertificate lemma1_extract(const Hypergraph& h, int k);

/// Book extraction from a pair lying in >= 2k-1 hyperedges of H_2
/// (the codegree route). Throws HypothesisUnmet / ExtractionFailed.
BookCertificate lemma2_extract(const Hypergraph& h, Vertex u, Vertex v, int k);

struct SweepStats {
  int max_deleted_per_step = 0;
};

/// Greedy sweep in ascending hyperedge order deleting every other edge
/// sharing >= 2 vertices. Output is linear with retention
/// |out| >= |h2|/(6k-8). Requires every pair codegree <= 2k-2 within h2.
Hypergraph linearize(const Hypergraph& h2, int k, SweepStats* stats = nullptr);

/// Destroys every Berge triangle of a linear hypergraph by per-triangle
/// deletions; output is linear and Berge-triangle-free with retention
/// >= |hl|/(3k-2). Requires every pair to support <= k-1 Berge triangles.
Hypergraph triangle_free_prune(const Hypergraph& hl, int k);

struct BoundCheck {
  std::string name;
  long long lhs = 0, rhs = 0;
  bool pass = false;
};

struct PipelineReport {
  std::size_t e_h1 = 0, e_h2 = 0;
  std::string branch;  // "lemma1" | "lemma2" | "reduce" | "empty"
  std::optional<BookCertificate> certificate;
  std::optional<Hypergraph> reduced_linear;
  std::optional<Hypergraph> reduced_triangle_free;
  std::vector<BoundCheck> bound_checks;
  int max_deleted_per_step = 0;
};

/// End-to-end: partition, then whichever extraction hypothesis fires, else
/// the linearize + prune reduction. Requires k >= 2. Only ExtractionFailed
/// escapes.
PipelineReport run_pipeline(const Hypergraph& h, int k);

}  // namespace bergebook
