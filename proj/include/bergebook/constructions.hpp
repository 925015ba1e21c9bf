#pragma once
#include <cstdint>

#include "bergebook/hypergraph.hpp"

namespace bergebook {

/// Vertex layout of the doubled-bipartite extremal construction.
/// Classes X, X' of size ceil(n/4) and Y, Y' of size floor(n/4); total vertex
/// count is 2*ceil(n/4) + 2*floor(n/4), which differs from n when n % 4 is
/// 1 or 3.
struct Fig1Layout {
  int n_input;
  int cx, cy;       // |X| = |X'| = cx, |Y| = |Y'| = cy
  int x0, xp0, y0, yp0;  // start index of each class
  int n_total;

  Vertex x(int i) const { return x0 + i; }
  Vertex xp(int i) const { return xp0 + i; }
  Vertex y(int j) const { return y0 + j; }
  Vertex yp(int j) const { return yp0 + j; }
};

Fig1Layout fig1_layout(int n);

/// Doubled complete-bipartite construction: for every i < cx, j < cy the two
/// hyperedges {x_i, y_j, y'_j} and {y_j, y'_j, x'_i}. Berge-triangle-free,
/// hence B_k-free for every k; edge count 2*cx*cy = n^2/8 when 4 | n.
/// Requires n >= 4.
Hypergraph fig1(int n);

/// Steiner triple system on n vertices via the Bose construction over
/// Z_{n/3} x {0,1,2}. Requires n ≡ 3 (mod 6); throws BadOrder otherwise.
/// Every pair has codegree exactly 1; edge count n(n-1)/6.
Hypergraph bose_sts(int n);

struct RandomModel {
  enum class Kind { UniformM, LinearGreedy, PlantedBook };
  Kind kind = Kind::UniformM;
  int n = 0;
  int m = 0;        // UniformM: exact edge count; LinearGreedy: target; PlantedBook: noise edges
  int k = 0;        // PlantedBook only
  std::uint64_t seed = 0;
};

/// Seeded generator; identical (model, seed) yields identical output.
/// Throws Infeasible when the parameters cannot be met.
Hypergraph random_hypergraph(const RandomModel& model);

Hypergraph random_uniform(int n, int m, std::uint64_t seed);
Hypergraph random_linear_greedy(int n, int target_m, std::uint64_t seed);
Hypergraph random_planted_book(int n, int k, int noise_m, std::uint64_t seed);

}  // namespace bergebook
