#pragma once
#include <cstdint>
#include <vector>

#include "bergebook/hypergraph.hpp"

namespace bergebook {

enum class SearchMethod { Exhaustive, BranchBound };

struct SearchResult {
  int n = 0, k = 0;
  int max_edges = 0;
  Hypergraph witness;
  std::uint64_t nodes_explored = 0;
  SearchMethod method = SearchMethod::Exhaustive;
  bool optimal = true;  // false only after BudgetExceeded
};

/// All 2^C(n,3) subsets, B_k-freeness oracle-checked. Throws TooLarge for
/// n > 5.
SearchResult turan_exhaustive(int n, int k);

/// Depth-first over canonical hyperedge order with incremental detection on
/// the newest edge (a new Berge-B_k must use it, so only base pairs touching
/// it are checked). Prunes on current + remaining <= best. On budget
/// exhaustion returns the best found so far flagged non-optimal.
/// budget_seconds <= 0 means unlimited. workers > 1 splits the tree at the
/// root; max_edges stays deterministic, the witness only with one worker.
SearchResult turan_branch_bound(int n, int k, double budget_seconds,
                                int workers = 1);

struct ProbeRow {
  int n = 0;
  int max_edges = 0;
  double bound = 0.0;  // n^2/8
  double slack = 0.0;  // bound - max_edges
  bool optimal = true;
};

/// Exact values vs the conjectured n^2/8 bound; no asymptotic claim.
std::vector<ProbeRow> conjecture_probe(const std::vector<int>& ns, int k,
                                       double budget_seconds);

}  // namespace bergebook
