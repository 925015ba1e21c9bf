#include "bergebook/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

#include "bergebook/detect.hpp"

namespace bergebook {

namespace {

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) out.push_back(Triple{a, b, c});
  return out;
}

using Clock = std::chrono::steady_clock;

struct Shared {
  std::atomic<int> best{0};
  std::atomic<bool> out_of_budget{false};
  std::mutex witness_mu;
  std::vector<Triple> witness;
  Clock::time_point deadline;
  bool has_deadline = false;
};

struct Dfs {
  const std::vector<Triple>& pool;
  int n, k;
  Shared& sh;
  std::uint64_t nodes = 0;
  std::vector<Triple> cur;  // kept sorted (pool is canonical order)

  void record() {
    int sz = int(cur.size());
    int prev = sh.best.load();
    while (sz > prev && !sh.best.compare_exchange_weak(prev, sz)) {
    }
    if (sz > prev) {
      std::lock_guard<std::mutex> lk(sh.witness_mu);
      if (sz >= sh.best.load()) sh.witness = cur;
    }
  }

  bool budget_ok() {
    if (!sh.has_deadline) return true;
    if ((nodes & 1023) == 0 && Clock::now() > sh.deadline) {
      sh.out_of_budget.store(true);
    }
    return !sh.out_of_budget.load();
  }

  // true if adding pool[idx] keeps the current set B_k-free
  bool can_add(std::size_t idx) {
    cur.push_back(pool[idx]);
    Hypergraph h = from_edges(n, cur);
    bool ok = !find_berge_book_touching(h, k, pool[idx]).has_value();
    cur.pop_back();
    return ok;
  }

  void run(std::size_t idx) {
    ++nodes;
    if (!budget_ok()) return;
    if (int(cur.size()) + int(pool.size() - idx) <= sh.best.load()) return;
    if (idx == pool.size()) {
      record();
      return;
    }
    if (can_add(idx)) {
      cur.push_back(pool[idx]);
      record();
      run(idx + 1);
      cur.pop_back();
    }
    run(idx + 1);
  }
};

}  // namespace

SearchResult turan_exhaustive(int n, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n > 5) throw TooLarge("turan_exhaustive handles n <= 5 only");
  auto pool = all_triples(n);
  const int m = int(pool.size());
  SearchResult res;
  res.n = n;
  res.k = k;
  res.method = SearchMethod::Exhaustive;
  res.witness = from_edges(n, {});
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    ++res.nodes_explored;
    int sz = std::popcount(mask);
    if (sz <= res.max_edges && mask != 0) continue;
    std::vector<Triple> sub;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) sub.push_back(pool[i]);
    Hypergraph h = from_edges(n, std::move(sub));
    if (oracle_contains_book(h, k)) continue;
    if (sz > res.max_edges || mask == 0) {
      res.max_edges = sz;
      res.witness = std::move(h);
    }
  }
  return res;
}

SearchResult turan_branch_bound(int n, int k, double budget_seconds,
                                int workers) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (workers < 1) workers = 1;
  auto pool = all_triples(n);
  Shared sh;
  sh.witness.clear();
  if (budget_seconds > 0) {
    sh.has_deadline = true;
    sh.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget_seconds));
  }

  std::uint64_t total_nodes = 0;
  if (workers == 1 || pool.size() < 4) {
    Dfs d{pool, n, k, sh};
    d.run(0);
    total_nodes = d.nodes;
  } else {
    // split at the root over the first few include/exclude decisions
    int depth = 0;
    while ((1 << depth) < 4 * workers && depth + 1 < int(pool.size())) ++depth;
    std::atomic<std::uint32_t> next{0};
    std::atomic<std::uint64_t> nodes{0};
    const std::uint32_t tasks = 1u << depth;
    auto worker = [&]() {
      for (std::uint32_t t = next.fetch_add(1); t < tasks;
           t = next.fetch_add(1)) {
        Dfs d{pool, n, k, sh};
        bool feasible = true;
        for (int i = 0; i < depth && feasible; ++i) {
          if (t & (1u << i)) {
            if (d.can_add(std::size_t(i)))
              d.cur.push_back(pool[std::size_t(i)]);
            else
              feasible = false;
          }
        }
        if (feasible) {
          d.record();
          d.run(std::size_t(depth));
        }
        nodes.fetch_add(d.nodes);
      }
    };
    std::vector<std::thread> threads;
    for (int i = 0; i < workers; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    total_nodes = nodes.load();
  }

  SearchResult res;
  res.n = n;
  res.k = k;
  res.method = SearchMethod::BranchBound;
  res.max_edges = sh.best.load();
  res.witness = from_edges(n, sh.witness);
  res.nodes_explored = total_nodes;
  res.optimal = !sh.out_of_budget.load();
  return res;
}

std::vector<ProbeRow> conjecture_probe(const std::vector<int>& ns, int k,
                                       double budget_seconds) {
  std::vector<ProbeRow> rows;
  for (int n : ns) {
    SearchResult r = turan_branch_bound(n, k, budget_seconds);
    ProbeRow row;
    row.n = n;
    row.max_edges = r.max_edges;
    row.bound = double(n) * n / 8.0;
    row.slack = row.bound - r.max_edges;
    row.optimal = r.optimal;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bergebook
