#include "bergebook/constructions.hpp"

#include <random>
#include <set>
#include <string>

namespace bergebook {

namespace {

// mt19937_64 + modulo reduction; fixed here so fixtures reproduce everywhere
std::uint64_t rng_below(std::mt19937_64& gen, std::uint64_t bound) {
  return gen() % bound;
}

template <typename T>
void fisher_yates(std::vector<T>& v, std::mt19937_64& gen) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = std::size_t(rng_below(gen, i));
    std::swap(v[i - 1], v[j]);
  }
}

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) out.push_back(Triple{a, b, c});
  return out;
}

}  // namespace

Fig1Layout fig1_layout(int n) {
  if (n < 4) throw OutOfRange("fig1 requires n >= 4");
  Fig1Layout l;
  l.n_input = n;
  l.cx = (n + 3) / 4;
  l.cy = n / 4;
  l.x0 = 0;
  l.xp0 = l.cx;
  l.y0 = 2 * l.cx;
  l.yp0 = 2 * l.cx + l.cy;
  l.n_total = 2 * l.cx + 2 * l.cy;
  return l;
}

Hypergraph fig1(int n) {
  Fig1Layout l = fig1_layout(n);
  std::vector<Triple> edges;
  edges.reserve(std::size_t(2) * l.cx * l.cy);
  for (int i = 0; i < l.cx; ++i)
    for (int j = 0; j < l.cy; ++j) {
      edges.push_back(make_triple(l.x(i), l.y(j), l.yp(j)));
      edges.push_back(make_triple(l.y(j), l.yp(j), l.xp(i)));
    }
  return from_edges(l.n_total, std::move(edges));
}

Hypergraph bose_sts(int n) {
  if (n < 3 || n % 6 != 3)
    throw BadOrder("Bose construction needs n ≡ 3 (mod 6), got " +
                   std::to_string(n));
  const int m = n / 3;
  const int inv2 = (m + 1) / 2;  // inverse of 2 mod m (m odd)
  auto vid = [m](int i, int j) { return i * 3 + j; };
  std::vector<Triple> edges;
  for (int i = 0; i < m; ++i)
    edges.push_back(make_triple(vid(i, 0), vid(i, 1), vid(i, 2)));
  for (int i = 0; i < m; ++i)
    for (int ip = i + 1; ip < m; ++ip)
      for (int j = 0; j < 3; ++j) {
        int h = int((std::int64_t(i + ip) * inv2) % m);
        edges.push_back(
            make_triple(vid(i, j), vid(ip, j), vid(h, (j + 1) % 3)));
      }
  return from_edges(n, std::move(edges));
}

Hypergraph random_uniform(int n, int m, std::uint64_t seed) {
  auto pool = all_triples(n);
  if (m < 0 || std::size_t(m) > pool.size())
    throw Infeasible("requested " + std::to_string(m) + " edges, only " +
                     std::to_string(pool.size()) + " triples exist");
  std::mt19937_64 gen(seed);
  fisher_yates(pool, gen);
  pool.resize(std::size_t(m));
  return from_edges(n, std::move(pool));
}

Hypergraph random_linear_greedy(int n, int target_m, std::uint64_t seed) {
  if (target_m < 0) throw Infeasible("negative edge count");
  auto pool = all_triples(n);
  std::mt19937_64 gen(seed);
  fisher_yates(pool, gen);
  std::vector<char> pair_used(std::size_t(n) * n, 0);
  std::vector<Triple> edges;
  for (const Triple& t : pool) {
    if (int(edges.size()) == target_m) break;
    auto used = [&](Vertex u, Vertex v) {
      return pair_used[std::size_t(u) * n + v] != 0;
    };
    if (used(t.a, t.b) || used(t.a, t.c) || used(t.b, t.c)) continue;
    for (auto [u, v] : {std::pair{t.a, t.b}, {t.a, t.c}, {t.b, t.c}}) {
      pair_used[std::size_t(u) * n + v] = 1;
      pair_used[std::size_t(v) * n + u] = 1;
    }
    edges.push_back(t);
  }
  return from_edges(n, std::move(edges));
}

Hypergraph random_planted_book(int n, int k, int noise_m, std::uint64_t seed) {
  if (k < 1) throw Infeasible("book size k must be >= 1");
  if (n < 3 * k + 3)
    throw Infeasible("planted B_" + std::to_string(k) + " needs n >= " +
                     std::to_string(3 * k + 3));
  const Vertex u = 0, v = 1, w = 2;
  std::set<Triple> edges;
  edges.insert(make_triple(u, v, w));
  for (int i = 0; i < k; ++i) {
    Vertex x = 3 + i, y = 3 + k + i, z = 3 + 2 * k + i;
    edges.insert(make_triple(u, x, y));
    edges.insert(make_triple(v, x, z));
  }
  auto pool = all_triples(n);
  std::mt19937_64 gen(seed);
  fisher_yates(pool, gen);
  int added = 0;
  for (const Triple& t : pool) {
    if (added == noise_m) break;
    if (edges.insert(t).second) ++added;
  }
  if (added < noise_m) throw Infeasible("not enough free triples for noise");
  return from_edges(n, std::vector<Triple>(edges.begin(), edges.end()));
}

Hypergraph random_hypergraph(const RandomModel& model) {
  switch (model.kind) {
    case RandomModel::Kind::UniformM:
      return random_uniform(model.n, model.m, model.seed);
    case RandomModel::Kind::LinearGreedy:
      return random_linear_greedy(model.n, model.m, model.seed);
    case RandomModel::Kind::PlantedBook:
      return random_planted_book(model.n, model.k, model.m, model.seed);
  }
  throw Infeasible("unknown random model");
}

}  // namespace bergebook
