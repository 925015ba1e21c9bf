#include "bergebook/detect.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace bergebook {

namespace {

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("book size k must be >= 1");
}

}  // namespace

bool verify_triangle(const Hypergraph& h, const BergeTriangleCertificate& c) {
  const auto& [v1, v2, v3] = c.core;
  if (v1 == v2 || v2 == v3 || v1 == v3) return false;
  for (Vertex x : c.core)
    if (x < 0 || x >= h.n) return false;
  if (c.edges[0] == c.edges[1] || c.edges[1] == c.edges[2] ||
      c.edges[0] == c.edges[2])
    return false;
  if (!c.edges[0].contains_pair(v1, v2)) return false;
  if (!c.edges[1].contains_pair(v2, v3)) return false;
  if (!c.edges[2].contains_pair(v3, v1)) return false;
  for (const Triple& e : c.edges)
    if (!h.has_edge(e)) return false;
  return true;
}

std::optional<BergeTriangleCertificate> find_berge_triangle(
    const Hypergraph& h) {
  if (h.edges.size() < 3) return std::nullopt;
  ShadowGraph s = shadow(h);
  for (Vertex a = 0; a < h.n; ++a)
    for (Vertex b = a + 1; b < h.n; ++b) {
      if (s.codegree(a, b) == 0) continue;
      for (Vertex c = b + 1; c < h.n; ++c) {
        if (s.codegree(b, c) == 0 || s.codegree(a, c) == 0) continue;
        auto ab = h.edges_on_pair(a, b);
        auto bc = h.edges_on_pair(b, c);
        auto ca = h.edges_on_pair(a, c);
        for (const Triple& e1 : ab)
          for (const Triple& e2 : bc) {
            if (e2 == e1) continue;
            for (const Triple& e3 : ca) {
              if (e3 == e1 || e3 == e2) continue;
              return BergeTriangleCertificate{{a, b, c}, {e1, e2, e3}};
            }
          }
      }
    }
  return std::nullopt;
}

bool verify_cycle(const Hypergraph& h, const BergeCycleCertificate& c) {
  const std::size_t len = c.core.size();
  if (len < 2 || c.edges.size() != len) return false;
  std::set<Vertex> vs(c.core.begin(), c.core.end());
  std::set<Triple> es(c.edges.begin(), c.edges.end());
  if (vs.size() != len || es.size() != len) return false;
  for (std::size_t i = 0; i < len; ++i) {
    if (c.core[i] < 0 || c.core[i] >= h.n) return false;
    if (!c.edges[i].contains_pair(c.core[i], c.core[(i + 1) % len]))
      return false;
    if (!h.has_edge(c.edges[i])) return false;
  }
  return true;
}

bool verify_book(const Hypergraph& h, const BookCertificate& c, int k) {
  require_k(k);
  if (int(c.pages.size()) != k) return false;
  if (c.u == c.v) return false;
  if (c.u < 0 || c.u >= h.n || c.v < 0 || c.v >= h.n) return false;
  if (!c.apex.contains_pair(c.u, c.v)) return false;
  std::set<Vertex> xs;
  std::set<Triple> used;
  used.insert(c.apex);
  if (!h.has_edge(c.apex)) return false;
  for (const BookPage& p : c.pages) {
    if (p.x == c.u || p.x == c.v) return false;
    if (p.x < 0 || p.x >= h.n) return false;
    if (!xs.insert(p.x).second) return false;
    if (!p.e.contains_pair(c.u, p.x)) return false;
    if (!p.f.contains_pair(p.x, c.v)) return false;
    if (!h.has_edge(p.e) || !h.has_edge(p.f)) return false;
    if (!used.insert(p.e).second) return false;
    if (!used.insert(p.f).second) return false;
  }
  return true;
}

namespace {

// Distinct-hyperedge assignment for a fixed base and page set: slot 0 is the
// base pair, then (u,x_i) and (x_i,v) per page. Backtracks over sorted
// candidates, so the first solution is lexicographic in slot order.
struct Assigner {
  const Hypergraph& h;
  Vertex u, v;
  const std::vector<Vertex>& pages;
  std::vector<std::vector<Triple>> cands;
  std::vector<Triple> chosen;

  Assigner(const Hypergraph& h_, Vertex u_, Vertex v_,
           const std::vector<Vertex>& pages_)
      : h(h_), u(u_), v(v_), pages(pages_) {
    cands.push_back(h.edges_on_pair(u, v));
    for (Vertex x : pages) {
      cands.push_back(h.edges_on_pair(u, x));
      cands.push_back(h.edges_on_pair(x, v));
    }
  }

  bool solve(std::size_t slot) {
    if (slot == cands.size()) return true;
    for (const Triple& e : cands[slot]) {
      if (std::find(chosen.begin(), chosen.end(), e) != chosen.end()) continue;
      chosen.push_back(e);
      if (solve(slot + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

std::optional<BookCertificate> book_search(
    const Hypergraph& h, int k,
    const std::function<bool(Vertex, Vertex)>& base_ok) {
  require_k(k);
  if (int(h.edges.size()) < 2 * k + 1) return std::nullopt;
  ShadowGraph s = shadow(h);
  for (Vertex u = 0; u < h.n; ++u)
    for (Vertex v = u + 1; v < h.n; ++v) {
      if (s.codegree(u, v) == 0) continue;
      if (base_ok && !base_ok(u, v)) continue;
      std::vector<Vertex> cand;
      for (Vertex x = 0; x < h.n; ++x) {
        if (x == u || x == v) continue;
        if (s.codegree(u, x) >= 1 && s.codegree(v, x) >= 1) cand.push_back(x);
      }
      if (int(cand.size()) < k) continue;
      // k-subsets of cand in lex order
      std::vector<Vertex> pick;
      std::function<std::optional<BookCertificate>(std::size_t)> rec =
          [&](std::size_t start) -> std::optional<BookCertificate> {
        if (int(pick.size()) == k) {
          Assigner as(h, u, v, pick);
          if (!as.solve(0)) return std::nullopt;
          BookCertificate cert;
          cert.u = u;
          cert.v = v;
          cert.apex = as.chosen[0];
          for (int i = 0; i < k; ++i)
            cert.pages.push_back(
                BookPage{pick[i], as.chosen[1 + 2 * i], as.chosen[2 + 2 * i]});
          return cert;
        }
        for (std::size_t i = start; i < cand.size(); ++i) {
          if (cand.size() - i < std::size_t(k) - pick.size()) break;
          pick.push_back(cand[i]);
          if (auto r = rec(i + 1)) return r;
          pick.pop_back();
        }
        return std::nullopt;
      };
      if (auto r = rec(0)) return r;
    }
  return std::nullopt;
}

}  // namespace

std::optional<BookCertificate> find_berge_book(const Hypergraph& h, int k) {
  return book_search(h, k, nullptr);
}

std::optional<BookCertificate> find_berge_book_touching(const Hypergraph& h,
                                                        int k,
                                                        const Triple& t) {
  return book_search(h, k, [&t](Vertex u, Vertex v) {
    return t.contains(u) || t.contains(v);
  });
}

namespace {

// Pair the remaining 2k edges into pages (e on {u,x}, f on {x,v}) with
// distinct page vertices. Exhaustive over the first unpaired edge's roles.
bool pair_pages(const std::vector<Triple>& rest, Vertex u, Vertex v,
                std::set<Vertex>& used_x) {
  if (rest.empty()) return true;
  const Triple g = rest.front();
  for (Vertex x : g.verts()) {
    if (x == u || x == v || used_x.count(x)) continue;
    // g as e (needs u); find a partner f on {x,v}
    if (g.contains(u)) {
      for (std::size_t j = 1; j < rest.size(); ++j) {
        if (!rest[j].contains_pair(x, v)) continue;
        std::vector<Triple> next;
        for (std::size_t t = 1; t < rest.size(); ++t)
          if (t != j) next.push_back(rest[t]);
        used_x.insert(x);
        if (pair_pages(next, u, v, used_x)) return true;
        used_x.erase(x);
      }
    }
    // g as f (needs v); find a partner e on {u,x}
    if (g.contains(v)) {
      for (std::size_t j = 1; j < rest.size(); ++j) {
        if (!rest[j].contains_pair(u, x)) continue;
        std::vector<Triple> next;
        for (std::size_t t = 1; t < rest.size(); ++t)
          if (t != j) next.push_back(rest[t]);
        used_x.insert(x);
        if (pair_pages(next, u, v, used_x)) return true;
        used_x.erase(x);
      }
    }
  }
  return false;
}

bool subset_is_book(const std::vector<Triple>& sub, int n) {
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (std::size_t ai = 0; ai < sub.size(); ++ai) {
        if (!sub[ai].contains_pair(u, v)) continue;
        std::vector<Triple> rest;
        for (std::size_t t = 0; t < sub.size(); ++t)
          if (t != ai) rest.push_back(sub[t]);
        std::set<Vertex> used;
        if (pair_pages(rest, u, v, used)) return true;
      }
  return false;
}

}  // namespace

bool oracle_contains_book(const Hypergraph& h, int k) {
  require_k(k);
  const int need = 2 * k + 1;
  const int m = int(h.edges.size());
  if (m < need) return false;
  std::vector<int> idx(need);
  for (int i = 0; i < need; ++i) idx[i] = i;
  std::vector<Triple> sub(need);
  while (true) {
    for (int i = 0; i < need; ++i) sub[i] = h.edges[idx[i]];
    if (subset_is_book(sub, h.n)) return true;
    // next combination
    int i = need - 1;
    while (i >= 0 && idx[i] == m - need + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
  }
  return false;
}

bool is_linear(const Hypergraph& h) {
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    for (std::size_t j = i + 1; j < h.edges.size(); ++j)
      if (h.edges[i].shared_count(h.edges[j]) >= 2) return false;
  return true;
}

int count_triangles_on_pair(const Hypergraph& h, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("pair vertices must differ");
  auto base = h.edges_on_pair(u, v);
  int count = 0;
  for (Vertex x = 0; x < h.n; ++x) {
    if (x == u || x == v) continue;
    auto ux = h.edges_on_pair(u, x);
    if (ux.empty()) continue;
    auto xv = h.edges_on_pair(x, v);
    if (xv.empty()) continue;
    bool found = false;
    for (const Triple& e1 : ux) {
      for (const Triple& e2 : xv) {
        if (e2 == e1) continue;
        for (const Triple& e3 : base) {
          if (e3 == e1 || e3 == e2) continue;
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (found) ++count;
  }
  return count;
}

}  // namespace bergebook
