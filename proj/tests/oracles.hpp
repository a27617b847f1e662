#pragma once

// Brute-force references for the tests. They use only an adjacency matrix
// and plain loops, never library search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "sepscope/graph.hpp"

namespace oracle {

using sepscope::Graph;
using sepscope::VertexSet;

struct Matrix {
  int n = 0;
  std::vector<std::vector<char>> a;
  explicit Matrix(const Graph& g) : n(g.vertex_count()), a(n, std::vector<char>(n, 0)) {
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  }
};

inline std::vector<int> members(std::uint32_t m) {
  std::vector<int> out;
  for (int v = 0; v < 32; ++v)
    if (m >> v & 1u) out.push_back(v);
  return out;
}

// Components of the vertices in `alive`, as bitmasks.
inline std::vector<std::uint32_t> comps(const Matrix& g, std::uint32_t alive) {
  std::vector<std::uint32_t> out;
  std::uint32_t seen = 0;
  for (int s = 0; s < g.n; ++s) {
    if (!(alive >> s & 1u) || (seen >> s & 1u)) continue;
    std::uint32_t c = 1u << s;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < g.n; ++w)
        if (g.a[v][w] && (alive >> w & 1u) && !(c >> w & 1u)) {
          c |= 1u << w;
          stack.push_back(w);
        }
    }
    seen |= c;
    out.push_back(c);
  }
  return out;
}

inline std::uint32_t nbhd(const Matrix& g, std::uint32_t s) {
  std::uint32_t out = 0;
  for (int v = 0; v < g.n; ++v)
    if (s >> v & 1u)
      for (int w = 0; w < g.n; ++w)
        if (g.a[v][w]) out |= 1u << w;
  return out & ~s;
}

inline bool is_min_sep(const Matrix& g, std::uint32_t s) {
  const std::uint32_t all = g.n == 32 ? ~0u : (1u << g.n) - 1;
  int full = 0;
  for (auto c : comps(g, all & ~s))
    if (nbhd(g, c) == s) ++full;
  return s != 0 && full >= 2;
}

inline std::vector<VertexSet> min_separators(const Graph& gr) {
  Matrix g(gr);
  std::vector<VertexSet> out;
  for (std::uint32_t s = 1; s < (1u << g.n); ++s)
    if (is_min_sep(g, s)) out.push_back(members(s));
  std::sort(out.begin(), out.end());
  return out;
}

inline int domination(const Graph& gr, const VertexSet& target, const VertexSet& cand) {
  Matrix g(gr);
  std::uint32_t t = 0;
  for (int v : target) t |= 1u << v;
  int best = -1;
  for (std::uint32_t pick = 0; pick < (1u << cand.size()); ++pick) {
    std::uint32_t cover = 0;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (pick >> i & 1u) cover |= (nbhd(g, 1u << cand[i]) | (1u << cand[i]));
    if ((cover & t) == t) {
      int size = __builtin_popcount(pick);
      if (best < 0 || size < best) best = size;
    }
  }
  return best;
}

inline bool has_induced_copy(const Graph& host, const Graph& pat) {
  Matrix g(host), h(pat);
  if (h.n > g.n) return false;
  // Every ordered choice of h.n host vertices.
  std::vector<int> idx(h.n);
  std::function<bool(int, std::uint32_t)> rec = [&](int i, std::uint32_t used) {
    if (i == h.n) return true;
    for (int v = 0; v < g.n; ++v) {
      if (used >> v & 1u) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g.a[v][idx[j]] == h.a[i][j];
      if (!ok) continue;
      idx[i] = v;
      if (rec(i + 1, used | 1u << v)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

// Labels every vertex none/A/B/X/Y and checks the creature clauses; the X-Y
// edges must form a perfect matching.
inline bool has_creature(const Graph& gr, int k) {
  Matrix g(gr);
  std::uint64_t total = 1;
  for (int i = 0; i < g.n; ++i) total *= 5;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    std::uint32_t A = 0, B = 0, X = 0, Y = 0;
    for (int v = 0; v < g.n; ++v) {
      int l = static_cast<int>(c % 5);
      c /= 5;
      if (l == 1) A |= 1u << v;
      if (l == 2) B |= 1u << v;
      if (l == 3) X |= 1u << v;
      if (l == 4) Y |= 1u << v;
    }
    if (__builtin_popcount(X) != k || __builtin_popcount(Y) != k || !A || !B) continue;
    if (comps(g, A).size() != 1 || comps(g, B).size() != 1) continue;
    if (nbhd(g, A) & (B | Y)) continue;
    if (nbhd(g, B) & (A | X)) continue;
    bool ok = true;
    for (int x : members(X)) {
      if (!(nbhd(g, 1u << x) & A)) ok = false;
      if (__builtin_popcount(nbhd(g, 1u << x) & Y) != 1) ok = false;
    }
    for (int y : members(Y)) {
      if (!(nbhd(g, 1u << y) & B)) ok = false;
      if (__builtin_popcount(nbhd(g, 1u << y) & X) != 1) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

inline int longest_induced_cycle(const Graph& gr) {
  Matrix g(gr);
  int best = 0;
  for (std::uint32_t s = 1; s < (1u << g.n); ++s) {
    int size = __builtin_popcount(s);
    if (size < 3 || size <= best) continue;
    bool deg2 = true;
    for (int v : members(s)) deg2 = deg2 && __builtin_popcount(nbhd(g, 1u << v) & s) == 2;
    if (deg2 && comps(g, s).size() == 1) best = size;
  }
  return best;
}

inline int vc_dimension(const std::vector<VertexSet>& family, int universe) {
  if (family.empty()) return -1;
  std::vector<std::uint32_t> sets;
  for (const auto& s : family) {
    std::uint32_t m = 0;
    for (int v : s) m |= 1u << v;
    sets.push_back(m);
  }
  int best = 0;
  for (std::uint32_t t = 1; t < (1u << universe); ++t) {
    int size = __builtin_popcount(t);
    if (size <= best) continue;
    std::vector<char> seen(1u << universe, 0);
    int distinct = 0;
    for (auto m : sets)
      if (!seen[m & t]++) ++distinct;
    if (distinct == (1 << size)) best = size;
  }
  return best;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<sepscope::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

}  // namespace oracle
