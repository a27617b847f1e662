#pragma once

// Word-sized adjacency for graphs with at most 64 vertices. Internal to the
// library; the oracle and branching kernels run on these masks.

#include <bit>
#include <cstdint>
#include <vector>

#include "sepscope/graph.hpp"

namespace sepscope::detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

inline std::vector<Vertex> mask_members(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

struct MaskGraph {
  int n = 0;
  std::vector<Mask> adj;

  explicit MaskGraph(const Graph& g) : n(g.vertex_count()), adj(g.vertex_count(), 0) {
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : g.neighbors(v)) adj[v] |= bit(w);
  }

  Mask all() const { return n == 64 ? ~Mask{0} : (bit(n) - 1); }

  Mask open_nbhd(Mask s) const {
    Mask out = 0;
    for (Mask t = s; t; t &= t - 1) out |= adj[std::countr_zero(t)];
    return out & ~s;
  }
  Mask closed_nbhd(Mask s) const { return open_nbhd(s) | s; }

  /// Component of `seed` inside `within` (seed must be a member).
  Mask component(Mask within, int seed) const {
    Mask comp = bit(seed), frontier = comp;
    while (frontier) {
      Mask grow = 0;
      for (Mask t = frontier; t; t &= t - 1) grow |= adj[std::countr_zero(t)];
      grow &= within & ~comp;
      comp |= grow;
      frontier = grow;
    }
    return comp;
  }

  /// Number of components of G[rest] whose neighbourhood equals s, stopping at `stop`.
  int full_component_count(Mask s, Mask rest, int stop = 2) const {
    int full = 0;
    while (rest) {
      Mask c = component(rest, std::countr_zero(rest));
      rest &= ~c;
      if (open_nbhd(c) == s && ++full >= stop) return full;
    }
    return full;
  }

  /// Minimal separator of G[present]; the empty set qualifies when
  /// G[present] is disconnected.
  bool is_separator_within(Mask present, Mask s) const {
    Mask rest = present & ~s;
    if (!rest) return false;
    int full = 0;
    while (rest) {
      Mask c = component(rest, std::countr_zero(rest));
      rest &= ~c;
      if ((open_nbhd(c) & present) == s && ++full >= 2) return true;
    }
    return false;
  }

  bool connected_within(Mask present) const {
    if (!present) return true;
    return component(present, std::countr_zero(present)) == present;
  }
};

}  // namespace sepscope::detail
