#include "sepscope/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "sepscope/detectors.hpp"

namespace sepscope {
namespace {

// Iterated degree refinement; returns colour per vertex, colours ordered by
// an invariant key so equal graphs get equal colourings up to relabeling.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, 0);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> key{colour[v]};
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      keys[v] = {std::move(key), v};
    }
    std::map<std::vector<int>, int> ids;
    for (auto& [k, v] : keys) ids.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    std::vector<int> fresh(n);
    for (int v = 0; v < n; ++v) fresh[v] = ids[keys[v].first];
    int before = static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
    colour = fresh;
    if (next == before) break;
  }
  return colour;
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> slot_colour;  // colour required at each position
  std::vector<int> colour;
  std::vector<int> order;        // position -> vertex
  std::vector<char> used;
  std::string current;
  std::string best;
  bool have_best = false;

  // Column-major upper triangle: after fixing positions 0..p the first
  // p(p+1)/2 characters are final, which enables prefix pruning.
  void place(int p) {
    if (p == n) {
      if (!have_best || current < best) {
        best = current;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || colour[v] != slot_colour[p]) continue;
      std::size_t base = current.size();
      for (int i = 0; i < p; ++i) current.push_back(g.adjacent(order[i], v) ? '1' : '0');
      bool worse = false;
      if (have_best) {
        int c = current.compare(0, current.size(), best, 0, current.size());
        worse = c > 0;
      }
      if (!worse) {
        used[v] = 1;
        order[p] = v;
        place(p + 1);
        used[v] = 0;
      }
      current.resize(base);
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kCanonicalFormMaxVertices) throw Error("canonical_form is limited to 10 vertices");
  CanonSearch s{g, n, {}, refine_colours(g), std::vector<int>(n), std::vector<char>(n, 0), {}, {}, false};
  s.slot_colour = s.colour;
  std::sort(s.slot_colour.begin(), s.slot_colour.end());
  s.place(0);
  std::string head = std::to_string(n) + ":";
  for (int c : s.slot_colour) head += std::to_string(c) + ",";
  return head + "|" + s.best;
}

std::uint64_t fingerprint(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour = refine_colours(g);
  std::vector<std::uint64_t> per(n);
  for (int v = 0; v < n; ++v) {
    std::uint64_t tri = 0;
    for (Vertex w : g.neighbors(v)) tri += (g.neighbor_bits(v) & g.neighbor_bits(w)).count();
    per[v] = (static_cast<std::uint64_t>(colour[v]) << 32) ^ (static_cast<std::uint64_t>(g.degree(v)) << 16) ^ tri;
  }
  std::sort(per.begin(), per.end());
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(n) ^ (static_cast<std::uint64_t>(g.edge_count()) << 20);
  for (auto x : per) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

bool are_isomorphic(const Graph& a, const Graph& b, std::uint64_t budget) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.vertex_count() <= kCanonicalFormMaxVertices) return canonical_form(a) == canonical_form(b);
  if (fingerprint(a) != fingerprint(b)) return false;
  auto verdict = find_induced_subgraph(a, b, budget);
  if (verdict.status == SearchStatus::unknown_budget) throw BudgetExceeded("isomorphism search budget exhausted");
  return verdict.status == SearchStatus::found;
}

}  // namespace sepscope
