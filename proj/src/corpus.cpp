#include "sepscope/corpus.hpp"

#include <map>
#include <string>

#include "sepscope/canonical.hpp"
#include "sepscope/families.hpp"

namespace sepscope {

namespace {

Graph add_vertex(const Graph& g, unsigned mask) {
  const int n = g.vertex_count();
  std::vector<Edge> e = g.edges();
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1u) e.emplace_back(v, n);
  return Graph::from_edges(n + 1, e);
}

}  // namespace

std::vector<Graph> graphs_up_to_iso(int n, bool connected_only) {
  if (n < 1 || n > kCanonicalFormMaxVertices) throw Error("graphs_up_to_iso needs 1 <= n <= 10");
  std::vector<Graph> level{Graph(1)};
  for (int size = 1; size < n; ++size) {
    // A connected graph keeps connectivity after deleting some vertex, so
    // connected classes arise from connected classes one size down.
    std::map<std::string, Graph> next;
    const unsigned first = connected_only ? 1u : 0u;
    for (const Graph& g : level)
      for (unsigned mask = first; mask < (1u << size); ++mask) {
        Graph h = add_vertex(g, mask);
        next.try_emplace(canonical_form(h), std::move(h));
      }
    level.clear();
    for (auto& [form, g] : next) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Graph> graphs_up_to(int max_n, bool connected_only) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = graphs_up_to_iso(n, connected_only);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Graph random_graph(int n, int percent, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform_int(rng, 0, 99) < percent) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

std::vector<Graph> random_graphs(int count, int min_n, int max_n, std::uint64_t seed) {
  if (min_n < 1 || max_n < min_n) throw Error("random_graphs needs 1 <= min_n <= max_n");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = uniform_int(rng, min_n, max_n);
    const int percent = uniform_int(rng, 20, 60);
    out.push_back(random_graph(n, percent, rng));
  }
  return out;
}

}  // namespace sepscope
