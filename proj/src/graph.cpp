#include "sepscope/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace sepscope {

VertexSet canonical_set(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

Graph::Graph(int n) : n_(n), adj_(n), bits_(n, VertexBits(n)) {
  if (n < 0) throw Error("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (!g.valid_vertex(u) || !g.valid_vertex(v))
      throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw Error("self-loop at " + std::to_string(u));
    if (g.bits_[u].test(v))
      throw Error("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g.bits_[u].set(v);
    g.bits_[v].set(u);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.m_;
  }
  for (auto& l : g.adj_) std::sort(l.begin(), l.end());
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexBits Graph::all_vertices() const {
  VertexBits b(n_);
  b.fill();
  return b;
}

VertexBits Graph::bits_of(std::span<const Vertex> s) const {
  VertexBits b(n_);
  for (Vertex v : s) {
    if (!valid_vertex(v)) throw Error("vertex " + std::to_string(v) + " out of range");
    b.set(v);
  }
  return b;
}

VertexSet Relabeling::map_set(std::span<const Vertex> s) const {
  std::vector<Vertex> out;
  for (Vertex v : s)
    if (old_to_new[v] >= 0) out.push_back(old_to_new[v]);
  return canonical_set(std::move(out));
}

VertexSet Relabeling::unmap_set(std::span<const Vertex> s) const {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(new_to_old[v]);
  return canonical_set(std::move(out));
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  VertexBits kb = g.bits_of(keep);
  Relabeling r;
  r.old_to_new.assign(g.vertex_count(), -1);
  kb.for_each([&](Vertex v) {
    r.old_to_new[v] = static_cast<Vertex>(r.new_to_old.size());
    r.new_to_old.push_back(v);
  });
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (kb.test(u) && kb.test(v)) edges.emplace_back(r.old_to_new[u], r.old_to_new[v]);
  return {Graph::from_edges(static_cast<int>(r.new_to_old.size()), edges), std::move(r)};
}

Contracted contract_path(const Graph& g, std::span<const Vertex> set) {
  VertexBits sb = g.bits_of(set);
  if (sb.none()) throw Error("contraction of an empty set");
  if (!is_connected_set(g, sb)) throw Error("contracted set is not connected");
  Vertex rep = sb.first();
  Relabeling r;
  r.old_to_new.assign(g.vertex_count(), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (sb.test(v) && v != rep) continue;
    r.old_to_new[v] = static_cast<Vertex>(r.new_to_old.size());
    r.new_to_old.push_back(v);
  }
  Vertex kept = r.old_to_new[rep];
  sb.for_each([&](Vertex v) { r.old_to_new[v] = kept; });
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    Vertex a = r.old_to_new[u], b = r.old_to_new[v];
    if (a == b) continue;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Contraction c{kept, sb.members(), std::move(r)};
  return {Graph::from_edges(static_cast<int>(c.relabeling.new_to_old.size()), edges), std::move(c)};
}

Glued glue(const Graph& a, Vertex va, const Graph& b, Vertex vb) {
  if (!a.valid_vertex(va) || !b.valid_vertex(vb)) throw Error("glue vertex out of range");
  Glued out;
  out.a_to_new.resize(a.vertex_count());
  for (Vertex v = 0; v < a.vertex_count(); ++v) out.a_to_new[v] = v;
  out.b_to_new.resize(b.vertex_count());
  Vertex next = a.vertex_count();
  for (Vertex v = 0; v < b.vertex_count(); ++v) out.b_to_new[v] = (v == vb) ? va : next++;
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) {
    Vertex x = out.b_to_new[u], y = out.b_to_new[v];
    edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.graph = Graph::from_edges(next, edges);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int off = a.vertex_count();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
  return Graph::from_edges(off + b.vertex_count(), edges);
}

std::vector<VertexBits> components_bits(const Graph& g, const VertexBits& within) {
  std::vector<VertexBits> out;
  VertexBits left = within;
  std::vector<Vertex> stack;
  for (int s = left.first(); s != -1; s = left.first()) {
    VertexBits comp(g.vertex_count());
    comp.set(s);
    left.reset(s);
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (left.test(w)) {
          left.reset(w);
          comp.set(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g, std::span<const Vertex> within) {
  std::vector<VertexSet> out;
  for (const auto& c : components_bits(g, g.bits_of(within))) out.push_back(c.members());
  return out;
}

bool is_connected_set(const Graph& g, const VertexBits& s) {
  if (s.none()) return false;
  return components_bits(g, s).size() == 1;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() == 0 || is_connected_set(g, g.all_vertices());
}

VertexBits closed_neighborhood_bits(const Graph& g, const VertexBits& s) {
  VertexBits out = s;
  s.for_each([&](Vertex v) { out |= g.neighbor_bits(v); });
  return out;
}

VertexBits open_neighborhood_bits(const Graph& g, const VertexBits& s) {
  return closed_neighborhood_bits(g, s) - s;
}

VertexSet neighborhood(const Graph& g, std::span<const Vertex> s, bool closed) {
  VertexBits sb = g.bits_of(s);
  return (closed ? closed_neighborhood_bits(g, sb) : open_neighborhood_bits(g, sb)).members();
}

bool is_anticomplete(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexBits ab = g.bits_of(a), bb = g.bits_of(b);
  if (ab.intersects(bb)) return false;
  for (Vertex v : a)
    if (g.neighbor_bits(v).intersects(bb)) return false;
  return true;
}

bool dominates(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
  VertexBits covered = closed_neighborhood_bits(g, g.bits_of(x));
  return g.bits_of(y).subset_of(covered);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<std::pair<long long, long long>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a >> b)) throw ParseError(lineno, "expected two integers");
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing characters");
    if (!have_header) {
      if (a < 0 || b < 0) throw ParseError(lineno, "negative header value");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) throw ParseError(lineno, "more edges than declared");
    if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(lineno, "vertex out of range");
    if (a == b) throw ParseError(lineno, "self-loop");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) throw ParseError(lineno, "duplicate edge");
    edges.emplace_back(static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b)));
  }
  if (!have_header) throw ParseError(lineno, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) throw ParseError(lineno, "fewer edges than declared");
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_edge_list(out, g);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

}  // namespace sepscope
