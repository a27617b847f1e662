#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sepscope/vertex_bits.hpp"

namespace sepscope {

using Vertex = int;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exponential search or enumeration hits its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

VertexSet canonical_set(std::vector<Vertex> members);

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws Error on self-loops, duplicate edges, or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return bits_[u].test(v); }
  const VertexBits& neighbor_bits(Vertex v) const { return bits_[v]; }

  /// Edges (u, v) with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const;

  VertexBits all_vertices() const;
  VertexBits bits_of(std::span<const Vertex> s) const;
  bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexBits> bits_;
};

/// old_to_new[v] is the new index of v, or -1 when v did not survive.
struct Relabeling {
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;

  Vertex map(Vertex old) const { return old_to_new[old]; }
  VertexSet map_set(std::span<const Vertex> s) const;
  VertexSet unmap_set(std::span<const Vertex> s) const;
};

struct Subgraph {
  Graph graph;
  Relabeling relabeling;
};

/// Bookkeeping for a contraction: every merged vertex maps to kept_vertex.
struct Contraction {
  Vertex kept_vertex = -1;       // index in the contracted graph
  VertexSet merged_vertices;     // old indices
  Relabeling relabeling;         // new_to_old[kept_vertex] == min(merged_vertices)
};

struct Contracted {
  Graph graph;
  Contraction contraction;
};

struct Glued {
  Graph graph;
  std::vector<Vertex> a_to_new;  // identity on a
  std::vector<Vertex> b_to_new;
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Contracts a connected vertex set into its lowest-index member.
Contracted contract_path(const Graph& g, std::span<const Vertex> set);

/// Disjoint union of a and b with va and vb identified (va keeps its index).
Glued glue(const Graph& a, Vertex va, const Graph& b, Vertex vb);

/// Disjoint union, b shifted by |V(a)|.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Connected components of G[within], each sorted, listed by smallest member.
std::vector<VertexSet> components(const Graph& g, std::span<const Vertex> within);
std::vector<VertexBits> components_bits(const Graph& g, const VertexBits& within);
bool is_connected_set(const Graph& g, const VertexBits& s);
bool is_connected(const Graph& g);

/// closed: N[s]; open: N[s] \ s.
VertexSet neighborhood(const Graph& g, std::span<const Vertex> s, bool closed);
VertexBits closed_neighborhood_bits(const Graph& g, const VertexBits& s);
VertexBits open_neighborhood_bits(const Graph& g, const VertexBits& s);

bool is_anticomplete(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);
bool dominates(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y);

// Small standard graphs used across tests, examples and the classifier.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);

// Edge-list text format: '#' comments, "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace sepscope
