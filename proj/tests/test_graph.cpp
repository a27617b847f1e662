#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sepscope/canonical.hpp"
#include "sepscope/graph.hpp"

using namespace sepscope;

TEST_CASE("from_edges rejects malformed input") {
  std::vector<Edge> loop{{1, 1}}, dup{{0, 1}, {1, 0}}, range{{0, 5}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, dup), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, range), Error);
}

TEST_CASE("standard graphs") {
  CHECK(path_graph(5).edge_count() == 4);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(star_graph(3).vertex_count() == 4);
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK_THROWS_AS(cycle_graph(2), Error);
}

TEST_CASE("edge-list round trip and parse errors") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Graph g = oracle::random_graph(9, 0.4, rng);
    std::istringstream in(to_edge_list(g));
    CHECK(read_edge_list(in) == g);
  }
  std::istringstream comments("# header comment\n3 2\n\n0 1\n  # inner\n1 2\n");
  CHECK(read_edge_list(comments).edge_count() == 2);
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("3 2\n0 1\n0 1\n") == 3);
  CHECK(line_of("3 1\n0 3\n") == 2);
  CHECK(line_of("3 1\n1 1\n") == 2);
  CHECK(line_of("3 2\n0 1\n") == 2);
  CHECK(line_of("3 1\n0 1 7\n") == 2);
  CHECK(line_of("x\n") == 1);
}

TEST_CASE("induced subgraph relabels in order") {
  Graph g = cycle_graph(6);
  std::vector<Vertex> keep{1, 2, 3, 5};
  auto sub = induced_subgraph(g, keep);
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.graph.edge_count() == 2);
  CHECK(sub.relabeling.new_to_old == std::vector<Vertex>{1, 2, 3, 5});
  CHECK(sub.relabeling.map(4) == -1);
}

TEST_CASE("contract_path keeps the lowest vertex") {
  Graph g = path_graph(5);
  std::vector<Vertex> set{2, 3};
  auto c = contract_path(g, set);
  CHECK(c.graph == path_graph(4));
  CHECK(c.contraction.relabeling.new_to_old[c.contraction.kept_vertex] == 2);
  std::vector<Vertex> apart{0, 4};
  CHECK_THROWS_AS(contract_path(g, apart), Error);
}

TEST_CASE("glue and disjoint union") {
  auto gl = glue(path_graph(3), 2, path_graph(3), 0);
  CHECK(gl.graph == path_graph(5));
  CHECK(gl.a_to_new[2] == gl.b_to_new[0]);
  Graph u = disjoint_union(complete_graph(3), path_graph(2));
  CHECK(u.vertex_count() == 5);
  CHECK(components(u, std::vector<Vertex>{0, 1, 2, 3, 4}).size() == 2);
  CHECK_FALSE(is_connected(u));
}

TEST_CASE("neighbourhoods, anti-completeness and domination") {
  Graph g = path_graph(5);
  std::vector<Vertex> s{1, 2};
  CHECK(neighborhood(g, s, false) == VertexSet{0, 3});
  CHECK(neighborhood(g, s, true) == VertexSet{0, 1, 2, 3});
  CHECK(is_anticomplete(g, std::vector<Vertex>{0}, std::vector<Vertex>{2, 3}));
  CHECK_FALSE(is_anticomplete(g, std::vector<Vertex>{0}, std::vector<Vertex>{1}));
  CHECK(dominates(g, std::vector<Vertex>{1}, std::vector<Vertex>{0, 2}));
}

TEST_CASE("canonical form is a complete isomorphism invariant on small graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(7, 0.45, rng);
    std::vector<Vertex> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    Graph h = Graph::from_edges(7, e);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(fingerprint(g) == fingerprint(h));
    CHECK(are_isomorphic(g, h));
  }
  // Same degree sequence, not isomorphic.
  CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  CHECK(canonical_form(cycle_graph(6)) != canonical_form(disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST_CASE("isomorphism beyond the canonical-form range") {
  Graph a = cycle_graph(14);
  std::vector<Edge> e;
  for (int i = 0; i < 14; ++i) e.emplace_back(std::min((i * 3) % 14, (i * 3 + 3) % 14), std::max((i * 3) % 14, (i * 3 + 3) % 14));
  CHECK(are_isomorphic(a, Graph::from_edges(14, e)));
  CHECK_FALSE(are_isomorphic(a, disjoint_union(cycle_graph(7), cycle_graph(7))));
}
