#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sepscope/classifier.hpp"

using namespace sepscope;

namespace {

ForbiddenFamily family(std::vector<Graph> g) { return make_forbidden_family(std::move(g)); }

}  // namespace

TEST_CASE("forbidden families") {
  CHECK_THROWS_AS(make_forbidden_family({}), Error);
  CHECK_THROWS_AS(make_forbidden_family({Graph(0)}), Error);
  CHECK(family({path_graph(3), cycle_graph(5)}).h == 5);
  CHECK(effective_length_cap(100, 4) == 11);
  CHECK(effective_length_cap(6, 4) == 6);
}

TEST_CASE("member containment") {
  auto hh = family({complete_graph(3), star_graph(3)});
  int which = -1;
  CHECK(contains_member(cycle_graph(3), hh, 1000, &which));
  CHECK(which == 0);
  CHECK(contains_member(star_graph(4), hh, 1000, &which));
  CHECK(which == 1);
  CHECK_FALSE(contains_member(cycle_graph(7), hh, 1000));
  CHECK_THROWS_AS(contains_member(cycle_graph(60), family({cycle_graph(9)}), 5), BudgetExceeded);
}

TEST_CASE("type checks") {
  // Every theta has a vertex of degree k with independent neighbours.
  auto claw = forbids_family_type(family({star_graph(3)}), FamilyType::theta, 3, 20);
  CHECK(claw.forbids);
  CHECK(claw.label == "exhaustive");
  CHECK(claw.representatives == 120u);  // nondecreasing triples over [4, 11]
  // Thetas have no induced 4-cycle; the first representative already avoids it.
  auto c4 = forbids_family_type(family({cycle_graph(4)}), FamilyType::theta, 3, 20);
  CHECK_FALSE(c4.forbids);
  REQUIRE(c4.avoiding);
  CHECK(c4.avoiding_spec->path_lengths == std::vector<int>{4, 4, 4});
  auto ladder = forbids_family_type(family({complete_graph(4)}), FamilyType::ladder_prism, 3, 20);
  CHECK(ladder.label == "canonical+sampled");
  CHECK_THROWS_AS(forbids_family_type(family({path_graph(3)}), FamilyType::theta, 3, 3), Error);
  ClassifierConfig tiny;
  tiny.representative_cap = 10;
  CHECK_THROWS_AS(forbids_family_type(family({star_graph(3)}), FamilyType::theta, 3, 20, tiny), BudgetExceeded);
}

TEST_CASE("classifier examples") {
  auto p3 = classify(family({path_graph(3)}));
  CHECK(p3.status == ClassStatus::strongly_quasi_tame);
  CHECK(p3.k_certificate == 3);
  auto k3 = classify(family({complete_graph(3)}));
  CHECK(k3.status == ClassStatus::feral);
  REQUIRE(k3.evidence.size() == 1);
  CHECK(k3.evidence[0].type == FamilyType::theta);
  CHECK(k3.evidence[0].k == 6);
  auto tame = classify(family({complete_graph(3), star_graph(3)}));
  CHECK(tame.status == ClassStatus::tame);
  CHECK(tame.forbidden_clique == 3);
  CHECK_THROWS_AS(classify(family({path_graph(3)}), 2), Error);
}

TEST_CASE("classifier budget yields inconclusive") {
  ClassifierConfig cfg;
  cfg.representative_cap = 5;
  auto v = classify(family({path_graph(3)}), 6, 0, cfg);
  CHECK(v.status == ClassStatus::inconclusive);
  CHECK_FALSE(v.note.empty());
}

TEST_CASE("degree-two path reduction") {
  CHECK_THROWS_AS(reduce_degree_two_paths(path_graph(10), 5), Error);
  CHECK(reduce_degree_two_paths(cycle_graph(100), 6) == cycle_graph(30));
  CHECK(reduce_degree_two_paths(path_graph(100), 6).vertex_count() == 29);
  CHECK(reduce_degree_two_paths(path_graph(20), 6) == path_graph(20));
  // A theta keeps its branch vertices and its short paths.
  Graph g = disjoint_union(complete_graph(4), path_graph(50));
  Graph r = reduce_degree_two_paths(g, 6);
  CHECK(r.vertex_count() == 4 + 29);
  CHECK(r.edge_count() == 6 + 28);
}

TEST_CASE("reduction keeps avoided graphs avoided") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    Graph base = oracle::random_graph(5, 0.5, rng);
    Graph g = subdivide(base, 35);
    for (int t = 0; t < 5; ++t) {
      Graph h = oracle::random_graph(6, 0.3, rng);
      if (oracle::has_induced_copy(base, h)) continue;
      auto hh = family({h});
      if (contains_member(g, hh, 100'000'000)) continue;
      CHECK_FALSE(contains_member(reduce_degree_two_paths(g, 6), hh, 100'000'000));
    }
  }
}
