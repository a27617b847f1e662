#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sepscope/canonical.hpp"
#include "sepscope/detectors.hpp"
#include "sepscope/families.hpp"

using namespace sepscope;

namespace {

bool embedding_ok(const Graph& g, const Graph& h, const Embedding& e) {
  if (static_cast<int>(e.size()) != h.vertex_count()) return false;
  if (canonical_set(e).size() != e.size()) return false;
  for (int i = 0; i < h.vertex_count(); ++i)
    for (int j = i + 1; j < h.vertex_count(); ++j)
      if (g.adjacent(e[i], e[j]) != h.adjacent(i, j)) return false;
  return true;
}

Graph skinny(int k) {
  FamilySpec s;
  s.family = Family::skinny_ladder;
  s.k = k;
  return generate(s).graph;
}

}  // namespace

TEST_CASE("induced subgraph search against brute force") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(8, 0.45, rng);
    Graph h = oracle::random_graph(2 + static_cast<int>(rng() % 4), 0.5, rng);
    auto v = find_induced_subgraph(g, h);
    REQUIRE(v.status != SearchStatus::unknown_budget);
    CHECK((v.status == SearchStatus::found) == oracle::has_induced_copy(g, h));
    if (v.witness) CHECK(embedding_ok(g, h, *v.witness));
  }
  CHECK(find_induced_subgraph(path_graph(3), path_graph(4)).status == SearchStatus::absent_exhaustive);
  CHECK(find_induced_subgraph(cycle_graph(12), complete_graph(3)).status == SearchStatus::absent_exhaustive);
}

TEST_CASE("budget exhaustion is reported, not thrown") {
  auto v = find_induced_subgraph(cycle_graph(40), cycle_graph(7), 10);
  CHECK(v.status == SearchStatus::unknown_budget);
  CHECK_FALSE(v.witness);
}

TEST_CASE("induced minor search agrees with the reference") {
  std::mt19937_64 rng(6);
  CHECK(find_induced_minor(cycle_graph(6), complete_graph(3)).status == SearchStatus::found);
  CHECK(find_induced_minor(path_graph(7), complete_graph(3)).status == SearchStatus::absent_exhaustive);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = oracle::random_graph(7, 0.35, rng);
    Graph h = oracle::random_graph(3 + static_cast<int>(rng() % 2), 0.5, rng);
    auto fast = find_induced_minor(g, h);
    auto ref = find_induced_minor_reference(g, h);
    REQUIRE(fast.status != SearchStatus::unknown_budget);
    CHECK(fast.status == ref.status);
    if (fast.witness) CHECK(validate_minor(g, h, *fast.witness));
  }
}

TEST_CASE("validate_minor rejects broken witnesses") {
  Graph g = cycle_graph(6);
  MinorWitness ok{{{0}, {1}, {2, 3, 4, 5}}};
  CHECK(validate_minor(g, complete_graph(3), ok));
  MinorWitness split{{{0}, {1}, {2, 4}}};
  CHECK_FALSE(validate_minor(g, complete_graph(3), split));
  MinorWitness overlap{{{0, 1}, {1, 2}, {3, 4, 5}}};
  CHECK_FALSE(validate_minor(g, complete_graph(3), overlap));
  MinorWitness extra_edge{{{0}, {1}, {2}}};
  CHECK_FALSE(validate_minor(g, complete_graph(3), extra_edge));
  CHECK(validate_minor(g, path_graph(3), extra_edge));
}

TEST_CASE("creature search against brute force") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(6 + static_cast<int>(trial % 2), 0.4, rng);
    for (int k = 1; k <= 2; ++k) {
      auto v = find_creature(g, k);
      REQUIRE(v.status != SearchStatus::unknown_budget);
      CHECK((v.status == SearchStatus::found) == oracle::has_creature(g, k));
      if (v.witness) {
        CHECK(validate_creature(g, *v.witness));
        CHECK(v.witness->order == k);
      }
    }
  }
}

TEST_CASE("creature clauses") {
  Graph g = cycle_graph(8);
  CreatureWitness w{{0}, {3, 4, 5}, {1, 7}, {2, 6}, 2};
  CHECK(validate_creature(g, w));
  CreatureWitness bad = w;
  bad.y_row = {6, 2};
  CHECK_FALSE(creature_violation(g, bad).empty());
  bad = w;
  bad.b_side = {3, 5};
  CHECK_FALSE(creature_violation(g, bad).empty());
  CHECK(max_creature_order(g, 3) == 2);
  CHECK(max_creature_order(path_graph(3), 3) == 0);
}

TEST_CASE("skinny ladders have no five-creature") {
  for (int k = 2; k <= 3; ++k) CHECK(find_creature(skinny(k), 5).status == SearchStatus::absent_exhaustive);
  CHECK(find_creature(skinny(3), 2).status == SearchStatus::found);
}

TEST_CASE("twisted ladders have bounded creature order") {
  for (int k = 2; k <= 3; ++k) {
    FamilySpec s;
    s.family = Family::twisted_ladder;
    s.k = k;
    Graph g = generate(s).graph;
    CHECK(find_creature(g, 5).status == SearchStatus::absent_exhaustive);
    CHECK(max_creature_order(g, 6) == 4);
  }
}

TEST_CASE("induced cycles against brute force") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = oracle::random_graph(9, 0.3, rng);
    const int best = oracle::longest_induced_cycle(g);
    for (int r = 3; r <= 8; ++r) {
      auto v = longest_induced_cycle_at_least(g, r);
      REQUIRE(v.status != SearchStatus::unknown_budget);
      CHECK((v.status == SearchStatus::found) == (best >= r));
      if (v.witness) {
        const auto& c = *v.witness;
        CHECK(static_cast<int>(c.size()) >= r);
        for (std::size_t i = 0; i < c.size(); ++i)
          for (std::size_t j = i + 1; j < c.size(); ++j)
            CHECK(g.adjacent(c[i], c[j]) == (j == i + 1 || (i == 0 && j + 1 == c.size())));
      }
    }
  }
  CHECK(longest_induced_cycle_at_least(star_graph(4), 5).status == SearchStatus::absent_exhaustive);
}

TEST_CASE("monotone subsequences") {
  auto check_monotone = [](const std::vector<int>& seq, const MonotoneSubsequence& m) {
    for (std::size_t i = 0; i + 1 < m.indices.size(); ++i) {
      CHECK(m.indices[i] < m.indices[i + 1]);
      if (m.increasing) CHECK(seq[m.indices[i]] < seq[m.indices[i + 1]]);
      else CHECK(seq[m.indices[i]] > seq[m.indices[i + 1]]);
    }
  };
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 3), s = 2 + static_cast<int>(rng() % 3);
    std::vector<int> seq((r - 1) * (s - 1) + 1);
    std::iota(seq.begin(), seq.end(), 0);
    std::shuffle(seq.begin(), seq.end(), rng);
    auto m = monotone_subsequence(seq, r, s);
    check_monotone(seq, m);
    CHECK(static_cast<int>(m.indices.size()) >= (m.increasing ? r : s));
  }
  auto m = monotone_subsequence({3, 1, 2}, 2, 2);
  CHECK(m.increasing);
  CHECK(m.indices == std::vector<int>{1, 2});
  CHECK(monotone_subsequence({3, 2, 1}, 2, 3).increasing == false);
}

TEST_CASE("skinny ladder extraction") {
  for (int k = 2; k <= 3; ++k)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      FamilySpec s;
      s.family = Family::almost_skinny_ladder;
      s.k = k * k;
      s.layout_seed = seed;
      auto gen = generate(s);
      auto w = extract_skinny_ladder(gen.graph, gen.witness, k);
      CHECK(w.branch_sets.size() == std::size_t(3 * k));
      CHECK(validate_minor(gen.graph, skinny(k), w));
    }
  FamilySpec s;
  s.family = Family::almost_skinny_ladder;
  s.k = 3;
  auto gen = generate(s);
  CHECK_THROWS_AS(extract_skinny_ladder(gen.graph, gen.witness, 4), Error);
}
