#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sepscope/corpus.hpp"
#include "sepscope/families.hpp"
#include "sepscope/separators.hpp"

using namespace sepscope;

namespace {

std::vector<Graph> sample_graphs(int count, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    int n = 2 + static_cast<int>(rng() % (max_n - 1));
    double p = 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    out.push_back(oracle::random_graph(n, p, rng));
  }
  return out;
}

VertexSet all_of(const Graph& g) {
  VertexSet v(g.vertex_count());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("frozen separator counts") {
  CHECK(enumerate_oracle(path_graph(4)).size() == 2);
  CHECK(enumerate_closure(cycle_graph(5)).size() == 5);
  for (int n = 4; n <= 9; ++n) CHECK(enumerate_closure(cycle_graph(n)).size() == std::size_t(n * (n - 3) / 2));
  CHECK(enumerate_closure(complete_graph(6)).empty());
  CHECK(enumerate_closure(complete_bipartite(3, 4)).size() == 2);
  CHECK(enumerate_closure(star_graph(5)) == std::vector<VertexSet>{{0}});
}

TEST_CASE("oracle, closure and serial variants agree with brute force") {
  for (const Graph& g : sample_graphs(150, 11, 5)) {
    auto expect = oracle::min_separators(g);
    CHECK(enumerate_oracle(g) == expect);
    CHECK(enumerate_oracle_serial(g) == expect);
    CHECK(enumerate_closure(g) == expect);
    CHECK(enumerate_closure_serial(g) == expect);
  }
}

TEST_CASE("oracle respects its vertex cap") {
  CHECK_THROWS_AS(enumerate_oracle(path_graph(17)), BudgetExceeded);
  CHECK(enumerate_oracle(path_graph(17), 17).size() == 15);
  CHECK_THROWS_AS(enumerate_oracle(path_graph(31), 40), BudgetExceeded);
}

TEST_CASE("separator records") {
  Graph g = cycle_graph(6);
  auto rec = make_separator_record(g, {0, 3});
  CHECK(rec.full_components.size() == 2);
  CHECK(record_is_valid(g, rec));
  CHECK(rec.witness_pair == std::make_pair(1, 4));
  CHECK_THROWS_AS(make_separator_record(g, {0, 1}), Error);
  CHECK(is_minimal_separator(g, VertexSet{1, 4}));
  CHECK_FALSE(is_minimal_separator(g, VertexSet{1, 3, 4}));
  for (const Graph& h : sample_graphs(40, 9, 8))
    for (const auto& s : enumerate_closure(h)) CHECK(record_is_valid(h, make_separator_record(h, s)));
}

TEST_CASE("close separator in a cycle") {
  Graph g = cycle_graph(6);
  auto rec = close_separator(g, 0, 3);
  CHECK(rec.separator == VertexSet{2, 4});
  CHECK(component_of(g, rec.separator, 0) == VertexSet{0, 1, 5});
  CHECK_THROWS_AS(close_separator(g, 0, 1), Error);
  CHECK_THROWS_AS(close_separator(disjoint_union(path_graph(2), path_graph(2)), 0, 2), Error);
}

TEST_CASE("close separator is the maximal u-v separator inside N(v)") {
  for (const Graph& g : sample_graphs(60, 9, 13)) {
    auto seps = oracle::min_separators(g);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (u == v || g.adjacent(u, v) || component_of(g, {}, u) != component_of(g, {}, v)) continue;
        auto rec = close_separator(g, u, v);
        CHECK(is_minimal_uv_separator(g, rec.separator, u, v));
        for (const auto& t : seps)
          if (is_minimal_uv_separator(g, t, u, v)) CHECK(separator_leq(g, make_separator_record(g, t), rec, u, v));
      }
  }
}

TEST_CASE("trace families and shattering against brute force") {
  for (const Graph& g : sample_graphs(60, 9, 21)) {
    auto seps = enumerate_closure(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto fam = trace_family(g, v, seps);
      for (const auto& t : fam.traces) {
        auto nv = neighborhood(g, std::vector<Vertex>{v}, false);
        CHECK(std::includes(nv.begin(), nv.end(), t.begin(), t.end()));
      }
      auto sh = shattered_set_max(fam);
      CHECK(sh.exact);
      CHECK(sh.dimension == oracle::vc_dimension(fam.traces, g.vertex_count()));
    }
  }
  CHECK(shattered_set_max(TraceFamily{0, {}}).dimension == -1);
  CHECK(shattered_set_max(TraceFamily{0, {{}}}).dimension == 0);
  CHECK(shattered_set_max(TraceFamily{0, {{}, {1}, {2}, {1, 2}}}).dimension == 2);
  CHECK(shattered_set_max(TraceFamily{0, {{}, {1}, {2}}}).dimension == 1);
}

TEST_CASE("domination number against brute force") {
  for (const Graph& g : sample_graphs(60, 10, 34)) {
    auto all = all_of(g);
    for (const auto& s : enumerate_closure(g)) {
      auto d = domination_number(g, s, all);
      CHECK(d.size == oracle::domination(g, s, all));
      CHECK(dominates(g, d.witness, s));
    }
  }
  FamilySpec s;
  s.family = Family::skinny_ladder;
  s.k = 4;
  auto gen = generate(s);
  CHECK(domination_number(gen.graph, canonical_set(gen.witness.at("S")), all_of(gen.graph)).size == 4);
  CHECK_THROWS_AS(domination_number(path_graph(3), {0}, {2}), Error);
}

TEST_CASE("dominating path decomposition covers the separator") {
  for (const Graph& g : sample_graphs(40, 10, 55)) {
    for (const auto& s : enumerate_closure(g)) {
      auto rec = make_separator_record(g, s);
      for (int ci = 0; ci < static_cast<int>(rec.full_components.size()); ++ci) {
        auto paths = dominating_path_decomposition(g, rec, ci);
        std::vector<Vertex> used;
        for (const auto& p : paths) {
          for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.adjacent(p[i], p[i + 1]));
          used.insert(used.end(), p.begin(), p.end());
        }
        used = canonical_set(used);
        const auto& comp = rec.full_components[ci];
        CHECK(std::includes(comp.begin(), comp.end(), used.begin(), used.end()));
        CHECK(dominates(g, used, s));
      }
    }
  }
}

TEST_CASE("branching returns every minimal separator") {
  for (const Graph& g : sample_graphs(80, 10, 89)) {
    auto expect = oracle::min_separators(g);
    BranchingConfig cfg;
    cfg.k = std::max(1, max_separator_domination(g, expect));
    auto r = enumerate_branching(g, cfg);
    CHECK(r.minimal == expect);
    CHECK(r.raw.size() >= r.minimal.size());
    cfg.memoize = false;
    CHECK(enumerate_branching(g, cfg).minimal == expect);
    cfg.memoize = true;
    CHECK(enumerate_branching(g, cfg, oracle_traces(g)).minimal == expect);
  }
}

TEST_CASE("branching node cap") {
  BranchingConfig cfg;
  cfg.k = 2;
  cfg.node_cap = 3;
  CHECK_THROWS_AS(enumerate_branching(cycle_graph(9), cfg), BudgetExceeded);
  cfg.k = 0;
  CHECK_THROWS_AS(enumerate_branching(cycle_graph(9), cfg), Error);
}

TEST_CASE("corpus sizes match the isomorphism class counts") {
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 7; ++n) CHECK(graphs_up_to_iso(n, true).size() == connected[n - 1]);
  for (int n = 1; n <= 6; ++n) CHECK(graphs_up_to_iso(n, false).size() == all[n - 1]);
  auto a = random_graphs(10, 3, 9, 4), b = random_graphs(10, 3, 9, 4);
  CHECK(a == b);
}
