#include <doctest.h>

#include <random>

#include "sepscope/families.hpp"
#include "sepscope/separators.hpp"

using namespace sepscope;

namespace {

FamilySpec spec_of(Family f, int k) {
  FamilySpec s;
  s.family = f;
  s.k = k;
  return s;
}

// Adds one edge absent from g.
Graph with_extra_edge(const Graph& g, std::mt19937_64& rng) {
  const int n = g.vertex_count();
  while (true) {
    Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
    if (u == v || g.adjacent(u, v)) continue;
    auto e = g.edges();
    e.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(e.begin(), e.end());
    return Graph::from_edges(n, e);
  }
}

}  // namespace

TEST_CASE("family names round trip") {
  for (Family f : all_families()) {
    CHECK(parse_family(family_name(f)) == f);
    std::string hyphen = family_name(f);
    std::replace(hyphen.begin(), hyphen.end(), '_', '-');
    CHECK(parse_family(hyphen) == f);
  }
  CHECK_FALSE(parse_family("hexagon").has_value());
}

TEST_CASE("vertex and edge counts") {
  CHECK(generate(spec_of(Family::skinny_ladder, 3)).graph.vertex_count() == 9);
  FamilySpec theta = spec_of(Family::theta, 4);
  theta.path_lengths = {4, 4, 4, 4};
  CHECK(generate(theta).graph.vertex_count() == 10);
  for (int k = 1; k <= 5; ++k) {
    auto g = generate(spec_of(Family::twisted_ladder, k)).graph;
    CHECK(g.vertex_count() == 8 * k + 2);
    CHECK(g.edge_count() == 12 * k);
  }
  FamilySpec feral = spec_of(Family::claw_feral, 0);
  feral.c = 2;
  CHECK(generate(feral).graph.vertex_count() == 92);
  feral.family = Family::paw_feral;
  CHECK(generate(feral).graph.vertex_count() == 104);
  Graph k4 = complete_graph(4);
  CHECK(subdivide(k4, 2).vertex_count() == 4 + 2 * 6);
  CHECK(subdivide(k4, 2).edge_count() == 3 * 6);
  CHECK(subdivide(k4, 0) == k4);
}

TEST_CASE("parameters below the definitional minimum are rejected") {
  FamilySpec t = spec_of(Family::theta, 3);
  t.path_lengths = {3, 4, 4};
  CHECK_THROWS_AS(generate(t), Error);
  CHECK_THROWS_AS(generate(spec_of(Family::theta, 1)), Error);
  FamilySpec p = spec_of(Family::prism, 3);
  p.path_lengths = {1};
  CHECK_THROWS_AS(generate(p), Error);
  CHECK_THROWS_AS(generate(spec_of(Family::twisted_ladder, 0)), Error);
}

TEST_CASE("every generated witness verifies and every planted edge breaks it") {
  std::mt19937_64 rng(17);
  std::vector<FamilySpec> specs;
  for (Family f : all_families()) {
    if (f == Family::subdivision || f == Family::claw_feral || f == Family::paw_feral) continue;
    for (int k = 3; k <= 5; ++k) {
      FamilySpec s = spec_of(f, k);
      s.layout_seed = 100 + k;
      specs.push_back(s);
    }
  }
  FamilySpec theta = spec_of(Family::theta, 3);
  theta.path_lengths = {4, 6, 9};
  specs.push_back(theta);
  FamilySpec sub = spec_of(Family::subdivision, 0);
  sub.base_graph = complete_graph(4);
  sub.f = 2;
  specs.push_back(sub);
  for (Family f : {Family::claw_feral, Family::paw_feral})
    for (int c = 1; c <= 2; ++c) {
      FamilySpec s = spec_of(f, 0);
      s.c = c;
      specs.push_back(s);
    }
  for (const auto& s : specs) {
    CAPTURE(family_name(s.family));
    CAPTURE(s.k);
    auto gen = generate(s);
    auto rep = verify_witness(gen.graph, s, gen.witness);
    CHECK(rep.ok);
    // Interval attachments may legitimately gain an edge inside their interval.
    const bool interval = s.family == Family::ladder_theta || s.family == Family::ladder_prism ||
                          s.family == Family::ladder || s.family == Family::almost_skinny_ladder;
    if (interval) continue;
    for (int i = 0; i < 3; ++i) CHECK_FALSE(verify_witness(with_extra_edge(gen.graph, rng), s, gen.witness).ok);
  }
}

TEST_CASE("unknown roles fail loudly") {
  auto s = spec_of(Family::skinny_ladder, 3);
  auto gen = generate(s);
  gen.witness["bogus"] = {0};
  CHECK_THROWS_AS(verify_witness(gen.graph, s, gen.witness), Error);
  gen.witness.erase("bogus");
  gen.witness.erase("S");
  CHECK_FALSE(verify_witness(gen.graph, s, gen.witness).ok);
}

TEST_CASE("random layouts are disjoint intervals with both ends attached") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto l = random_layout(5, seed);
    REQUIRE(l.attachments.size() == 5);
    std::vector<int> owner(l.length, -1);
    for (int i = 0; i < 5; ++i) {
      const auto& a = l.attachments[i];
      REQUIRE_FALSE(a.empty());
      CHECK(std::is_sorted(a.begin(), a.end()));
      for (int p = a.front(); p <= a.back(); ++p) {
        CHECK(owner[p] == -1);
        owner[p] = i;
      }
    }
    CHECK(random_layout(5, seed).attachments == l.attachments);
  }
  auto c = canonical_layout(4);
  CHECK(c.length == 4);
  CHECK(c.attachments == std::vector<Attachment>{{0}, {1}, {2}, {3}});
}

TEST_CASE("twisted ladder block choices are x-y minimal separators") {
  for (int k = 1; k <= 4; ++k) {
    auto gen = generate(spec_of(Family::twisted_ladder, k));
    CHECK(enumerate_closure(gen.graph).size() >= (std::size_t{1} << k));
    Vertex x = gen.witness.at("x")[0], y = gen.witness.at("y")[0];
    for (unsigned choice = 0; choice < (1u << k); ++choice) {
      VertexSet s;
      for (int i = 1; i <= k; ++i) {
        std::string j = (choice >> (i - 1) & 1u) ? "2" : "1";
        s.push_back(gen.witness.at("a_" + std::to_string(i) + "^" + j)[0]);
        s.push_back(gen.witness.at("b_" + std::to_string(i) + "^" + j)[0]);
      }
      CHECK(is_minimal_uv_separator(gen.graph, canonical_set(s), x, y));
    }
  }
}

TEST_CASE("planted faults") {
  set_generator_fault(GeneratorFault::theta_chord);
  auto s = spec_of(Family::theta, 3);
  auto gen = generate(s);
  CHECK_FALSE(verify_witness(gen.graph, s, gen.witness).ok);
  set_generator_fault(GeneratorFault::twisted_ladder_drop_twins);
  auto t = spec_of(Family::twisted_ladder, 2);
  auto tl = generate(t);
  CHECK_FALSE(verify_witness(tl.graph, t, tl.witness).ok);
  set_generator_fault(GeneratorFault::none);
  CHECK(verify_witness(generate(s).graph, s, generate(s).witness).ok);
}

TEST_CASE("uniform_int stays in range and is reproducible") {
  std::mt19937_64 a(9), b(9);
  for (int i = 0; i < 1000; ++i) {
    int x = uniform_int(a, -3, 4);
    CHECK(x >= -3);
    CHECK(x <= 4);
    CHECK(x == uniform_int(b, -3, 4));
  }
  std::mt19937_64 c(1);
  CHECK(uniform_int(c, 5, 5) == 5);
}
