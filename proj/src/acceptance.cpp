#include "sepscope/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "sepscope/canonical.hpp"
#include "sepscope/classifier.hpp"
#include "sepscope/corpus.hpp"
#include "sepscope/detectors.hpp"
#include "sepscope/report.hpp"
#include "sepscope/separators.hpp"

namespace sepscope {

namespace {

// Exact separator counts of twisted_ladder(k), k = 2..5, frozen from the
// oracle (k <= 3) and closure cross-checked against branching.
const std::map<int, std::size_t> kTwistedLadderCounts = {{2, 64}, {3, 210}, {4, 552}, {5, 1286}};

constexpr std::uint64_t kCreatureBudget = 100'000'000;

struct FaultScope {
  GeneratorFault saved = generator_fault();
  explicit FaultScope(GeneratorFault f) { set_generator_fault(f); }
  ~FaultScope() { set_generator_fault(saved); }
};

// Everything a criterion needs that is costly to rebuild.
struct Corpora {
  std::uint64_t seed;
  std::vector<Graph> main_corpus;  // connected n <= 8 and 200 random n <= 13
  std::vector<Graph> small_all;    // all graphs n <= 7
  std::vector<std::vector<VertexSet>> main_seps;
  std::vector<std::vector<VertexSet>> small_seps;
  bool main_ready = false, small_ready = false;

  void need_main() {
    if (main_ready) return;
    main_corpus = graphs_up_to(8, true);
    auto r = random_graphs(200, 2, 13, seed);
    main_corpus.insert(main_corpus.end(), r.begin(), r.end());
    for (const auto& g : main_corpus) main_seps.push_back(enumerate_oracle(g));
    main_ready = true;
  }
  void need_small() {
    if (small_ready) return;
    small_all = graphs_up_to(7, false);
    for (const auto& g : small_all) small_seps.push_back(enumerate_oracle(g));
    small_ready = true;
  }
};

std::string set_str(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string graph_str(const Graph& g) {
  std::string out = "n=" + std::to_string(g.vertex_count()) + " E=";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + "-" + std::to_string(v) + " ";
  return out;
}

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

Outcome oracle_equivalence(Corpora& c) {
  c.need_main();
  Outcome o;
  std::size_t total = 0;
  for (std::size_t i = 0; i < c.main_corpus.size(); ++i) {
    auto closure = enumerate_closure(c.main_corpus[i]);
    total += closure.size();
    if (closure != c.main_seps[i])
      o.fail("closure " + std::to_string(closure.size()) + " vs oracle " + std::to_string(c.main_seps[i].size()) +
             " on " + graph_str(c.main_corpus[i]));
  }
  if (o.passed)
    o.detail = std::to_string(c.main_corpus.size()) + " graphs, " + std::to_string(total) + " separators, all equal";
  return o;
}

Outcome branching_completeness(Corpora& c) {
  c.need_main();
  Outcome o;
  int max_k = 0;
  std::uint64_t max_raw = 0;
  for (std::size_t i = 0; i < c.main_corpus.size(); ++i) {
    const Graph& g = c.main_corpus[i];
    BranchingConfig cfg;
    cfg.k = std::max(1, max_separator_domination(g, c.main_seps[i]));
    max_k = std::max(max_k, cfg.k);
    auto r = enumerate_branching(g, cfg);
    max_raw = std::max<std::uint64_t>(max_raw, r.raw.size());
    if (r.minimal != c.main_seps[i])
      o.fail("branching " + std::to_string(r.minimal.size()) + " vs oracle " + std::to_string(c.main_seps[i].size()) +
             " (k=" + std::to_string(cfg.k) + ") on " + graph_str(g));
  }
  if (o.passed)
    o.detail = std::to_string(c.main_corpus.size()) + " graphs equal; max domination k=" + std::to_string(max_k) +
               ", largest raw output " + std::to_string(max_raw);
  return o;
}

Outcome twisted_ladder_counts() {
  Outcome o;
  std::string counts;
  for (int k = 2; k <= 5; ++k) {
    FamilySpec s;
    s.family = Family::twisted_ladder;
    s.k = k;
    auto gen = generate(s);
    auto rep = verify_witness(gen.graph, s, gen.witness);
    if (!rep.ok) o.fail("k=" + std::to_string(k) + " witness: " + rep.violations.front());
    auto seps = enumerate_closure(gen.graph);
    counts += (counts.empty() ? "" : ", ") + std::to_string(k) + ":" + std::to_string(seps.size());
    if (seps.size() < (std::size_t{1} << k))
      o.fail("k=" + std::to_string(k) + " has " + std::to_string(seps.size()) + " < 2^k separators");
    if (seps.size() != kTwistedLadderCounts.at(k))
      o.fail("k=" + std::to_string(k) + " count " + std::to_string(seps.size()) + " differs from frozen " +
             std::to_string(kTwistedLadderCounts.at(k)));
    // Each choice of one superscript per block gives an x-y minimal separator.
    const Vertex x = gen.witness.at("x")[0], y = gen.witness.at("y")[0];
    for (unsigned choice = 0; choice < (1u << k); ++choice) {
      VertexSet sep;
      for (int i = 1; i <= k; ++i) {
        const std::string j = (choice >> (i - 1) & 1u) ? "2" : "1";
        sep.push_back(gen.witness.at("a_" + std::to_string(i) + "^" + j)[0]);
        sep.push_back(gen.witness.at("b_" + std::to_string(i) + "^" + j)[0]);
      }
      sep = canonical_set(sep);
      if (!is_minimal_uv_separator(gen.graph, sep, x, y)) o.fail("k=" + std::to_string(k) + " choice " + set_str(sep) + " is not an x-y minimal separator");
    }
  }
  if (o.passed) o.detail = "counts " + counts + "; all 2^k block choices are x-y minimal separators";
  return o;
}

std::string role_list(const Generated& gen, const std::vector<Vertex>& vs) {
  std::map<Vertex, std::string> name;
  for (const auto& [role, members] : gen.witness)
    if (members.size() == 1) name[members[0]] = role;
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + (name.count(v) ? name[v] : std::to_string(v));
  return out;
}

Outcome twisted_ladder_creatures() {
  Outcome o;
  std::string summary;
  for (int k = 2; k <= 3; ++k) {
    FamilySpec s;
    s.family = Family::twisted_ladder;
    s.k = k;
    auto gen = generate(s);
    auto v = find_creature(gen.graph, 3, kCreatureBudget);
    summary += (summary.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) + " " + status_name(v.status) +
               " (" + std::to_string(v.nodes_explored) + " nodes)";
    if (v.status == SearchStatus::found) {
      const auto& w = *v.witness;
      const bool valid = validate_creature(gen.graph, w);
      o.fail("k=" + std::to_string(k) + " has a " + (valid ? "validated" : "INVALID") + " 3-creature A=[" +
             role_list(gen, w.a_side) + "] B=[" + role_list(gen, w.b_side) + "] X=[" + role_list(gen, w.x_row) +
             "] Y=[" + role_list(gen, w.y_row) + "]");
    } else if (v.status == SearchStatus::unknown_budget) {
      o.fail("k=" + std::to_string(k) + " search exhausted the budget");
    }
  }
  if (o.passed) o.detail = summary;
  return o;
}

Outcome family_counting_bounds() {
  Outcome o;
  std::string summary;
  auto run = [&](FamilySpec s, std::size_t bound, const std::string& label, int vertex_limit) {
    auto gen = generate(s);
    auto rep = verify_witness(gen.graph, s, gen.witness);
    if (!rep.ok) o.fail(label + " witness: " + rep.violations.front());
    auto count = enumerate_closure(gen.graph).size();
    summary += (summary.empty() ? "" : ", ") + label + ":" + std::to_string(count);
    if (count < bound) o.fail(label + " has " + std::to_string(count) + " < " + std::to_string(bound) + " separators");
    if (vertex_limit > 0 && gen.graph.vertex_count() >= vertex_limit)
      o.fail(label + " has " + std::to_string(gen.graph.vertex_count()) + " >= " + std::to_string(vertex_limit) +
             " vertices");
  };
  for (Family f : {Family::theta, Family::prism, Family::pyramid})
    for (int k = 3; k <= 5; ++k) {
      FamilySpec s;
      s.family = f;
      s.k = k;
      run(s, std::size_t{1} << (k - 2), family_name(f) + "(" + std::to_string(k) + ")", 0);
    }
  const int h = 6, c = 2;
  for (Family f : {Family::claw_feral, Family::paw_feral}) {
    FamilySpec s;
    s.family = f;
    s.c = c;
    s.arm_length = h;
    run(s, std::size_t{1} << (1 << c), family_name(f) + "(c=2)", 3 * h * (1 << (c + 1)));
  }
  if (o.passed) o.detail = summary;
  return o;
}

Outcome close_separators(Corpora& c) {
  c.need_small();
  Outcome o;
  std::uint64_t pairs = 0;
  for (std::size_t gi = 0; gi < c.small_all.size(); ++gi) {
    const Graph& g = c.small_all[gi];
    const auto& seps = c.small_seps[gi];
    const int n = g.vertex_count();
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    auto comps = components(g, all);
    std::vector<int> comp_of(n);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (Vertex v : comps[i]) comp_of[v] = static_cast<int>(i);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        if (u == v || g.adjacent(u, v) || comp_of[u] != comp_of[v]) continue;
        ++pairs;
        auto rec = close_separator(g, u, v);
        const VertexSet& s = rec.separator;
        const auto nv = neighborhood(g, std::vector<Vertex>{v}, false);
        const std::string where = " (u=" + std::to_string(u) + ", v=" + std::to_string(v) + ") on " + graph_str(g);
        if (!std::includes(nv.begin(), nv.end(), s.begin(), s.end())) o.fail("close separator leaves N(v)" + where);
        if (!is_minimal_uv_separator(g, s, u, v)) o.fail("close separator is not a minimal u-v separator" + where);
        int inside = 0;
        for (const auto& t : seps) {
          if (!is_minimal_uv_separator(g, t, u, v)) continue;
          if (std::includes(nv.begin(), nv.end(), t.begin(), t.end())) ++inside;
          auto rt = make_separator_record(g, t);
          if (!separator_leq(g, rt, rec, u, v)) o.fail("close separator not maximal against " + set_str(t) + where);
        }
        if (inside != 1) o.fail(std::to_string(inside) + " minimal u-v separators inside N(v)" + where);
      }
  }
  if (o.passed)
    o.detail = std::to_string(c.small_all.size()) + " graphs, " + std::to_string(pairs) + " pairs: inside N(v), unique, maximal";
  return o;
}

Outcome skinny_ladder_domination() {
  Outcome o;
  std::string summary;
  for (int k = 2; k <= 5; ++k) {
    FamilySpec s;
    s.family = Family::skinny_ladder;
    s.k = k;
    auto gen = generate(s);
    VertexSet all(gen.graph.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    auto d = domination_number(gen.graph, canonical_set(gen.witness.at("S")), all);
    summary += (summary.empty() ? "" : ", ") + std::string("gamma(") + std::to_string(k) + ")=" + std::to_string(d.size);
    if (d.size != k) o.fail("k=" + std::to_string(k) + " domination " + std::to_string(d.size));
    if (k <= 3) {
      auto v = find_creature(gen.graph, 5, kCreatureBudget);
      if (v.status != SearchStatus::absent_exhaustive)
        o.fail("k=" + std::to_string(k) + " 5-creature search: " + status_name(v.status));
    }
  }
  if (o.passed) o.detail = summary + "; no 5-creature for k=2,3";
  return o;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Outcome trace_vc_bound(Corpora& c) {
  c.need_small();
  Outcome o;
  int max_dim = 0;
  std::size_t max_traces = 0;
  for (std::size_t gi = 0; gi < c.small_all.size(); ++gi) {
    const Graph& g = c.small_all[gi];
    const int n = g.vertex_count();
    const int kstar = max_creature_order(g, std::max(0, (n - 2) / 2)) + 1;
    for (Vertex v = 0; v < n; ++v) {
      auto fam = trace_family(g, v, c.small_seps[gi]);
      auto sh = shattered_set_max(fam);
      max_dim = std::max(max_dim, sh.dimension);
      max_traces = std::max(max_traces, fam.traces.size());
      if (fam.traces.size() > ipow(n, kstar + 1))
        o.fail("trace family of " + std::to_string(v) + " has " + std::to_string(fam.traces.size()) + " > n^(k*+1) on " +
               graph_str(g));
      if (!sh.exact || sh.dimension > kstar)
        o.fail("shattered set " + std::to_string(sh.dimension) + " > k*=" + std::to_string(kstar) + " on " + graph_str(g));
    }
  }
  if (o.passed)
    o.detail = std::to_string(c.small_all.size()) + " graphs; largest trace family " + std::to_string(max_traces) +
               ", largest shattered set " + std::to_string(max_dim);
  return o;
}

Outcome creature_implies_separators(Corpora& c) {
  c.need_main();
  Outcome o;
  std::map<int, int> by_order;
  for (std::size_t i = 0; i < c.main_corpus.size(); ++i) {
    const Graph& g = c.main_corpus[i];
    const int k = max_creature_order(g, std::max(0, (g.vertex_count() - 2) / 2));
    ++by_order[k];
    if (k >= 1 && c.main_seps[i].size() < (std::size_t{1} << k))
      o.fail("creature order " + std::to_string(k) + " but " + std::to_string(c.main_seps[i].size()) +
             " separators on " + graph_str(g));
  }
  if (o.passed) {
    o.detail = "graphs by max creature order:";
    for (auto [k, count] : by_order) o.detail += " " + std::to_string(k) + ":" + std::to_string(count);
  }
  return o;
}

// Quotient of g by disjoint connected branch sets, built independently of
// validate_minor.
std::optional<Graph> quotient(const Graph& g, const std::vector<VertexSet>& sets) {
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty() || !is_connected_set(g, g.bits_of(sets[i]))) return std::nullopt;
    for (Vertex v : sets[i]) {
      if (owner[v] != -1) return std::nullopt;
      owner[v] = static_cast<int>(i);
    }
  }
  std::set<Edge> e;
  for (auto [u, v] : g.edges())
    if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v])
      e.insert({std::min(owner[u], owner[v]), std::max(owner[u], owner[v])});
  std::vector<Edge> list(e.begin(), e.end());
  return Graph::from_edges(static_cast<int>(sets.size()), list);
}

Outcome extraction_validity(std::uint64_t seed) {
  Outcome o;
  int checked = 0;
  for (int k = 2; k <= 3; ++k) {
    FamilySpec ls;
    ls.family = Family::skinny_ladder;
    ls.k = k;
    const Graph target = generate(ls).graph;
    for (int i = 0; i < 50; ++i) {
      FamilySpec s;
      s.family = Family::almost_skinny_ladder;
      s.k = k * k;
      s.layout_seed = seed * 1000 + static_cast<std::uint64_t>(k * 100 + i);
      auto gen = generate(s);
      auto rep = verify_witness(gen.graph, s, gen.witness);
      if (!rep.ok) {
        o.fail("almost-skinny instance invalid: " + rep.violations.front());
        continue;
      }
      const std::string where = " (k=" + std::to_string(k) + ", instance " + std::to_string(i) + ")";
      MinorWitness w;
      try {
        w = extract_skinny_ladder(gen.graph, gen.witness, k);
      } catch (const Error& e) {
        o.fail(std::string("extraction threw: ") + e.what() + where);
        continue;
      }
      auto q = quotient(gen.graph, w.branch_sets);
      if (!q) o.fail("branch sets not disjoint and connected" + where);
      else if (!are_isomorphic(*q, target)) o.fail("contraction is not the skinny ladder" + where);
      if (!validate_minor(gen.graph, target, w)) o.fail("validate_minor rejects the witness" + where);
      ++checked;
    }
  }
  if (o.passed) o.detail = std::to_string(checked) + " instances contract to skinny_ladder(k)";
  return o;
}

Outcome classifier_spot_checks() {
  Outcome o;
  auto run = [](std::vector<Graph> members) { return classify(make_forbidden_family(std::move(members))); };
  auto twice = [&](std::vector<Graph> members, const std::string& label) {
    auto a = run(members), b = run(members);
    if (verdict_json(a).dump() != verdict_json(b).dump()) o.fail(label + " verdict differs between runs");
    return a;
  };
  auto p3 = twice({path_graph(3)}, "{P3}");
  if (p3.status != ClassStatus::strongly_quasi_tame) o.fail("{P3} -> " + class_status_name(p3.status));
  auto k3 = twice({complete_graph(3)}, "{K3}");
  if (k3.status != ClassStatus::feral) {
    o.fail("{K3} -> " + class_status_name(k3.status));
  } else {
    const auto& ev = k3.evidence.front();
    if (ev.type != FamilyType::theta || !ev.avoiding) {
      o.fail("{K3} certificate is " + family_type_name(ev.type) + ", not a theta");
    } else {
      auto spec = *ev.avoiding_spec;
      auto rep = verify_witness(ev.avoiding->graph, spec, ev.avoiding->witness);
      if (!rep.ok) o.fail("{K3} theta certificate invalid: " + rep.violations.front());
      auto s = find_induced_subgraph(ev.avoiding->graph, complete_graph(3));
      if (s.status != SearchStatus::absent_exhaustive) o.fail("{K3} certificate: triangle search " + status_name(s.status));
    }
  }
  auto tame = twice({complete_graph(3), star_graph(3)}, "{K3, K_1,3}");
  if (tame.status != ClassStatus::tame) o.fail("{K3, K_1,3} -> " + class_status_name(tame.status));
  if (o.passed)
    o.detail = "{P3} strongly_quasi_tame k=" + std::to_string(p3.k_certificate) + "; {K3} feral via triangle-free theta(k=" +
               std::to_string(k3.k_certificate) + "); {K3, K_1,3} tame k=" + std::to_string(tame.k_certificate) +
               "; repeat runs identical";
  return o;
}

Outcome reduction_soundness(std::uint64_t seed) {
  Outcome o;
  const int h = 6;
  std::mt19937_64 rng(seed ^ 0x5eed5eedull);
  int reduced_total = 0;
  for (int trial = 0; trial < 100; ++trial) {
    // Base graph with one or two edges replaced by long induced paths.
    const int base_n = uniform_int(rng, 3, 7);
    Graph base = random_graph(base_n, 50, rng);
    std::vector<Edge> e = base.edges();
    int n = base_n;
    const int planted = uniform_int(rng, 1, 2);
    for (int p = 0; p < planted; ++p) {
      Vertex u = uniform_int(rng, 0, base_n - 1), v = uniform_int(rng, 0, base_n - 1);
      if (u == v) v = (u + 1) % base_n;
      e.erase(std::remove(e.begin(), e.end(), Edge{std::min(u, v), std::max(u, v)}), e.end());
      const int len = uniform_int(rng, 5 * h, 5 * h + 15);
      Vertex prev = u;
      for (int i = 0; i < len; ++i) {
        e.emplace_back(prev, n);
        prev = n++;
      }
      e.emplace_back(prev, v);
    }
    std::set<Edge> uniq;
    for (auto [a, b] : e) uniq.insert({std::min(a, b), std::max(a, b)});
    std::vector<Edge> list(uniq.begin(), uniq.end());
    const Graph g = Graph::from_edges(n, list);
    // Forbidden set: random graphs up to h vertices absent from g, one of size h.
    std::vector<Graph> members;
    for (int attempt = 0; attempt < 200 && members.size() < 3; ++attempt) {
      const int size = members.empty() ? h : uniform_int(rng, 4, h);
      Graph cand = random_graph(size, uniform_int(rng, 20, 80), rng);
      if (find_induced_subgraph(g, cand).status == SearchStatus::absent_exhaustive) members.push_back(cand);
    }
    if (members.empty() || members.front().vertex_count() != h) {
      o.fail("trial " + std::to_string(trial) + ": no avoided 6-vertex graph found");
      continue;
    }
    auto hh = make_forbidden_family(members);
    const Graph r = reduce_degree_two_paths(g, h);
    if (r.vertex_count() < g.vertex_count()) ++reduced_total;
    for (const auto& m : hh.members) {
      auto s = find_induced_subgraph(r, m);
      if (s.status != SearchStatus::absent_exhaustive)
        o.fail("trial " + std::to_string(trial) + ": reduced graph " + status_name(s.status) + " for " + graph_str(m));
    }
  }
  if (reduced_total < 100) o.fail("only " + std::to_string(reduced_total) + " of 100 graphs were reduced");
  if (o.passed) o.detail = "100 graphs reduced; every forbidden graph still absent";
  return o;
}

}  // namespace

const std::vector<CriterionInfo>& acceptance_criteria() {
  static const std::vector<CriterionInfo> all = {
      {1, "oracle-equivalence", "separators", "exact set equality"},
      {2, "branching-completeness", "separators", "exact set equality"},
      {3, "twisted-ladder-counts", "families", "count >= 2^k and equal to frozen counts"},
      {4, "twisted-ladder-creature-free", "detectors", "exhaustive absence, budget 1e8 nodes"},
      {5, "family-counting-bounds", "families", "count >= 2^(k-2); feral count >= 16, n < 144"},
      {6, "close-separators", "separators", "exact"},
      {7, "skinny-ladder-domination", "detectors", "domination = k exactly; exhaustive absence"},
      {8, "trace-vc-bound", "separators", "exact inequality"},
      {9, "creature-implies-separators", "detectors", "count >= 2^k"},
      {10, "extraction-validity", "detectors", "exact isomorphism"},
      {11, "classifier-spot-checks", "classifier", "exact status, identical repeat runs"},
      {12, "reduction-soundness", "classifier", "exhaustive absence"},
  };
  return all;
}

bool criterion_selected(const CriterionInfo& info, const std::string& filter) {
  return filter.empty() || filter == "all" || filter == info.group || filter == info.key ||
         filter == std::to_string(info.id);
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  FaultScope fault(options.fault);
  Corpora corpora{options.seed, {}, {}, {}, {}, false, false};
  std::vector<CriterionResult> out;
  for (const auto& info : acceptance_criteria()) {
    if (!criterion_selected(info, options.filter)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      switch (info.id) {
        case 1: o = oracle_equivalence(corpora); break;
        case 2: o = branching_completeness(corpora); break;
        case 3: o = twisted_ladder_counts(); break;
        case 4: o = twisted_ladder_creatures(); break;
        case 5: o = family_counting_bounds(); break;
        case 6: o = close_separators(corpora); break;
        case 7: o = skinny_ladder_domination(); break;
        case 8: o = trace_vc_bound(corpora); break;
        case 9: o = creature_implies_separators(corpora); break;
        case 10: o = extraction_validity(options.seed); break;
        case 11: o = classifier_spot_checks(); break;
        case 12: o = reduction_soundness(options.seed); break;
      }
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("error: ") + e.what();
    }
    CriterionResult r{info, o.passed, o.detail,
                      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s %2d %s", r.passed ? "PASS" : "FAIL", r.info.id, r.info.key.c_str());
  return std::string(head) + " [" + r.info.tolerance + "] " + r.detail;
}

}  // namespace sepscope
