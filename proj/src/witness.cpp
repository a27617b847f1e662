// Clause checks for generated family witnesses.

#include <algorithm>
#include <functional>
#include <set>

#include "sepscope/families.hpp"

namespace sepscope {
namespace {

std::string idx(const std::string& base, int i) { return base + "_" + std::to_string(i); }

class Checker {
 public:
  Checker(const Graph& g, const StructureWitness& w) : g_(g), w_(w) {
    for (const auto& [name, verts] : w)
      for (Vertex v : verts)
        if (!g.valid_vertex(v)) throw Error("role " + name + " references vertex " + std::to_string(v) + " out of range");
  }

  bool has(const std::string& name) const { return w_.count(name) > 0; }

  /// Role lookup; a missing role is a violation and yields an empty list.
  const std::vector<Vertex>& role(const std::string& name) {
    used_.insert(name);
    auto it = w_.find(name);
    if (it == w_.end()) {
      fail("missing role " + name);
      return empty_;
    }
    return it->second;
  }
  Vertex single(const std::string& name) {
    const auto& r = role(name);
    if (r.size() != 1) {
      if (!r.empty()) fail("role " + name + " must be a single vertex");
      return -1;
    }
    return r[0];
  }

  void fail(const std::string& what) {
    if (std::find(report_.violations.begin(), report_.violations.end(), what) == report_.violations.end())
      report_.violations.push_back(what);
    report_.ok = false;
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }

  void explain(Vertex u, Vertex v) {
    if (u >= 0 && v >= 0) explained_.insert({std::min(u, v), std::max(u, v)});
  }
  void explain_between(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex u : a)
      for (Vertex v : b)
        if (u != v && g_.adjacent(u, v)) explain(u, v);
  }

  /// Induced path in the listed order; explains its edges.
  void induced_path(const std::string& name, const std::vector<Vertex>& p) {
    if (std::set<Vertex>(p.begin(), p.end()).size() != p.size()) fail(name + " repeats a vertex");
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        bool adj = g_.adjacent(p[i], p[j]);
        if (j == i + 1) {
          if (!adj) fail(name + " is not a path");
          explain(p[i], p[j]);
        } else if (adj) {
          fail(name + " is not induced");
        }
      }
  }
  void clique(const std::string& name, const std::vector<Vertex>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (!g_.adjacent(c[i], c[j])) fail(name + " is not a clique");
        explain(c[i], c[j]);
      }
  }
  void anticomplete(const std::string& an, const std::vector<Vertex>& a, const std::string& bn,
                    const std::vector<Vertex>& b) {
    if (!is_anticomplete(g_, canonical_set(a), canonical_set(b))) fail(an + " anti-complete " + bn);
  }
  void disjoint(const std::string& an, const std::vector<Vertex>& a, const std::string& bn,
                const std::vector<Vertex>& b) {
    for (Vertex v : a)
      if (std::find(b.begin(), b.end(), v) != b.end()) {
        fail(an + " disjoint " + bn);
        return;
      }
  }
  bool has_neighbor_in(Vertex v, const std::vector<Vertex>& s) const {
    return std::any_of(s.begin(), s.end(), [&](Vertex u) { return g_.adjacent(u, v); });
  }
  void endpoints(const std::string& name, const std::vector<Vertex>& p, Vertex a, Vertex b) {
    if (p.empty() || p.front() != a || p.back() != b) fail(name + " endpoints");
  }
  void min_length(const std::string& name, const std::vector<Vertex>& p, int len) {
    if (static_cast<int>(p.size()) < len) fail(name + " has length at least " + std::to_string(len));
  }

  /// For every attached vertex: its neighbours span a subpath of the
  /// backbone that no other attached vertex sees.
  void interval_clause(const std::string& bn, const std::vector<Vertex>& backbone, const std::vector<Vertex>& attached) {
    std::vector<int> pos(g_.vertex_count(), -1);
    for (std::size_t i = 0; i < backbone.size(); ++i) pos[backbone[i]] = static_cast<int>(i);
    for (Vertex x : attached) {
      int lo = -1, hi = -1;
      for (Vertex w : g_.neighbors(x))
        if (pos[w] >= 0) {
          lo = lo < 0 ? pos[w] : std::min(lo, pos[w]);
          hi = std::max(hi, pos[w]);
          explain(x, w);
        }
      if (lo < 0) {
        fail("attached vertex " + std::to_string(x) + " has a neighbour in " + bn);
        continue;
      }
      for (Vertex y : attached) {
        if (y == x) continue;
        for (int p = lo; p <= hi; ++p)
          if (g_.adjacent(y, backbone[p])) fail(bn + " attachment intervals are private");
      }
    }
  }

  void covers(const std::vector<Vertex>& all) {
    std::set<Vertex> s(all.begin(), all.end());
    if (static_cast<int>(s.size()) != g_.vertex_count()) fail("roles cover V");
  }

  void no_other_edges() {
    for (auto e : g_.edges())
      if (!explained_.count(e)) {
        fail("no other edges (" + std::to_string(e.first) + "-" + std::to_string(e.second) + ")");
        return;
      }
  }

  /// Roles that a failed check never reached are not reported as unknown.
  WitnessReport finish() {
    if (!report_.ok) return report_;
    for (const auto& [name, verts] : w_)
      if (!used_.count(name)) throw Error("unknown role name " + name);
    return report_;
  }

  const Graph& graph() const { return g_; }

 private:
  const Graph& g_;
  const StructureWitness& w_;
  std::set<std::string> used_;
  std::set<Edge> explained_;
  WitnessReport report_;
  const std::vector<Vertex> empty_;
};

std::vector<Vertex> interior(const std::vector<Vertex>& p) {
  if (p.size() <= 2) return {};
  return {p.begin() + 1, p.end() - 1};
}
std::vector<Vertex> minus_front(const std::vector<Vertex>& p) {
  if (p.empty()) return {};
  return {p.begin() + 1, p.end()};
}
std::vector<Vertex> minus_back(const std::vector<Vertex>& p) {
  if (p.empty()) return {};
  return {p.begin(), p.end() - 1};
}
std::vector<Vertex> joined(std::initializer_list<std::vector<Vertex>> parts) {
  std::vector<Vertex> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

void pairwise(int k, const std::function<void(int, int)>& fn) {
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) fn(i, j);
}

void check_theta(Checker& c, const FamilySpec& s) {
  Vertex a = c.single("a"), b = c.single("b");
  std::vector<Vertex> all{a, b};
  std::vector<std::vector<Vertex>> P(s.k + 1);
  for (int i = 1; i <= s.k; ++i) {
    P[i] = c.role(idx("P", i));
    c.induced_path(idx("P", i), P[i]);
    c.endpoints(idx("P", i), P[i], a, b);
    c.min_length(idx("P", i), P[i], 4);
    all = joined({all, interior(P[i])});
  }
  pairwise(s.k, [&](int i, int j) {
    c.disjoint(idx("P", i), interior(P[i]), idx("P", j), interior(P[j]));
    c.anticomplete(idx("P", i), interior(P[i]), idx("P", j), interior(P[j]));
  });
  c.covers(all);
  c.no_other_edges();
}

void check_prism(Checker& c, const FamilySpec& s) {
  auto A = c.role("A"), B = c.role("B");
  c.clique("A", A);
  c.clique("B", B);
  c.disjoint("A", A, "B", B);
  std::vector<Vertex> all = joined({A, B});
  std::vector<std::vector<Vertex>> P(s.k + 1);
  std::vector<Vertex> a(s.k + 1), b(s.k + 1);
  for (int i = 1; i <= s.k; ++i) {
    a[i] = c.single(idx("a", i));
    b[i] = c.single(idx("b", i));
    c.check(i - 1 < static_cast<int>(A.size()) && A[i - 1] == a[i], idx("a", i) + " in A");
    c.check(i - 1 < static_cast<int>(B.size()) && B[i - 1] == b[i], idx("b", i) + " in B");
    P[i] = c.role(idx("P", i));
    c.induced_path(idx("P", i), P[i]);
    c.endpoints(idx("P", i), P[i], a[i], b[i]);
    c.min_length(idx("P", i), P[i], 2);
    all = joined({all, interior(P[i])});
  }
  for (int i = 1; i <= s.k; ++i)
    for (int j = 1; j <= s.k; ++j) {
      bool want = i == j && P[i].size() == 2;
      if (a[i] >= 0 && b[j] >= 0 && c.graph().adjacent(a[i], b[j]) != want)
        c.fail("a_i b_j adjacent iff i = j and P_i has length 2");
    }
  pairwise(s.k, [&](int i, int j) {
    c.anticomplete(idx("P", i) + " interior", interior(P[i]), idx("P", j) + " interior", interior(P[j]));
  });
  c.covers(all);
  c.no_other_edges();
}

void check_pyramid(Checker& c, const FamilySpec& s) {
  Vertex a = c.single("a");
  auto B = c.role("B");
  c.clique("B", B);
  c.anticomplete("a", {a}, "B", B);
  std::vector<Vertex> all = joined({{a}, B});
  std::vector<std::vector<Vertex>> P(s.k + 1);
  for (int i = 1; i <= s.k; ++i) {
    Vertex b = c.single(idx("b", i));
    c.check(i - 1 < static_cast<int>(B.size()) && B[i - 1] == b, idx("b", i) + " in B");
    P[i] = c.role(idx("P", i));
    c.induced_path(idx("P", i), P[i]);
    c.endpoints(idx("P", i), P[i], a, b);
    c.min_length(idx("P", i), P[i], 3);
    all = joined({all, interior(P[i])});
  }
  pairwise(s.k, [&](int i, int j) {
    c.anticomplete(idx("P", i) + " interior", interior(P[i]), idx("P", j) + " interior", interior(P[j]));
  });
  c.covers(all);
  c.no_other_edges();
}

// Shared by ladder_theta (single b) and ladder_prism (clique of b_i).
void check_ladder_half(Checker& c, const FamilySpec& s, bool prism) {
  auto L = c.role("L");
  c.induced_path("L", L);
  std::vector<Vertex> bs;
  if (prism) {
    bs = c.role("B");
    c.clique("B", bs);
  } else {
    bs = {c.single("b")};
  }
  c.anticomplete("L", L, prism ? "B" : "b", bs);
  std::vector<Vertex> all = joined({L, bs});
  std::vector<std::vector<Vertex>> P(s.k + 1);
  std::vector<Vertex> attached;
  for (int i = 1; i <= s.k; ++i) {
    Vertex a = c.single(idx("a", i));
    Vertex b = prism ? c.single(idx("b", i)) : bs[0];
    if (prism) c.check(i - 1 < static_cast<int>(bs.size()) && bs[i - 1] == b, idx("b", i) + " in B");
    P[i] = c.role(idx("P", i));
    c.induced_path(idx("P", i), P[i]);
    c.endpoints(idx("P", i), P[i], a, b);
    c.min_length(idx("P", i), P[i], prism ? 2 : 3);
    c.disjoint(idx("P", i), P[i], "L", L);
    c.anticomplete(idx("P", i) + " - a_i", minus_front(P[i]), "L", L);
    attached.push_back(a);
    all = joined({all, minus_back(P[i])});
  }
  pairwise(s.k, [&](int i, int j) {
    c.disjoint(idx("P", i), minus_back(P[i]), idx("P", j), minus_back(P[j]));
    c.anticomplete(idx("P", i) + " - b_i", minus_back(P[i]), idx("P", j) + " - b_j", minus_back(P[j]));
  });
  c.interval_clause("L", L, attached);
  c.covers(all);
  c.no_other_edges();
}

void check_ladder(Checker& c, const FamilySpec& s) {
  auto L = c.role("L"), R = c.role("R");
  c.induced_path("L", L);
  c.induced_path("R", R);
  c.disjoint("L", L, "R", R);
  c.anticomplete("L", L, "R", R);
  std::vector<Vertex> all = joined({L, R});
  std::vector<std::vector<Vertex>> P(s.k + 1);
  std::vector<Vertex> as, bs;
  for (int i = 1; i <= s.k; ++i) {
    Vertex a = c.single(idx("a", i)), b = c.single(idx("b", i));
    c.check(a != b, idx("a", i) + " distinct from " + idx("b", i));
    P[i] = c.role(idx("P", i));
    c.induced_path(idx("P", i), P[i]);
    c.endpoints(idx("P", i), P[i], a, b);
    c.min_length(idx("P", i), P[i], 2);
    c.disjoint(idx("P", i), P[i], "L u R", all);
    c.anticomplete(idx("P", i) + " - a_i", minus_front(P[i]), "L", L);
    c.anticomplete(idx("P", i) + " - b_i", minus_back(P[i]), "R", R);
    as.push_back(a);
    bs.push_back(b);
  }
  for (int i = 1; i <= s.k; ++i) all = joined({all, P[i]});
  pairwise(s.k, [&](int i, int j) {
    c.disjoint(idx("P", i), P[i], idx("P", j), P[j]);
    c.anticomplete(idx("P", i), P[i], idx("P", j), P[j]);
  });
  c.interval_clause("L", L, as);
  c.interval_clause("R", R, bs);
  c.covers(all);
  c.no_other_edges();
}

int arm_of(const FamilySpec& s, int fallback) { return s.arm_length > 0 ? s.arm_length : fallback; }

std::vector<Vertex> check_long_claw(Checker& c, const std::string& suffix, int arm) {
  Vertex v = c.single("v" + suffix);
  std::vector<Vertex> all{v};
  std::vector<std::vector<Vertex>> P(4);
  for (int j = 1; j <= 3; ++j) {
    std::string name = "P" + suffix + "_" + std::to_string(j);
    P[j] = c.role(name);
    c.induced_path(name, P[j]);
    c.check(!P[j].empty() && P[j].front() == v, name + " starts at the centre");
    c.check(static_cast<int>(P[j].size()) == arm, name + " has arm length " + std::to_string(arm));
    all = joined({all, minus_front(P[j])});
  }
  pairwise(3, [&](int i, int j) {
    c.disjoint("P" + suffix + "_" + std::to_string(i), minus_front(P[i]), "P" + suffix + "_" + std::to_string(j),
               minus_front(P[j]));
    c.anticomplete("P" + suffix + "_" + std::to_string(i) + " - v", minus_front(P[i]),
                   "P" + suffix + "_" + std::to_string(j) + " - v", minus_front(P[j]));
  });
  return all;
}

std::vector<Vertex> check_long_paw(Checker& c, const std::string& suffix, int arm) {
  std::vector<Vertex> centers, all;
  std::vector<std::vector<Vertex>> P(4);
  for (int j = 1; j <= 3; ++j) centers.push_back(c.single("v" + suffix + "_" + std::to_string(j)));
  c.clique("triangle", centers);
  for (int j = 1; j <= 3; ++j) {
    std::string name = "P" + suffix + "_" + std::to_string(j);
    P[j] = c.role(name);
    c.induced_path(name, P[j]);
    c.check(!P[j].empty() && P[j].front() == centers[j - 1], name + " starts at its triangle vertex");
    c.check(static_cast<int>(P[j].size()) == arm, name + " has arm length " + std::to_string(arm));
    all = joined({all, P[j]});
  }
  pairwise(3, [&](int i, int j) {
    c.disjoint("P" + suffix + "_" + std::to_string(i), P[i], "P" + suffix + "_" + std::to_string(j), P[j]);
    c.anticomplete("P" + suffix + "_" + std::to_string(i) + " - v_i", minus_front(P[i]),
                   "P" + suffix + "_" + std::to_string(j) + " - v_j", minus_front(P[j]));
  });
  return all;
}

template <bool Paw>
void check_copies(Checker& c, const FamilySpec& s) {
  const int arm = arm_of(s, s.k);
  std::vector<std::vector<Vertex>> copies(s.k + 1);
  std::vector<Vertex> all;
  for (int i = 1; i <= s.k; ++i) {
    std::string suffix = "_" + std::to_string(i);
    auto members = Paw ? check_long_paw(c, suffix, arm) : check_long_claw(c, suffix, arm);
    copies[i] = c.role(idx("copy", i));
    c.check(canonical_set(members) == canonical_set(copies[i]), idx("copy", i) + " is one long " + (Paw ? "paw" : "claw"));
    all = joined({all, copies[i]});
  }
  pairwise(s.k, [&](int i, int j) {
    c.disjoint(idx("copy", i), copies[i], idx("copy", j), copies[j]);
    c.anticomplete(idx("copy", i), copies[i], idx("copy", j), copies[j]);
  });
  c.covers(all);
  c.no_other_edges();
}

void check_skinny(Checker& c, const FamilySpec& s) {
  auto L = c.role("L"), S = c.role("S"), R = c.role("R");
  c.check(static_cast<int>(L.size()) == s.k && static_cast<int>(S.size()) == s.k && static_cast<int>(R.size()) == s.k,
          "L, S, R have k vertices each");
  c.induced_path("L", L);
  c.induced_path("R", R);
  c.disjoint("L", L, "R", R);
  c.disjoint("S", S, "L u R", joined({L, R}));
  c.anticomplete("L", L, "R", R);
  for (int i = 1; i <= s.k && i <= static_cast<int>(S.size()); ++i) {
    Vertex l = c.single(idx("l", i)), sv = c.single(idx("s", i)), r = c.single(idx("r", i));
    c.check(i <= static_cast<int>(L.size()) && L[i - 1] == l, idx("l", i) + " is the " + std::to_string(i) + "th vertex of L");
    c.check(S[i - 1] == sv, idx("s", i) + " listed in S");
    c.check(i <= static_cast<int>(R.size()) && R[i - 1] == r, idx("r", i) + " is the " + std::to_string(i) + "th vertex of R");
    if (l < 0 || sv < 0 || r < 0) continue;
    c.check(c.graph().adjacent(l, sv), "s_i adjacent l_i");
    c.check(c.graph().adjacent(sv, r), "s_i adjacent r_i");
    c.explain(l, sv);
    c.explain(sv, r);
  }
  c.covers(joined({L, S, R}));
  c.no_other_edges();
}

void check_almost_skinny(Checker& c, const FamilySpec& s) {
  auto L = c.role("L"), S = c.role("S"), R = c.role("R");
  c.check(static_cast<int>(S.size()) == s.k, "|S| = k");
  c.induced_path("L", L);
  c.induced_path("R", R);
  c.disjoint("L", L, "R", R);
  c.disjoint("S", S, "L u R", joined({L, R}));
  c.anticomplete("L", L, "R", R);
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j)
      if (c.graph().adjacent(S[i], S[j])) c.fail("S independent");
  for (int i = 1; i <= static_cast<int>(S.size()); ++i) c.check(c.single(idx("s", i)) == S[i - 1], idx("s", i) + " listed in S");
  for (Vertex v : S) {
    c.check(c.has_neighbor_in(v, L), "every s has a neighbour in L");
    c.check(c.has_neighbor_in(v, R), "every s has a neighbour in R");
  }
  c.interval_clause("L", L, S);
  c.interval_clause("R", R, S);
  c.covers(joined({L, S, R}));
  c.no_other_edges();
}

std::string sup(const std::string& base, int i, const std::string& s) { return base + "_" + std::to_string(i) + "^" + s; }

void check_twisted(Checker& c, const FamilySpec& s) {
  const int k = s.k;
  const Graph& g = c.graph();
  std::vector<Vertex> cl(k + 2), cr(k + 2), a1(k + 1), a2(k + 1), b1(k + 1), b2(k + 1), pl(k + 1), pr(k + 1);
  for (int i = 1; i <= k + 1; ++i) {
    cl[i] = c.single(sup("c", i, "L"));
    cr[i] = c.single(sup("c", i, "R"));
  }
  for (int i = 1; i <= k; ++i) {
    a1[i] = c.single(sup("a", i, "1"));
    a2[i] = c.single(sup("a", i, "2"));
    b1[i] = c.single(sup("b", i, "1"));
    b2[i] = c.single(sup("b", i, "2"));
    pl[i] = c.single(sup("p", i, "L"));
    pr[i] = c.single(sup("p", i, "R"));
  }
  auto L = c.role("L"), R = c.role("R"), S = c.role("S");
  c.check(c.single("x") == cl[1], "x = c_1^L");
  c.check(c.single("y") == cr[1], "y = c_1^R");
  c.induced_path("L", L);
  c.induced_path("R", R);
  c.anticomplete("L", L, "R", R);
  c.disjoint("S", S, "L u R", joined({L, R}));
  std::vector<Vertex> expect_l, expect_r, expect_s;
  for (int i = 1; i <= k; ++i) {
    expect_l.insert(expect_l.end(), {cl[i], b2[i], pl[i]});
    expect_r.insert(expect_r.end(), {cr[i], pr[i], a2[i]});
    expect_s.insert(expect_s.end(), {a1[i], b1[i]});
  }
  expect_l.push_back(cl[k + 1]);
  expect_r.push_back(cr[k + 1]);
  c.check(L == expect_l, "L = c_1^L b_1^2 p_1^L c_2^L ... c_{k+1}^L");
  c.check(R == expect_r, "R = c_1^R p_1^R a_1^2 c_2^R ... c_{k+1}^R");
  c.check(canonical_set(S) == canonical_set(expect_s), "S is the superscript-1 vertex set");
  c.check(S.size() == expect_s.size() && canonical_set(S).size() == S.size(), "S has 2k distinct vertices");
  auto want = [&](Vertex u, Vertex v, const std::string& what) {
    if (u < 0 || v < 0) return;
    c.check(g.adjacent(u, v), what);
    c.explain(u, v);
  };
  for (int i = 1; i <= k; ++i) {
    want(b1[i], cl[i], "b_i^1 adjacent c_i^L");
    want(b1[i], pl[i], "b_i^1 adjacent p_i^L");
    want(a1[i], pr[i], "a_i^1 adjacent p_i^R");
    want(a1[i], cr[i + 1], "a_i^1 adjacent c_{i+1}^R");
    want(b1[i], a2[i], "b_i^1 adjacent a_i^2");
    want(b2[i], a1[i], "b_i^2 adjacent a_i^1");
    auto block = c.role(idx("block", i));
    c.check(canonical_set(block) ==
                canonical_set({cl[i], b2[i], pl[i], cl[i + 1], cr[i], pr[i], a2[i], cr[i + 1], a1[i], b1[i]}),
            idx("block", i) + " membership");
  }
  c.covers(joined({L, R, S}));
  c.no_other_edges();
}

template <bool Paw>
void check_feral(Checker& c, const FamilySpec& s) {
  const int arm = arm_of(s, 6);
  const int count = (1 << s.c) - 1;
  std::vector<Vertex> all;
  std::vector<std::vector<std::array<Vertex, 3>>> leaf(2, std::vector<std::array<Vertex, 3>>(count + 1));
  const char* names[3] = {"a", "b", "c"};
  for (int t = 0; t < 2; ++t) {
    std::vector<Vertex> tree_members;
    for (int i = 1; i <= count; ++i) {
      std::string suffix = "_" + std::to_string(i) + "^" + std::to_string(t + 1);
      auto members = Paw ? check_long_paw(c, suffix, arm) : check_long_claw(c, suffix, arm);
      tree_members = joined({tree_members, members});
      for (int j = 0; j < 3; ++j) {
        leaf[t][i][j] = c.single(std::string(names[j]) + suffix);
        const auto& arm_path = c.role("P" + suffix + "_" + std::to_string(j + 1));
        c.check(!arm_path.empty() && arm_path.back() == leaf[t][i][j], std::string(names[j]) + suffix + " ends its arm");
      }
    }
    for (int i = 2; i <= count; ++i)
      c.check(leaf[t][i][0] == leaf[t][i / 2][i % 2 == 0 ? 1 : 2], "claw " + std::to_string(i) + " glued to its parent");
    auto tree = c.role("T^" + std::to_string(t + 1));
    c.check(canonical_set(tree) == canonical_set(tree_members), "T^" + std::to_string(t + 1) + " membership");
    all = joined({all, tree});
  }
  c.disjoint("T^1", c.role("T^1"), "T^2", c.role("T^2"));
  for (int i = 1 << (s.c - 1); i <= count; ++i)
    for (int j = 1; j <= 2; ++j) {
      Vertex u = leaf[0][i][j], v = leaf[1][i][j];
      if (u < 0 || v < 0) continue;
      c.check(c.graph().adjacent(u, v), "leaf-level cross edge " + std::string(names[j]) + "_" + std::to_string(i));
      c.explain(u, v);
    }
  c.covers(all);
  c.no_other_edges();
}

void check_subdivision(Checker& c, const FamilySpec& s) {
  auto orig = c.role("original");
  std::vector<Vertex> all = orig;
  std::vector<std::vector<Vertex>> paths;
  if (s.base_graph) {
    for (auto [u, v] : s.base_graph->edges()) {
      std::string name = "edge_" + std::to_string(u) + "_" + std::to_string(v);
      auto p = c.role(name);
      c.induced_path(name, p);
      c.check(static_cast<int>(p.size()) == s.f + 2, name + " has f internal vertices");
      c.check(!p.empty() && u < static_cast<int>(orig.size()) && v < static_cast<int>(orig.size()) &&
                  p.front() == orig[u] && p.back() == orig[v],
              name + " joins its original endpoints");
      all = joined({all, interior(p)});
      paths.push_back(interior(p));
    }
  } else {
    c.fail("subdivision needs a base graph");
  }
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j) c.disjoint("edge paths", paths[i], "edge paths", paths[j]);
  c.covers(all);
  c.no_other_edges();
}

}  // namespace

WitnessReport verify_witness(const Graph& g, const FamilySpec& spec, const StructureWitness& w) {
  Checker c(g, w);
  switch (spec.family) {
    case Family::theta: check_theta(c, spec); break;
    case Family::prism: check_prism(c, spec); break;
    case Family::pyramid: check_pyramid(c, spec); break;
    case Family::ladder_theta: check_ladder_half(c, spec, false); break;
    case Family::ladder_prism: check_ladder_half(c, spec, true); break;
    case Family::ladder: check_ladder(c, spec); break;
    case Family::claw: check_copies<false>(c, spec); break;
    case Family::paw: check_copies<true>(c, spec); break;
    case Family::long_claw: {
      c.covers(check_long_claw(c, "", arm_of(spec, spec.k)));
      c.no_other_edges();
      break;
    }
    case Family::long_paw: {
      c.covers(check_long_paw(c, "", arm_of(spec, spec.k)));
      c.no_other_edges();
      break;
    }
    case Family::skinny_ladder: check_skinny(c, spec); break;
    case Family::almost_skinny_ladder: check_almost_skinny(c, spec); break;
    case Family::twisted_ladder: check_twisted(c, spec); break;
    case Family::claw_feral: check_feral<false>(c, spec); break;
    case Family::paw_feral: check_feral<true>(c, spec); break;
    case Family::subdivision: check_subdivision(c, spec); break;
  }
  return c.finish();
}

}  // namespace sepscope
