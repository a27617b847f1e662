#include "sepscope/families.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <numeric>
#include <set>

namespace sepscope {

namespace {

std::atomic<GeneratorFault> g_fault{GeneratorFault::none};

std::string idx(const std::string& base, int i) { return base + "_" + std::to_string(i); }
std::string sup(const std::string& base, int i, int j) {
  return base + "_" + std::to_string(i) + "^" + std::to_string(j);
}
std::string side(const std::string& base, int i, char s) { return base + "_" + std::to_string(i) + "^" + s; }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

struct Builder {
  int n = 0;
  std::vector<Edge> edges;
  StructureWitness roles;

  Vertex add() { return n++; }
  std::vector<Vertex> add_many(int count) {
    std::vector<Vertex> out(count);
    for (auto& v : out) v = add();
    return out;
  }
  void edge(Vertex u, Vertex v) { edges.emplace_back(std::min(u, v), std::max(u, v)); }
  void path(const std::vector<Vertex>& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) edge(p[i], p[i + 1]);
  }
  void clique(const std::vector<Vertex>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) edge(c[i], c[j]);
  }
  /// New path from a to b with `len` vertices in total (len >= 2).
  std::vector<Vertex> path_between(Vertex a, Vertex b, int len) {
    std::vector<Vertex> p{a};
    for (int i = 0; i < len - 2; ++i) p.push_back(add());
    p.push_back(b);
    path(p);
    return p;
  }
  /// New path starting at the existing vertex a with `len` vertices in total.
  std::vector<Vertex> path_from(Vertex a, int len) {
    std::vector<Vertex> p{a};
    for (int i = 1; i < len; ++i) p.push_back(add());
    path(p);
    return p;
  }
  Generated finish() { return {Graph::from_edges(n, edges), std::move(roles)}; }
};

std::vector<int> lengths_for(const FamilySpec& spec, int count, int minimum, const std::string& what) {
  std::vector<int> len = spec.path_lengths;
  if (len.empty()) len.assign(count, minimum);
  if (len.size() == 1 && count > 1) len.assign(count, len[0]);
  require(static_cast<int>(len.size()) == count,
          what + ": expected " + std::to_string(count) + " path lengths, got " + std::to_string(len.size()));
  for (int l : len)
    require(l >= minimum, what + ": path length " + std::to_string(l) + " below minimum " + std::to_string(minimum));
  return len;
}

void check_layout(const BackboneLayout& layout, int count, const std::string& what) {
  require(layout.length >= 1, what + ": backbone must have a vertex");
  require(static_cast<int>(layout.attachments.size()) == count, what + ": attachment count mismatch");
  std::vector<int> owner(layout.length, -1);
  std::vector<std::pair<int, int>> span;
  for (int i = 0; i < count; ++i) {
    const auto& a = layout.attachments[i];
    require(!a.empty(), what + ": every attached vertex needs a backbone neighbour");
    for (int p : a) {
      require(p >= 0 && p < layout.length, what + ": attachment position out of range");
      require(owner[p] == -1, what + ": backbone vertex shared by two attachments");
      owner[p] = i;
    }
    span.emplace_back(*std::min_element(a.begin(), a.end()), *std::max_element(a.begin(), a.end()));
  }
  for (int i = 0; i < count; ++i)
    for (int p = span[i].first; p <= span[i].second; ++p)
      require(owner[p] == -1 || owner[p] == i, what + ": attachment intervals interleave");
}

BackboneLayout pick_layout(const std::optional<BackboneLayout>& given, int count, std::mt19937_64* rng,
                           const std::string& what) {
  BackboneLayout out;
  if (given) {
    out = *given;
  } else if (rng) {
    out = random_layout(count, (*rng)());
  } else {
    out = canonical_layout(count);
  }
  check_layout(out, count, what);
  return out;
}

std::vector<Vertex> add_backbone(Builder& b, const BackboneLayout& layout) {
  auto path = b.add_many(layout.length);
  b.path(path);
  return path;
}

void attach(Builder& b, Vertex v, const std::vector<Vertex>& backbone, const Attachment& a) {
  for (int p : a) b.edge(v, backbone[p]);
}

// ---------------------------------------------------------------------------

Generated gen_theta(const FamilySpec& s) {
  require(s.k >= 2, "theta needs k >= 2");
  auto len = lengths_for(s, s.k, 4, "theta");
  Builder b;
  Vertex a = b.add(), z = b.add();
  b.roles["a"] = {a};
  b.roles["b"] = {z};
  for (int i = 0; i < s.k; ++i) b.roles[idx("P", i + 1)] = b.path_between(a, z, len[i]);
  if (generator_fault() == GeneratorFault::theta_chord) b.edge(a, z);
  return b.finish();
}

Generated gen_prism(const FamilySpec& s) {
  require(s.k >= 2, "prism needs k >= 2");
  auto len = lengths_for(s, s.k, 2, "prism");
  Builder b;
  auto as = b.add_many(s.k), bs = b.add_many(s.k);
  b.clique(as);
  b.clique(bs);
  b.roles["A"] = as;
  b.roles["B"] = bs;
  for (int i = 0; i < s.k; ++i) {
    b.roles[idx("a", i + 1)] = {as[i]};
    b.roles[idx("b", i + 1)] = {bs[i]};
    b.roles[idx("P", i + 1)] = b.path_between(as[i], bs[i], len[i]);
  }
  return b.finish();
}

Generated gen_pyramid(const FamilySpec& s) {
  require(s.k >= 2, "pyramid needs k >= 2");
  auto len = lengths_for(s, s.k, 3, "pyramid");
  Builder b;
  Vertex a = b.add();
  auto bs = b.add_many(s.k);
  b.clique(bs);
  b.roles["a"] = {a};
  b.roles["B"] = bs;
  for (int i = 0; i < s.k; ++i) {
    b.roles[idx("b", i + 1)] = {bs[i]};
    b.roles[idx("P", i + 1)] = b.path_between(a, bs[i], len[i]);
  }
  return b.finish();
}

Generated gen_ladder_theta(const FamilySpec& s, std::mt19937_64* rng) {
  require(s.k >= 2, "ladder_theta needs k >= 2");
  auto len = lengths_for(s, s.k, 3, "ladder_theta");
  auto layout = pick_layout(s.left_layout, s.k, rng, "ladder_theta");
  Builder b;
  auto L = add_backbone(b, layout);
  Vertex z = b.add();
  b.roles["L"] = L;
  b.roles["b"] = {z};
  for (int i = 0; i < s.k; ++i) {
    Vertex a = b.add();
    attach(b, a, L, layout.attachments[i]);
    b.roles[idx("a", i + 1)] = {a};
    b.roles[idx("P", i + 1)] = b.path_between(a, z, len[i]);
  }
  return b.finish();
}

Generated gen_ladder_prism(const FamilySpec& s, std::mt19937_64* rng) {
  require(s.k >= 2, "ladder_prism needs k >= 2");
  auto len = lengths_for(s, s.k, 2, "ladder_prism");
  auto layout = pick_layout(s.left_layout, s.k, rng, "ladder_prism");
  Builder b;
  auto L = add_backbone(b, layout);
  auto bs = b.add_many(s.k);
  b.clique(bs);
  b.roles["L"] = L;
  b.roles["B"] = bs;
  for (int i = 0; i < s.k; ++i) {
    Vertex a = b.add();
    attach(b, a, L, layout.attachments[i]);
    b.roles[idx("a", i + 1)] = {a};
    b.roles[idx("b", i + 1)] = {bs[i]};
    b.roles[idx("P", i + 1)] = b.path_between(a, bs[i], len[i]);
  }
  return b.finish();
}

Generated gen_ladder(const FamilySpec& s, std::mt19937_64* rng) {
  require(s.k >= 2, "ladder needs k >= 2");
  auto len = lengths_for(s, s.k, 2, "ladder");
  auto left = pick_layout(s.left_layout, s.k, rng, "ladder (L)");
  auto right = pick_layout(s.right_layout, s.k, rng, "ladder (R)");
  Builder b;
  auto L = add_backbone(b, left);
  auto R = add_backbone(b, right);
  b.roles["L"] = L;
  b.roles["R"] = R;
  for (int i = 0; i < s.k; ++i) {
    Vertex a = b.add(), z = b.add();
    attach(b, a, L, left.attachments[i]);
    attach(b, z, R, right.attachments[i]);
    b.roles[idx("a", i + 1)] = {a};
    b.roles[idx("b", i + 1)] = {z};
    b.roles[idx("P", i + 1)] = b.path_between(a, z, len[i]);
  }
  return b.finish();
}

struct ClawParts {
  Vertex center;
  std::array<std::vector<Vertex>, 3> arms;
};

ClawParts build_long_claw(Builder& b, int arm, std::optional<Vertex> first_leaf = std::nullopt) {
  ClawParts c;
  c.center = b.add();
  for (int j = 0; j < 3; ++j) {
    if (j == 0 && first_leaf) {
      c.arms[j] = b.path_between(c.center, *first_leaf, arm);
    } else {
      c.arms[j] = b.path_from(c.center, arm);
    }
  }
  return c;
}

struct PawParts {
  std::array<Vertex, 3> centers;
  std::array<std::vector<Vertex>, 3> arms;
};

PawParts build_long_paw(Builder& b, int arm, std::optional<Vertex> first_leaf = std::nullopt) {
  PawParts p;
  for (auto& v : p.centers) v = b.add();
  b.clique({p.centers[0], p.centers[1], p.centers[2]});
  for (int j = 0; j < 3; ++j) {
    if (j == 0 && first_leaf) {
      p.arms[j] = b.path_between(p.centers[j], *first_leaf, arm);
    } else {
      p.arms[j] = b.path_from(p.centers[j], arm);
    }
  }
  return p;
}

const char* kLeaf[3] = {"a", "b", "c"};

void record_claw(StructureWitness& roles, const ClawParts& c, const std::string& suffix) {
  roles["v" + suffix] = {c.center};
  for (int j = 0; j < 3; ++j) roles["P" + suffix + "_" + std::to_string(j + 1)] = c.arms[j];
}

void record_paw(StructureWitness& roles, const PawParts& p, const std::string& suffix) {
  for (int j = 0; j < 3; ++j) {
    roles["v" + suffix + "_" + std::to_string(j + 1)] = {p.centers[j]};
    roles["P" + suffix + "_" + std::to_string(j + 1)] = p.arms[j];
  }
}

int claw_arm(const FamilySpec& s) { return s.arm_length > 0 ? s.arm_length : s.k; }

Generated gen_long_claw(const FamilySpec& s) {
  int arm = claw_arm(s);
  require(arm >= 2, "long_claw needs arm length >= 2");
  Builder b;
  record_claw(b.roles, build_long_claw(b, arm), "");
  return b.finish();
}

Generated gen_long_paw(const FamilySpec& s) {
  int arm = claw_arm(s);
  require(arm >= 1, "long_paw needs arm length >= 1");
  Builder b;
  record_paw(b.roles, build_long_paw(b, arm), "");
  return b.finish();
}

Generated gen_claw(const FamilySpec& s) {
  require(s.k >= 1, "claw needs k >= 1");
  int arm = claw_arm(s);
  require(arm >= 2, "claw needs arm length >= 2");
  Builder b;
  for (int i = 1; i <= s.k; ++i) {
    int first = b.n;
    record_claw(b.roles, build_long_claw(b, arm), "_" + std::to_string(i));
    std::vector<Vertex> copy(b.n - first);
    std::iota(copy.begin(), copy.end(), first);
    b.roles[idx("copy", i)] = copy;
  }
  return b.finish();
}

Generated gen_paw(const FamilySpec& s) {
  require(s.k >= 1, "paw needs k >= 1");
  int arm = claw_arm(s);
  require(arm >= 1, "paw needs arm length >= 1");
  Builder b;
  for (int i = 1; i <= s.k; ++i) {
    int first = b.n;
    record_paw(b.roles, build_long_paw(b, arm), "_" + std::to_string(i));
    std::vector<Vertex> copy(b.n - first);
    std::iota(copy.begin(), copy.end(), first);
    b.roles[idx("copy", i)] = copy;
  }
  return b.finish();
}

Generated gen_skinny_ladder(const FamilySpec& s) {
  require(s.k >= 1, "skinny_ladder needs k >= 1");
  Builder b;
  auto L = b.add_many(s.k), S = b.add_many(s.k), R = b.add_many(s.k);
  b.path(L);
  b.path(R);
  for (int i = 0; i < s.k; ++i) {
    b.edge(L[i], S[i]);
    b.edge(S[i], R[i]);
    b.roles[idx("l", i + 1)] = {L[i]};
    b.roles[idx("s", i + 1)] = {S[i]};
    b.roles[idx("r", i + 1)] = {R[i]};
  }
  b.roles["L"] = L;
  b.roles["S"] = S;
  b.roles["R"] = R;
  return b.finish();
}

Generated gen_almost_skinny(const FamilySpec& s, std::mt19937_64* rng) {
  require(s.k >= 1, "almost_skinny_ladder needs k >= 1");
  auto left = pick_layout(s.left_layout, s.k, rng, "almost_skinny_ladder (L)");
  auto right = pick_layout(s.right_layout, s.k, rng, "almost_skinny_ladder (R)");
  Builder b;
  auto L = add_backbone(b, left);
  auto S = b.add_many(s.k);
  auto R = add_backbone(b, right);
  for (int i = 0; i < s.k; ++i) {
    attach(b, S[i], L, left.attachments[i]);
    attach(b, S[i], R, right.attachments[i]);
    b.roles[idx("s", i + 1)] = {S[i]};
  }
  b.roles["L"] = L;
  b.roles["S"] = S;
  b.roles["R"] = R;
  return b.finish();
}

// Block i (1-based): L runs c_i^L b_i^2 p_i^L c_{i+1}^L with b_i^1 a twin of
// b_i^2; R runs c_i^R p_i^R a_i^2 c_{i+1}^R with a_i^1 a twin of a_i^2. The
// twins sit at opposite ends of the block. Cross edges: b_i^1 a_i^2, b_i^2 a_i^1.
Generated gen_twisted_ladder(const FamilySpec& s) {
  require(s.k >= 1, "twisted_ladder needs k >= 1");
  const int k = s.k;
  const bool drop_twins = generator_fault() == GeneratorFault::twisted_ladder_drop_twins;
  Builder b;
  std::vector<Vertex> cl(k + 2), cr(k + 2), a1(k + 1), a2(k + 1), b1(k + 1), b2(k + 1), pl(k + 1), pr(k + 1);
  for (int i = 1; i <= k + 1; ++i) {
    cl[i] = b.add();
    cr[i] = b.add();
  }
  for (int i = 1; i <= k; ++i) {
    a1[i] = b.add();
    a2[i] = b.add();
    b1[i] = b.add();
    b2[i] = b.add();
    pl[i] = b.add();
    pr[i] = b.add();
  }
  std::vector<Vertex> L, R, S;
  for (int i = 1; i <= k; ++i) {
    L.insert(L.end(), {cl[i], b2[i], pl[i]});
    R.insert(R.end(), {cr[i], pr[i], a2[i]});
    S.push_back(a1[i]);
    S.push_back(b1[i]);
  }
  L.push_back(cl[k + 1]);
  R.push_back(cr[k + 1]);
  b.path(L);
  b.path(R);
  for (int i = 1; i <= k; ++i) {
    if (!drop_twins) {
      b.edge(b1[i], cl[i]);
      b.edge(b1[i], pl[i]);
      b.edge(a1[i], pr[i]);
      b.edge(a1[i], cr[i + 1]);
    }
    b.edge(b1[i], a2[i]);
    b.edge(b2[i], a1[i]);
  }
  for (int i = 1; i <= k + 1; ++i) {
    b.roles[side("c", i, 'L')] = {cl[i]};
    b.roles[side("c", i, 'R')] = {cr[i]};
  }
  for (int i = 1; i <= k; ++i) {
    b.roles[sup("a", i, 1)] = {a1[i]};
    b.roles[sup("a", i, 2)] = {a2[i]};
    b.roles[sup("b", i, 1)] = {b1[i]};
    b.roles[sup("b", i, 2)] = {b2[i]};
    b.roles[side("p", i, 'L')] = {pl[i]};
    b.roles[side("p", i, 'R')] = {pr[i]};
    b.roles[idx("block", i)] =
        canonical_set({cl[i], b2[i], pl[i], cl[i + 1], cr[i], pr[i], a2[i], cr[i + 1], a1[i], b1[i]});
  }
  b.roles["L"] = L;
  b.roles["R"] = R;
  b.roles["S"] = canonical_set(S);
  b.roles["x"] = {cl[1]};
  b.roles["y"] = {cr[1]};
  return b.finish();
}

int feral_arm(const FamilySpec& s) { return s.arm_length > 0 ? s.arm_length : 6; }

// Two complete binary trees of 2^c - 1 long claws (or paws); claw 2i hangs
// off leaf b_i and claw 2i+1 off leaf c_i. Leaf-level b and c ends are
// matched across the two trees.
template <bool Paw>
Generated gen_feral(const FamilySpec& s) {
  require(s.c >= 1 && s.c <= 12, "feral gluing needs 1 <= c <= 12");
  const int arm = feral_arm(s);
  require(arm >= 2, "feral gluing needs arm length >= 2");
  const int count = (1 << s.c) - 1;
  Builder b;
  // leaf[t][i][j]: leaf j (a,b,c) of claw i in tree t.
  std::vector<std::vector<std::array<Vertex, 3>>> leaf(2, std::vector<std::array<Vertex, 3>>(count + 1));
  for (int t = 0; t < 2; ++t) {
    const int first = b.n;
    for (int i = 1; i <= count; ++i) {
      std::optional<Vertex> glue_to;
      if (i >= 2) glue_to = leaf[t][i / 2][i % 2 == 0 ? 1 : 2];
      std::string suffix = "_" + std::to_string(i) + "^" + std::to_string(t + 1);
      if constexpr (Paw) {
        PawParts p = build_long_paw(b, arm, glue_to);
        record_paw(b.roles, p, suffix);
        for (int j = 0; j < 3; ++j) leaf[t][i][j] = p.arms[j].back();
      } else {
        ClawParts c = build_long_claw(b, arm, glue_to);
        record_claw(b.roles, c, suffix);
        for (int j = 0; j < 3; ++j) leaf[t][i][j] = c.arms[j].back();
      }
      for (int j = 0; j < 3; ++j) b.roles[std::string(kLeaf[j]) + suffix] = {leaf[t][i][j]};
    }
    std::vector<Vertex> tree(b.n - first);
    std::iota(tree.begin(), tree.end(), first);
    b.roles["T^" + std::to_string(t + 1)] = tree;
  }
  for (int i = 1 << (s.c - 1); i <= count; ++i) {
    b.edge(leaf[0][i][1], leaf[1][i][1]);
    b.edge(leaf[0][i][2], leaf[1][i][2]);
  }
  return b.finish();
}

Generated gen_subdivision(const FamilySpec& s) {
  require(s.base_graph.has_value(), "subdivision needs a base graph");
  require(s.f >= 0, "subdivision needs f >= 0");
  const Graph& g = *s.base_graph;
  Builder b;
  b.add_many(g.vertex_count());
  std::vector<Vertex> orig(g.vertex_count());
  std::iota(orig.begin(), orig.end(), 0);
  b.roles["original"] = orig;
  for (auto [u, v] : g.edges())
    b.roles["edge_" + std::to_string(u) + "_" + std::to_string(v)] = b.path_between(u, v, s.f + 2);
  return b.finish();
}

}  // namespace

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  if (hi < lo) throw Error("empty random range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<int>(x % span);
}

BackboneLayout canonical_layout(int count) {
  BackboneLayout out;
  out.length = count;
  for (int i = 0; i < count; ++i) out.attachments.push_back({i});
  return out;
}

BackboneLayout random_layout(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  for (int i = count - 1; i > 0; --i) std::swap(order[i], order[uniform_int(rng, 0, i)]);
  BackboneLayout out;
  out.attachments.resize(count);
  int pos = uniform_int(rng, 0, 1);
  for (int slot = 0; slot < count; ++slot) {
    int size = uniform_int(rng, 1, 3);
    Attachment a{pos};
    for (int p = pos + 1; p < pos + size - 1; ++p)
      if (uniform_int(rng, 0, 1)) a.push_back(p);
    if (size > 1) a.push_back(pos + size - 1);
    out.attachments[order[slot]] = a;
    pos += size + (slot + 1 < count ? uniform_int(rng, 0, 1) : 0);
  }
  out.length = std::max(1, pos + uniform_int(rng, 0, 1));
  return out;
}

void set_generator_fault(GeneratorFault fault) { g_fault.store(fault); }
GeneratorFault generator_fault() { return g_fault.load(); }

std::string family_name(Family f) {
  switch (f) {
    case Family::theta: return "theta";
    case Family::prism: return "prism";
    case Family::pyramid: return "pyramid";
    case Family::ladder_theta: return "ladder_theta";
    case Family::ladder_prism: return "ladder_prism";
    case Family::ladder: return "ladder";
    case Family::claw: return "claw";
    case Family::paw: return "paw";
    case Family::long_claw: return "long_claw";
    case Family::long_paw: return "long_paw";
    case Family::skinny_ladder: return "skinny_ladder";
    case Family::almost_skinny_ladder: return "almost_skinny_ladder";
    case Family::twisted_ladder: return "twisted_ladder";
    case Family::claw_feral: return "claw_feral";
    case Family::paw_feral: return "paw_feral";
    case Family::subdivision: return "subdivision";
  }
  return "unknown";
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> all = {
      Family::theta,         Family::prism,         Family::pyramid,   Family::ladder_theta,
      Family::ladder_prism,  Family::ladder,        Family::claw,      Family::paw,
      Family::long_claw,     Family::long_paw,      Family::skinny_ladder, Family::almost_skinny_ladder,
      Family::twisted_ladder, Family::claw_feral,   Family::paw_feral, Family::subdivision};
  return all;
}

std::optional<Family> parse_family(const std::string& name) {
  std::string norm = name;
  std::replace(norm.begin(), norm.end(), '-', '_');
  for (Family f : all_families())
    if (family_name(f) == norm) return f;
  return std::nullopt;
}

Generated generate(const FamilySpec& spec) {
  std::optional<std::mt19937_64> rng;
  if (spec.layout_seed) rng.emplace(*spec.layout_seed);
  std::mt19937_64* r = rng ? &*rng : nullptr;
  switch (spec.family) {
    case Family::theta: return gen_theta(spec);
    case Family::prism: return gen_prism(spec);
    case Family::pyramid: return gen_pyramid(spec);
    case Family::ladder_theta: return gen_ladder_theta(spec, r);
    case Family::ladder_prism: return gen_ladder_prism(spec, r);
    case Family::ladder: return gen_ladder(spec, r);
    case Family::claw: return gen_claw(spec);
    case Family::paw: return gen_paw(spec);
    case Family::long_claw: return gen_long_claw(spec);
    case Family::long_paw: return gen_long_paw(spec);
    case Family::skinny_ladder: return gen_skinny_ladder(spec);
    case Family::almost_skinny_ladder: return gen_almost_skinny(spec, r);
    case Family::twisted_ladder: return gen_twisted_ladder(spec);
    case Family::claw_feral: return gen_feral<false>(spec);
    case Family::paw_feral: return gen_feral<true>(spec);
    case Family::subdivision: return gen_subdivision(spec);
  }
  throw Error("unknown family");
}

Graph subdivide(const Graph& g, int f) {
  if (f < 0) throw Error("subdivision needs f >= 0");
  FamilySpec s;
  s.family = Family::subdivision;
  s.base_graph = g;
  s.f = f;
  return gen_subdivision(s).graph;
}

}  // namespace sepscope
