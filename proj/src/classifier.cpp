#include "sepscope/classifier.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace sepscope {

namespace {

int minimum_length(FamilyType t) {
  switch (t) {
    case FamilyType::theta: return 4;
    case FamilyType::prism: return 2;
    case FamilyType::pyramid: return 3;
    case FamilyType::ladder_theta: return 3;
    case FamilyType::ladder_prism: return 2;
    case FamilyType::claw:
    case FamilyType::paw: return 0;
  }
  return 0;
}

bool is_ladder(FamilyType t) { return t == FamilyType::ladder_theta || t == FamilyType::ladder_prism; }

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 62) / std::max<std::uint64_t>(b, 1)) return std::uint64_t{1} << 62;
    r *= b;
  }
  return r;
}

std::uint64_t multiset_count(int values, int k) {
  // C(values + k - 1, k)
  long double c = 1;
  for (int i = 1; i <= k; ++i) c = c * (values + k - i) / i;
  return c > 4e18L ? std::uint64_t{1} << 62 : static_cast<std::uint64_t>(c + 0.5L);
}

// Calls fn on every representative spec; stops early when fn returns false.
void for_each_representative(FamilyType type, int k, int cap, const ClassifierConfig& config,
                             const std::function<bool(const FamilySpec&)>& fn) {
  FamilySpec base;
  base.family = family_of(type);
  base.k = k;
  if (type == FamilyType::claw || type == FamilyType::paw) {
    base.arm_length = k;
    fn(base);
    return;
  }
  const int lo = minimum_length(type);
  std::vector<int> len(k, lo);
  if (!is_ladder(type)) {
    // Path order is immaterial: nondecreasing length tuples.
    while (true) {
      FamilySpec s = base;
      s.path_lengths = len;
      if (!fn(s)) return;
      int i = k - 1;
      while (i >= 0 && len[i] == cap) --i;
      if (i < 0) return;
      ++len[i];
      for (int j = i + 1; j < k; ++j) len[j] = len[i];
    }
  }
  // Canonical layout: all tuples up to reversal.
  while (true) {
    std::vector<int> rev(len.rbegin(), len.rend());
    if (len <= rev) {
      FamilySpec s = base;
      s.path_lengths = len;
      if (!fn(s)) return;
    }
    int i = k - 1;
    while (i >= 0 && len[i] == cap) --i;
    if (i < 0) break;
    ++len[i];
    for (int j = i + 1; j < k; ++j) len[j] = lo;
  }
  std::mt19937_64 rng(config.seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(type) * 131 + k);
  for (int sample = 0; sample < config.sampled_layouts; ++sample) {
    FamilySpec s = base;
    s.left_layout = random_layout(k, rng());
    s.path_lengths.resize(k);
    for (auto& l : s.path_lengths) l = uniform_int(rng, lo, cap);
    if (!fn(s)) return;
  }
}

std::uint64_t representative_count(FamilyType type, int k, int cap, const ClassifierConfig& config) {
  if (type == FamilyType::claw || type == FamilyType::paw) return 1;
  const int values = cap - minimum_length(type) + 1;
  if (!is_ladder(type)) return multiset_count(values, k);
  return (ipow(values, k) + ipow(values, (k + 1) / 2)) / 2 + static_cast<std::uint64_t>(config.sampled_layouts);
}

}  // namespace

ForbiddenFamily make_forbidden_family(std::vector<Graph> members) {
  if (members.empty()) throw Error("forbidden family is empty");
  ForbiddenFamily f;
  for (const auto& m : members) {
    if (m.vertex_count() == 0) throw Error("forbidden graphs must be nonempty");
    f.h = std::max(f.h, m.vertex_count());
  }
  f.members = std::move(members);
  return f;
}

const std::vector<FamilyType>& all_family_types() {
  static const std::vector<FamilyType> all = {FamilyType::theta,        FamilyType::prism,        FamilyType::pyramid,
                                              FamilyType::ladder_theta, FamilyType::ladder_prism, FamilyType::claw,
                                              FamilyType::paw};
  return all;
}

std::string family_type_name(FamilyType t) { return family_name(family_of(t)); }

Family family_of(FamilyType t) {
  switch (t) {
    case FamilyType::theta: return Family::theta;
    case FamilyType::prism: return Family::prism;
    case FamilyType::pyramid: return Family::pyramid;
    case FamilyType::ladder_theta: return Family::ladder_theta;
    case FamilyType::ladder_prism: return Family::ladder_prism;
    case FamilyType::claw: return Family::claw;
    case FamilyType::paw: return Family::paw;
  }
  return Family::theta;
}

std::string class_status_name(ClassStatus s) {
  switch (s) {
    case ClassStatus::strongly_quasi_tame: return "strongly_quasi_tame";
    case ClassStatus::tame: return "tame";
    case ClassStatus::feral: return "feral";
    case ClassStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

int effective_length_cap(int length_cap, int h) { return std::min(length_cap, 2 * h + 3); }

bool contains_member(const Graph& g, const ForbiddenFamily& hh, std::uint64_t budget, int* which) {
  for (std::size_t i = 0; i < hh.members.size(); ++i) {
    auto v = find_induced_subgraph(g, hh.members[i], budget);
    if (v.status == SearchStatus::unknown_budget) throw BudgetExceeded("induced-subgraph search exhausted its budget");
    if (v.status == SearchStatus::found) {
      if (which) *which = static_cast<int>(i);
      return true;
    }
  }
  return false;
}

TypeCheck forbids_family_type(const ForbiddenFamily& hh, FamilyType type, int k, int length_cap,
                              const ClassifierConfig& config) {
  TypeCheck out;
  out.type = type;
  out.k = k;
  out.label = is_ladder(type) ? "canonical+sampled" : "exhaustive";
  const int lo = minimum_length(type);
  if (lo > 0 && length_cap < lo)
    throw Error("length cap " + std::to_string(length_cap) + " below the minimum for " + family_type_name(type));
  const int cap = std::max(lo, effective_length_cap(length_cap, hh.h));
  out.effective_length_cap = cap;
  if (representative_count(type, k, cap, config) > config.representative_cap)
    throw BudgetExceeded("too many representatives for " + family_type_name(type) + " at k = " + std::to_string(k));
  out.forbids = true;
  for_each_representative(type, k, cap, config, [&](const FamilySpec& spec) {
    ++out.representatives;
    Generated gen = generate(spec);
    int which = -1;
    if (contains_member(gen.graph, hh, config.search_budget, &which)) {
      ++out.member_hits[which];
      return true;
    }
    out.forbids = false;
    out.avoiding_spec = spec;
    out.avoiding = std::move(gen);
    return false;
  });
  return out;
}

ClassificationVerdict classify(const ForbiddenFamily& hh, int k_max, int length_cap, const ClassifierConfig& config) {
  if (k_max < 3) throw Error("classify needs k_max >= 3");
  if (length_cap <= 0) length_cap = 5 * hh.h;
  ClassificationVerdict v;
  v.k_max = k_max;
  v.length_cap = length_cap;
  for (const auto& m : hh.members) {
    const int j = m.vertex_count();
    if (m.edge_count() == j * (j - 1) / 2 && (!v.forbidden_clique || j < *v.forbidden_clique)) v.forbidden_clique = j;
  }

  std::map<std::pair<FamilyType, int>, TypeCheck> cache;
  auto check = [&](FamilyType t, int k) -> const TypeCheck& {
    auto key = std::make_pair(t, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, forbids_family_type(hh, t, k, length_cap, config)).first;
    return it->second;
  };
  const std::vector<FamilyType> tame_types = {FamilyType::theta, FamilyType::ladder_theta, FamilyType::claw,
                                              FamilyType::paw};
  const std::vector<FamilyType> rest = {FamilyType::prism, FamilyType::pyramid, FamilyType::ladder_prism};

  try {
    std::optional<int> sqt_k;
    std::vector<TypeCheck> sqt_evidence;
    for (int k = 3; k <= k_max; ++k) {
      std::vector<TypeCheck> ev;
      bool tame_types_forbidden = true;
      for (FamilyType t : tame_types) {
        ev.push_back(check(t, k));
        if (!ev.back().forbids) {
          tame_types_forbidden = false;
          break;
        }
      }
      if (tame_types_forbidden && v.forbidden_clique && *v.forbidden_clique <= k) {
        v.status = ClassStatus::tame;
        v.k_certificate = k;
        v.evidence = std::move(ev);
        v.note = "forbids K_" + std::to_string(*v.forbidden_clique) + " and every k-theta, k-ladder-theta, k-claw, k-paw";
        return v;
      }
      if (!sqt_k && tame_types_forbidden) {
        bool all = true;
        for (FamilyType t : rest) {
          ev.push_back(check(t, k));
          if (!ev.back().forbids) {
            all = false;
            break;
          }
        }
        if (all) {
          sqt_k = k;
          sqt_evidence = ev;
          if (!v.forbidden_clique) break;  // no clique bound, so the tame route cannot apply
        }
      }
    }
    if (sqt_k) {
      v.status = ClassStatus::strongly_quasi_tame;
      v.k_certificate = *sqt_k;
      v.evidence = std::move(sqt_evidence);
      v.note = "every type forbidden at k = " + std::to_string(*sqt_k);
      return v;
    }
    for (FamilyType t : all_family_types()) {
      const TypeCheck& c = check(t, k_max);
      if (!c.forbids) {
        v.status = ClassStatus::feral;
        v.k_certificate = k_max;
        v.evidence = {c};
        v.note = family_type_name(t) + " at k = " + std::to_string(k_max) + " avoids every forbidden graph";
        return v;
      }
    }
    v.note = "no deciding k found";
  } catch (const BudgetExceeded& e) {
    v.status = ClassStatus::inconclusive;
    v.note = e.what();
  }
  return v;
}

Graph reduce_degree_two_paths(const Graph& input, int h) {
  if (h <= 5) throw Error("reduce_degree_two_paths needs h > 5");
  const int need = 5 * h;
  Graph g = input;
  while (true) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::optional<std::pair<Vertex, Vertex>> target;
    for (Vertex v = 0; v < n && !target; ++v) {
      if (seen[v] || g.degree(v) != 2) continue;
      // Walk the maximal chain of degree-2 vertices through v.
      std::vector<Vertex> chain{v};
      seen[v] = 1;
      std::vector<Vertex> ends;
      bool cycle = false;
      for (Vertex first : {g.neighbors(v)[0], g.neighbors(v)[1]}) {
        std::vector<Vertex> part;
        Vertex prev = v, cur = first;
        while (true) {
          if (cur == v) {
            cycle = true;
            break;
          }
          if (g.degree(cur) != 2 || seen[cur]) {
            if (g.degree(cur) != 2) ends.push_back(cur);
            break;
          }
          seen[cur] = 1;
          part.push_back(cur);
          Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
          prev = cur;
          cur = next;
        }
        if (cycle) {
          chain.insert(chain.end(), part.begin(), part.end());
          break;
        }
        if (first == g.neighbors(v)[0]) {
          std::reverse(part.begin(), part.end());
          chain.insert(chain.begin(), part.begin(), part.end());
        } else {
          chain.insert(chain.end(), part.begin(), part.end());
        }
      }
      std::vector<Vertex> seq;
      if (cycle) {
        // A cycle of degree-2 vertices; any window misses at least one vertex.
        if (static_cast<int>(chain.size()) <= need) continue;
        seq.assign(chain.begin(), chain.begin() + need);
      } else {
        if (ends.size() == 2) {
          seq.push_back(ends[0]);
          seq.insert(seq.end(), chain.begin(), chain.end());
          seq.push_back(ends[1]);
        } else {
          seq = chain;
        }
        if (static_cast<int>(seq.size()) < need) continue;
        std::vector<Vertex> window(seq.begin(), seq.begin() + need);
        if (need >= 3 && g.adjacent(window.front(), window.back())) {
          window.assign(seq.end() - need, seq.end());
          if (g.adjacent(window.front(), window.back())) continue;
        }
        seq = window;
      }
      const int i = (need - 1 + 1) / 2;  // ceil((5h-1)/2), 1-based
      const int j = (need + 1 + 1) / 2;  // ceil((5h+1)/2), 1-based
      target = std::make_pair(seq[i - 1], seq[j - 1]);
    }
    if (!target) return g;
    std::vector<Vertex> pair{target->first, target->second};
    g = contract_path(g, pair).graph;
  }
}

}  // namespace sepscope
