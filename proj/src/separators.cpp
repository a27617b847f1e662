#include "sepscope/separators.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mask_graph.hpp"

namespace sepscope {

using detail::Mask;
using detail::MaskGraph;

namespace {

std::vector<VertexSet> sorted_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

std::vector<VertexSet> masks_to_sets(const std::vector<Mask>& masks) {
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(detail::mask_members(m));
  return sorted_sets(std::move(out));
}

int full_count_bits(const Graph& g, const VertexBits& s, int stop) {
  int full = 0;
  for (const auto& c : components_bits(g, g.all_vertices() - s)) {
    if (open_neighborhood_bits(g, c) == s && ++full >= stop) break;
  }
  return full;
}

void check_oracle_size(const Graph& g, int cap) {
  if (cap > kOracleHardCap) cap = kOracleHardCap;
  if (g.vertex_count() > cap)
    throw BudgetExceeded("oracle enumeration limited to " + std::to_string(cap) + " vertices (graph has " +
                         std::to_string(g.vertex_count()) + ")");
}

}  // namespace

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s) {
  VertexBits sb = g.bits_of(s);
  std::vector<VertexSet> out;
  for (const auto& c : components_bits(g, g.all_vertices() - sb))
    if (open_neighborhood_bits(g, c) == sb) out.push_back(c.members());
  return out;
}

bool is_minimal_separator(const Graph& g, const VertexBits& s) {
  if (s.none()) return false;
  return full_count_bits(g, s, 2) >= 2;
}

bool is_minimal_separator(const Graph& g, const VertexSet& s) { return is_minimal_separator(g, g.bits_of(s)); }

SeparatorRecord make_separator_record(const Graph& g, const VertexSet& s) {
  SeparatorRecord rec;
  rec.separator = canonical_set(s);
  rec.full_components = full_components(g, rec.separator);
  if (rec.separator.empty() || rec.full_components.size() < 2)
    throw Error("not a minimal separator");
  rec.witness_pair = std::make_pair(rec.full_components[0].front(), rec.full_components[1].front());
  return rec;
}

bool record_is_valid(const Graph& g, const SeparatorRecord& rec) {
  if (rec.separator.empty() || rec.full_components.size() < 2) return false;
  VertexBits sb = g.bits_of(rec.separator);
  for (std::size_t i = 0; i < rec.full_components.size(); ++i) {
    VertexBits c = g.bits_of(rec.full_components[i]);
    if (c.intersects(sb) || !is_connected_set(g, c)) return false;
    if (open_neighborhood_bits(g, c) != sb) return false;
    for (std::size_t j = i + 1; j < rec.full_components.size(); ++j)
      if (!is_anticomplete(g, rec.full_components[i], rec.full_components[j])) return false;
  }
  if (rec.witness_pair) {
    auto [u, v] = *rec.witness_pair;
    if (!is_minimal_uv_separator(g, rec.separator, u, v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subset oracle

std::vector<VertexSet> enumerate_oracle_serial(const Graph& g, int vertex_cap) {
  check_oracle_size(g, vertex_cap);
  MaskGraph mg(g);
  const Mask all = mg.all();
  std::vector<Mask> found;
  for (Mask s = 1; s < all; ++s)
    if (mg.full_component_count(s, all & ~s) >= 2) found.push_back(s);
  return masks_to_sets(found);
}

std::vector<VertexSet> enumerate_oracle(const Graph& g, int vertex_cap) {
  check_oracle_size(g, vertex_cap);
  MaskGraph mg(g);
  const Mask all = mg.all();
  const long long total = static_cast<long long>(all);
  std::vector<std::vector<Mask>> per_thread;
#pragma omp parallel
  {
#pragma omp single
    {
#ifdef _OPENMP
      per_thread.resize(omp_get_num_threads());
#else
      per_thread.resize(1);
#endif
    }
#ifdef _OPENMP
    auto& local = per_thread[omp_get_thread_num()];
#else
    auto& local = per_thread[0];
#endif
#pragma omp for schedule(dynamic, 1024)
    for (long long s = 1; s < total; ++s) {
      Mask m = static_cast<Mask>(s);
      if (mg.full_component_count(m, all & ~m) >= 2) local.push_back(m);
    }
  }
  std::vector<Mask> found;
  for (auto& l : per_thread) found.insert(found.end(), l.begin(), l.end());
  return masks_to_sets(found);
}

// ---------------------------------------------------------------------------
// Closure listing

namespace {

std::vector<VertexBits> closure_seeds(const Graph& g) {
  std::vector<VertexBits> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    VertexBits nv(g.vertex_count());
    nv.set(v);
    nv |= g.neighbor_bits(v);
    for (const auto& c : components_bits(g, g.all_vertices() - nv)) {
      VertexBits s = open_neighborhood_bits(g, c);
      if (is_minimal_separator(g, s)) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<VertexBits> closure_expand(const Graph& g, const VertexBits& s) {
  std::vector<VertexBits> out;
  s.for_each([&](Vertex x) {
    VertexBits blocked = s | g.neighbor_bits(x);
    for (const auto& c : components_bits(g, g.all_vertices() - blocked)) {
      VertexBits t = open_neighborhood_bits(g, c);
      if (is_minimal_separator(g, t)) out.push_back(std::move(t));
    }
  });
  return out;
}

std::vector<VertexSet> bits_to_sets(const std::unordered_set<VertexBits, VertexBitsHash>& seen) {
  std::vector<VertexSet> out;
  out.reserve(seen.size());
  for (const auto& b : seen) out.push_back(b.members());
  return sorted_sets(std::move(out));
}

}  // namespace

std::vector<VertexSet> enumerate_closure_serial(const Graph& g) {
  std::unordered_set<VertexBits, VertexBitsHash> seen;
  std::deque<VertexBits> work;
  for (auto& s : closure_seeds(g))
    if (seen.insert(s).second) work.push_back(std::move(s));
  while (!work.empty()) {
    VertexBits s = std::move(work.front());
    work.pop_front();
    for (auto& t : closure_expand(g, s))
      if (seen.insert(t).second) work.push_back(std::move(t));
  }
  return bits_to_sets(seen);
}

std::vector<VertexSet> enumerate_closure(const Graph& g) {
  std::unordered_set<VertexBits, VertexBitsHash> seen;
  std::vector<VertexBits> frontier;
  for (auto& s : closure_seeds(g))
    if (seen.insert(s).second) frontier.push_back(std::move(s));
  while (!frontier.empty()) {
    std::vector<std::vector<VertexBits>> produced(frontier.size());
    const long long count = static_cast<long long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < count; ++i) produced[i] = closure_expand(g, frontier[i]);
    std::vector<VertexBits> next;
    for (auto& batch : produced)
      for (auto& t : batch)
        if (seen.insert(t).second) next.push_back(std::move(t));
    frontier = std::move(next);
  }
  return bits_to_sets(seen);
}

// ---------------------------------------------------------------------------
// Close separators and the <=_{u,v} order

VertexSet component_of(const Graph& g, const VertexSet& s, Vertex u) {
  VertexBits rest = g.all_vertices() - g.bits_of(s);
  if (!g.valid_vertex(u) || !rest.test(u)) throw Error("vertex inside the removed set");
  for (const auto& c : components_bits(g, rest))
    if (c.test(u)) return c.members();
  return {};
}

bool is_minimal_uv_separator(const Graph& g, const VertexSet& s, Vertex u, Vertex v) {
  if (!g.valid_vertex(u) || !g.valid_vertex(v) || u == v) return false;
  VertexBits sb = g.bits_of(s);
  if (sb.none() || sb.test(u) || sb.test(v)) return false;
  bool u_full = false, v_full = false;
  for (const auto& c : components_bits(g, g.all_vertices() - sb)) {
    if (c.test(u) && c.test(v)) return false;
    if (open_neighborhood_bits(g, c) != sb) continue;
    if (c.test(u)) u_full = true;
    if (c.test(v)) v_full = true;
  }
  return u_full && v_full;
}

SeparatorRecord close_separator(const Graph& g, Vertex u, Vertex v) {
  if (!g.valid_vertex(u) || !g.valid_vertex(v)) throw Error("vertex out of range");
  if (u == v) throw Error("close_separator needs distinct vertices");
  if (g.adjacent(u, v)) throw Error("close_separator needs non-adjacent vertices");
  VertexBits nv = g.neighbor_bits(v);
  nv.set(v);
  VertexBits comp_u;
  for (auto& c : components_bits(g, g.all_vertices() - nv))
    if (c.test(u)) comp_u = std::move(c);
  VertexBits s = open_neighborhood_bits(g, comp_u);
  if (s.none()) throw Error("vertices lie in different components; no separator exists");
  SeparatorRecord rec;
  rec.separator = s.members();
  rec.full_components = full_components(g, rec.separator);
  rec.witness_pair = std::make_pair(u, v);
  return rec;
}

bool separator_leq(const Graph& g, const SeparatorRecord& s1, const SeparatorRecord& s2, Vertex u, Vertex v) {
  if (!is_minimal_uv_separator(g, s1.separator, u, v) || !is_minimal_uv_separator(g, s2.separator, u, v))
    throw Error("separator_leq expects two minimal u-v separators");
  VertexSet c1 = component_of(g, s1.separator, u);
  VertexSet c2 = component_of(g, s2.separator, u);
  return std::includes(c2.begin(), c2.end(), c1.begin(), c1.end());
}

// ---------------------------------------------------------------------------
// Traces and shattering

TraceFamily trace_family(const Graph& g, Vertex v, const std::vector<VertexSet>& separators) {
  TraceFamily f;
  f.anchor_vertex = v;
  const VertexBits& nv = g.neighbor_bits(v);
  for (const auto& s : separators) {
    VertexBits sb = g.bits_of(s);
    if (sb.test(v)) continue;
    f.traces.push_back((sb & nv).members());
  }
  f.traces = sorted_sets(std::move(f.traces));
  return f;
}

ShatterResult shattered_set_max(const TraceFamily& family, int size_cap) {
  ShatterResult out;
  if (family.traces.empty()) {
    out.dimension = -1;  // the empty family shatters nothing, not even the empty set
    return out;
  }
  VertexSet ground;
  for (const auto& t : family.traces) ground.insert(ground.end(), t.begin(), t.end());
  ground = canonical_set(std::move(ground));
  const int g = static_cast<int>(ground.size());
  std::unordered_map<Vertex, int> index;
  for (int i = 0; i < g; ++i) index[ground[i]] = i;
  std::vector<VertexBits> traces;
  for (const auto& t : family.traces) {
    VertexBits b(g);
    for (Vertex x : t) b.set(index[x]);
    traces.push_back(std::move(b));
  }

  auto shatters = [&](const std::vector<int>& pick) {
    std::unordered_set<std::uint64_t> patterns;
    for (const auto& t : traces) {
      std::uint64_t p = 0;
      for (std::size_t i = 0; i < pick.size(); ++i)
        if (t.test(pick[i])) p |= std::uint64_t{1} << i;
      patterns.insert(p);
    }
    return patterns.size() == (std::size_t{1} << pick.size());
  };

  for (int d = 1; d <= g; ++d) {
    if (d > size_cap || d >= 63) {
      out.exact = false;
      break;
    }
    if ((std::size_t{1} << d) > traces.size()) break;
    std::vector<int> pick(d);
    std::iota(pick.begin(), pick.end(), 0);
    bool found = false;
    while (true) {
      if (shatters(pick)) {
        found = true;
        break;
      }
      int i = d - 1;
      while (i >= 0 && pick[i] == g - d + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) break;
    out.dimension = d;
    out.witness.clear();
    for (int i : pick) out.witness.push_back(ground[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Domination

namespace {

struct DominationSearch {
  const Graph& g;
  std::vector<VertexBits> cover;  // N[c] & target per candidate
  std::vector<Vertex> cand;
  std::uint64_t cap;
  std::uint64_t nodes = 0;
  int best = 0;
  std::vector<int> best_pick, pick;

  void run(const VertexBits& undominated) {
    if (++nodes > cap) throw BudgetExceeded("domination search exceeded node cap");
    if (undominated.none()) {
      if (static_cast<int>(pick.size()) < best) {
        best = static_cast<int>(pick.size());
        best_pick = pick;
      }
      return;
    }
    int remaining = undominated.count();
    int max_gain = 0;
    for (const auto& c : cover) max_gain = std::max(max_gain, (c & undominated).count());
    if (max_gain == 0) return;
    int lower = (remaining + max_gain - 1) / max_gain;
    if (static_cast<int>(pick.size()) + lower >= best) return;

    // Branch on the undominated target with the fewest dominators.
    int pivot = -1;
    std::vector<int> options;
    undominated.for_each([&](int t) {
      std::vector<int> opts;
      for (int i = 0; i < static_cast<int>(cand.size()); ++i)
        if (cover[i].test(t)) opts.push_back(i);
      if (pivot == -1 || opts.size() < options.size()) {
        pivot = t;
        options = std::move(opts);
      }
    });
    // Dominance: drop options whose remaining coverage is contained in another's.
    std::vector<VertexBits> gain;
    for (int i : options) gain.push_back(cover[i] & undominated);
    std::vector<int> kept;
    for (std::size_t a = 0; a < options.size(); ++a) {
      bool dominated = false;
      for (std::size_t b = 0; b < options.size() && !dominated; ++b) {
        if (a == b || !gain[a].subset_of(gain[b])) continue;
        dominated = !(gain[a] == gain[b]) || b < a;
      }
      if (!dominated) kept.push_back(static_cast<int>(a));
    }
    std::stable_sort(kept.begin(), kept.end(), [&](int a, int b) { return gain[a].count() > gain[b].count(); });
    for (int a : kept) {
      pick.push_back(options[a]);
      run(undominated - gain[a]);
      pick.pop_back();
    }
  }
};

}  // namespace

DominationResult domination_number(const Graph& g, const VertexSet& target, const VertexSet& candidates,
                                   std::uint64_t node_cap) {
  VertexBits tb = g.bits_of(target);
  DominationSearch s{g, {}, {}, node_cap, 0, 0, {}, {}};
  VertexBits covered(g.vertex_count());
  for (Vertex c : canonical_set(candidates)) {
    VertexBits nc = g.neighbor_bits(c);
    nc.set(c);
    nc &= tb;
    if (nc.none()) continue;
    covered |= nc;
    s.cand.push_back(c);
    s.cover.push_back(std::move(nc));
  }
  if (!tb.subset_of(covered)) throw Error("target set is not dominable from the candidates");

  // Greedy upper bound.
  VertexBits left = tb;
  std::vector<int> greedy;
  while (left.any()) {
    int besti = 0, bestg = -1;
    for (int i = 0; i < static_cast<int>(s.cand.size()); ++i) {
      int gain = (s.cover[i] & left).count();
      if (gain > bestg) {
        bestg = gain;
        besti = i;
      }
    }
    greedy.push_back(besti);
    left -= s.cover[besti];
  }
  s.best = static_cast<int>(greedy.size());
  s.best_pick = greedy;
  if (s.best > 0) {
    // Search for anything strictly smaller than the greedy bound.
    s.run(tb);
  }
  DominationResult out;
  out.size = s.best;
  for (int i : s.best_pick) out.witness.push_back(s.cand[i]);
  out.witness = canonical_set(out.witness);
  out.nodes = s.nodes;
  return out;
}

std::vector<std::vector<Vertex>> dominating_path_decomposition(const Graph& g, const SeparatorRecord& s,
                                                               int component_index) {
  if (component_index < 0 || component_index >= static_cast<int>(s.full_components.size()))
    throw Error("component index out of range");
  const VertexSet& target = s.separator;
  VertexBits sub = g.bits_of(s.full_components[component_index]);
  auto dominates_target = [&](const VertexBits& set) {
    VertexBits nb = closed_neighborhood_bits(g, set);
    for (Vertex t : target)
      if (!nb.test(t)) return false;
    return true;
  };
  if (!dominates_target(sub)) throw Error("component does not dominate the separator");

  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : sub.members()) {
      VertexBits trial = sub;
      trial.reset(v);
      if (trial.any() && is_connected_set(g, trial) && dominates_target(trial)) {
        sub = std::move(trial);
        changed = true;
      }
    }
  }

  // Breadth-first tree from the lowest vertex; its root-to-leaf paths are
  // shortest paths, hence induced.
  const int n = g.vertex_count();
  std::vector<Vertex> parent(n, -2);
  std::vector<Vertex> order;
  Vertex root = sub.first();
  parent[root] = -1;
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : g.neighbors(order[i])) {
      if (sub.test(w) && parent[w] == -2) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<char> has_child(n, 0);
  for (Vertex v : order)
    if (parent[v] >= 0) has_child[parent[v]] = 1;
  std::vector<std::vector<Vertex>> paths;
  for (Vertex v : order) {
    if (has_child[v]) continue;
    std::vector<Vertex> p;
    for (Vertex x = v; x != -1; x = parent[x]) p.push_back(x);
    std::reverse(p.begin(), p.end());
    paths.push_back(std::move(p));
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

int max_separator_domination(const Graph& g, const std::vector<VertexSet>& separators) {
  VertexSet all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  int best = 0;
  for (const auto& s : separators) best = std::max(best, domination_number(g, s, all).size);
  return best;
}

}  // namespace sepscope

// ---------------------------------------------------------------------------
// Branching enumeration

namespace sepscope {
namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Mask, Mask>& p) const noexcept {
    return std::hash<Mask>{}(p.first * 0x9E3779B97F4A7C15ull ^ p.second);
  }
};

class Brancher {
 public:
  Brancher(const Graph& g, const BranchingConfig& cfg, const TraceOracle& user)
      : mg_(g), cfg_(cfg), user_(user) {
    if (cfg.k < 1) throw Error("branching needs k >= 1");
  }

  std::vector<Mask> run(Mask present, Mask x) {
    if (!x) {
      if (mg_.connected_within(present)) return {};
      return {Mask{0}};
    }
    if (cfg_.memoize) {
      auto it = memo_.find({present, x});
      if (it != memo_.end()) {
        ++memo_hits;
        return it->second;
      }
    }
    if (++nodes > cfg_.node_cap) throw BudgetExceeded("branching exceeded node cap");

    const int xs = std::popcount(x);
    Mask q_set = 0;
    for (Mask t = present; t; t &= t - 1) {
      int v = std::countr_zero(t);
      Mask nv = (mg_.adj[v] | detail::bit(v)) & x;
      if (2LL * cfg_.k * std::popcount(nv) >= xs) q_set |= detail::bit(v);
    }

    std::unordered_set<Mask> out;
    // Rule 1: q in Q, Y a trace of q in the current graph.
    for (Mask t = q_set; t; t &= t - 1) {
      int q = std::countr_zero(t);
      Mask nq = (mg_.adj[q] | detail::bit(q)) & present;
      for (Mask y : traces(present, q)) {
        for (Mask s : run(present & ~y, x & ~nq)) out.insert(s | y);
      }
    }
    // Rule 2: R avoids Q, |R| = min(k, |present - Q|).
    const Mask rest = present & ~q_set;
    const std::vector<int> pool = detail::mask_members(rest);
    const int r = std::min<int>(cfg_.k, static_cast<int>(pool.size()));
    std::unordered_set<Mask> explored;
    std::vector<int> pick(r);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      Mask nr = 0;
      for (int i : pick) nr |= mg_.adj[pool[i]] | detail::bit(pool[i]);
      Mask x2 = x & nr & ~q_set;
      if (explored.insert(x2).second) {
        for (Mask s : run(rest, x2)) out.insert(s | q_set);
      }
      int i = r - 1;
      while (i >= 0 && pick[i] == static_cast<int>(pool.size()) - r + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }

    std::vector<Mask> result(out.begin(), out.end());
    std::sort(result.begin(), result.end());
    if (cfg_.memoize) memo_.emplace(std::make_pair(present, x), result);
    return result;
  }

  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  std::size_t trace_bound = 0;

 private:
  // Minimal separators of G[present] by closure listing inside each
  // component, plus the empty set when G[present] is disconnected.
  const std::vector<Mask>& separators_of(Mask present) {
    auto it = seps_.find(present);
    if (it != seps_.end()) return it->second;
    std::unordered_set<Mask> found;
    if (!mg_.connected_within(present)) found.insert(0);
    for (Mask left = present; left;) {
      const Mask comp = mg_.component(left, std::countr_zero(left));
      left &= ~comp;
      std::deque<Mask> queue;
      auto add_from = [&](Mask removed) {
        for (Mask rest = comp & ~removed; rest;) {
          const Mask d = mg_.component(rest, std::countr_zero(rest));
          rest &= ~d;
          const Mask sep = mg_.open_nbhd(d) & comp;
          if (sep && found.insert(sep).second) queue.push_back(sep);
        }
      };
      for (Mask t = comp; t; t &= t - 1) {
        const int v = std::countr_zero(t);
        add_from(mg_.adj[v] | detail::bit(v));
      }
      while (!queue.empty()) {
        const Mask sep = queue.front();
        queue.pop_front();
        for (Mask t = sep; t; t &= t - 1) add_from(sep | mg_.adj[std::countr_zero(t)]);
      }
    }
    std::vector<Mask> list(found.begin(), found.end());
    std::sort(list.begin(), list.end());
    return seps_.emplace(present, std::move(list)).first->second;
  }

  std::vector<Mask> traces(Mask present, int q) {
    std::vector<Mask> out;
    if (user_) {
      for (const auto& t : user_(detail::mask_members(present), q)) out.push_back(detail::mask_of(t));
    } else {
      for (Mask s : separators_of(present))
        if (!(s & detail::bit(q))) out.push_back(s & mg_.adj[q]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    trace_bound = std::max(trace_bound, out.size());
    return out;
  }

  MaskGraph mg_;
  BranchingConfig cfg_;
  const TraceOracle& user_;
  std::unordered_map<std::pair<Mask, Mask>, std::vector<Mask>, PairHash> memo_;
  std::unordered_map<Mask, std::vector<Mask>> seps_;
};

}  // namespace

TraceOracle oracle_traces(const Graph& g) {
  if (g.vertex_count() > kOracleHardCap) throw BudgetExceeded("trace oracle limited to 30 vertices");
  auto mg = std::make_shared<MaskGraph>(g);
  return [mg](const VertexSet& present, Vertex q) {
    Mask p = detail::mask_of(present);
    std::vector<Mask> traces;
    Mask s = 0;
    do {
      if (!(s & detail::bit(q)) && mg->is_separator_within(p, s)) traces.push_back(s & mg->adj[q]);
      s = (s - p) & p;
    } while (s != 0);
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    std::vector<VertexSet> out;
    for (Mask t : traces) out.push_back(detail::mask_members(t));
    return out;
  };
}

BranchingResult enumerate_branching(const Graph& g, const BranchingConfig& config, const TraceOracle& traces) {
  if (g.vertex_count() > kBranchingMaxVertices) throw BudgetExceeded("branching limited to 64 vertices");
  Brancher b(g, config, traces);
  MaskGraph mg(g);
  std::vector<Mask> raw = b.run(mg.all(), mg.all());
  BranchingResult out;
  out.raw = masks_to_sets(raw);
  for (Mask m : raw)
    if (m && mg.full_component_count(m, mg.all() & ~m) >= 2) out.minimal.push_back(detail::mask_members(m));
  out.minimal = sorted_sets(std::move(out.minimal));
  out.nodes = b.nodes;
  out.memo_hits = b.memo_hits;
  out.trace_bound = b.trace_bound;
  return out;
}

}  // namespace sepscope
