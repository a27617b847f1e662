#include "sepscope/detectors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "mask_graph.hpp"
#include "sepscope/canonical.hpp"

namespace sepscope {

using detail::bit;
using detail::Mask;
using detail::MaskGraph;

namespace {

struct BudgetHit {};

struct Counter {
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  void tick() {
    if (++nodes > budget) throw BudgetHit{};
  }
};

}  // namespace

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent_exhaustive: return "absent_exhaustive";
    case SearchStatus::unknown_budget: return "unknown_budget";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Induced subgraph

SearchVerdict<Embedding> find_induced_subgraph(const Graph& g, const Graph& h, std::uint64_t budget) {
  SearchVerdict<Embedding> out;
  const int hn = h.vertex_count(), gn = g.vertex_count();
  if (hn > gn || h.edge_count() > g.edge_count()) return out;

  // Place h-vertices so each one after the first of its component has a
  // placed neighbour; higher degree first.
  std::vector<int> order;
  std::vector<char> placed(hn, 0);
  while (static_cast<int>(order.size()) < hn) {
    int best = -1, best_key = -1;
    for (int v = 0; v < hn; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (Vertex w : h.neighbors(v)) links += placed[w];
      int key = links * 1000 + h.degree(v);
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }

  Counter counter{budget};
  Embedding map(hn, -1);
  VertexBits used(gn);
  std::function<bool(int)> place = [&](int depth) -> bool {
    if (depth == hn) return true;
    counter.tick();
    int v = order[depth];
    VertexBits cand = g.all_vertices() - used;
    for (int d = 0; d < depth; ++d) {
      int w = order[d];
      if (h.adjacent(v, w)) {
        cand &= g.neighbor_bits(map[w]);
      } else {
        cand -= g.neighbor_bits(map[w]);
      }
    }
    bool hit = false;
    cand.for_each([&](Vertex x) {
      if (hit || g.degree(x) < h.degree(v)) return;
      map[v] = x;
      used.set(x);
      if (place(depth + 1)) hit = true;
      used.reset(x);
      if (!hit) map[v] = -1;
    });
    return hit;
  };
  try {
    if (place(0)) {
      out.status = SearchStatus::found;
      out.witness = map;
    }
  } catch (const BudgetHit&) {
    out.status = SearchStatus::unknown_budget;
  }
  out.nodes_explored = counter.nodes;
  return out;
}

// ---------------------------------------------------------------------------
// Induced minors

bool validate_minor(const Graph& g, const Graph& h, const MinorWitness& w) {
  const int hn = h.vertex_count();
  if (static_cast<int>(w.branch_sets.size()) != hn) return false;
  std::vector<VertexBits> sets;
  VertexBits seen(g.vertex_count());
  for (const auto& b : w.branch_sets) {
    if (b.empty()) return false;
    for (Vertex v : b)
      if (!g.valid_vertex(v)) return false;
    VertexBits bb = g.bits_of(b);
    if (bb.count() != static_cast<int>(b.size()) || bb.intersects(seen) || !is_connected_set(g, bb)) return false;
    seen |= bb;
    sets.push_back(std::move(bb));
  }
  for (int i = 0; i < hn; ++i) {
    VertexBits ni = open_neighborhood_bits(g, sets[i]);
    for (int j = i + 1; j < hn; ++j)
      if (ni.intersects(sets[j]) != h.adjacent(i, j)) return false;
  }
  return true;
}

namespace {

class MinorSearch {
 public:
  MinorSearch(const Graph& g, const Graph& h, Counter& c) : mg_(g), h_(h), counter_(c), sets_(h.vertex_count(), 0) {
    // Breadth-first order over h so later branch sets must touch earlier ones.
    const int hn = h.vertex_count();
    std::vector<char> seen(hn, 0);
    for (int s = 0; s < hn; ++s) {
      if (seen[s]) continue;
      std::vector<int> queue{s};
      seen[s] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        order_.push_back(queue[i]);
        for (Vertex w : h.neighbors(queue[i]))
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
      }
    }
  }

  bool run() { return place(0, 0); }

  MinorWitness witness() const {
    MinorWitness w;
    for (Mask m : sets_) w.branch_sets.push_back(detail::mask_members(m));
    return w;
  }

 private:
  bool place(int depth, Mask used) {
    if (depth == static_cast<int>(order_.size())) return true;
    const int v = order_[depth];
    Mask allowed = mg_.all() & ~used;
    Mask must_touch_any = 0;
    std::vector<Mask> must_touch;
    for (int d = 0; d < depth; ++d) {
      int w = order_[d];
      if (h_.adjacent(v, w)) {
        must_touch.push_back(mg_.open_nbhd(sets_[w]));
        must_touch_any |= must_touch.back();
      } else {
        allowed &= ~mg_.closed_nbhd(sets_[w]);
      }
    }
    const int remaining = static_cast<int>(order_.size()) - depth;
    if (std::popcount(allowed) < remaining) return false;
    // A set touching an earlier neighbour can be anchored there.
    Mask starts = must_touch.empty() ? allowed : (allowed & must_touch.front());
    Mask banned = 0;
    for (Mask t = starts; t; t &= t - 1) {
      int s = std::countr_zero(t);
      if (grow(depth, v, bit(s), allowed & mg_.adj[s] & ~banned & ~bit(s), banned | bit(s), allowed, must_touch,
               used))
        return true;
      banned |= bit(s);
    }
    return false;
  }

  bool grow(int depth, int v, Mask set, Mask cand, Mask banned, Mask allowed, const std::vector<Mask>& touch,
            Mask used) {
    counter_.tick();
    bool ok = true;
    for (Mask t : touch)
      if (!(set & t)) {
        ok = false;
        break;
      }
    if (ok) {
      sets_[v] = set;
      if (place(depth + 1, used | set)) return true;
      sets_[v] = 0;
    }
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      Mask next = (cand | (mg_.adj[w] & allowed)) & ~banned & ~set & ~bit(w);
      if (grow(depth, v, set | bit(w), next, banned, allowed, touch, used)) return true;
      banned |= bit(w);
    }
    return false;
  }

  MaskGraph mg_;
  const Graph& h_;
  Counter& counter_;
  std::vector<Mask> sets_;
  std::vector<int> order_;
};

}  // namespace

SearchVerdict<MinorWitness> find_induced_minor(const Graph& g, const Graph& h, std::uint64_t budget, int vertex_cap) {
  if (g.vertex_count() > vertex_cap || g.vertex_count() > 64)
    throw Error("induced-minor search limited to " + std::to_string(std::min(vertex_cap, 64)) + " vertices");
  SearchVerdict<MinorWitness> out;
  if (h.vertex_count() > g.vertex_count()) return out;
  Counter counter{budget};
  MinorSearch search(g, h, counter);
  try {
    if (search.run()) {
      out.status = SearchStatus::found;
      out.witness = search.witness();
    }
  } catch (const BudgetHit&) {
    out.status = SearchStatus::unknown_budget;
  }
  out.nodes_explored = counter.nodes;
  return out;
}

SearchVerdict<MinorWitness> find_induced_minor_reference(const Graph& g, const Graph& h) {
  if (g.vertex_count() > 9) throw Error("reference minor search limited to 9 vertices");
  const std::string target = canonical_form(h);
  std::unordered_map<std::string, bool> memo;
  std::uint64_t nodes = 0;
  std::function<bool(const Graph&)> reach = [&](const Graph& cur) -> bool {
    if (cur.vertex_count() < h.vertex_count() || cur.edge_count() < h.edge_count()) return false;
    std::string key = canonical_form(cur);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    ++nodes;
    bool found = false;
    if (cur.vertex_count() == h.vertex_count()) {
      found = key == target;
    } else {
      for (Vertex v = 0; v < cur.vertex_count() && !found; ++v) {
        std::vector<Vertex> keep;
        for (Vertex u = 0; u < cur.vertex_count(); ++u)
          if (u != v) keep.push_back(u);
        found = reach(induced_subgraph(cur, keep).graph);
      }
      for (auto [a, b] : cur.edges()) {
        if (found) break;
        std::vector<Vertex> pair{a, b};
        found = reach(contract_path(cur, pair).graph);
      }
    }
    memo.emplace(std::move(key), found);
    return found;
  };
  SearchVerdict<MinorWitness> out;
  out.status = reach(g) ? SearchStatus::found : SearchStatus::absent_exhaustive;
  out.nodes_explored = nodes;
  return out;
}

// ---------------------------------------------------------------------------
// Creatures

std::string creature_violation(const Graph& g, const CreatureWitness& w) {
  const int k = w.order;
  if (k < 1) return "order must be positive";
  if (static_cast<int>(w.x_row.size()) != k || static_cast<int>(w.y_row.size()) != k) return "|X| = |Y| = order";
  for (Vertex v : w.a_side)
    if (!g.valid_vertex(v)) return "vertex out of range";
  for (Vertex v : w.b_side)
    if (!g.valid_vertex(v)) return "vertex out of range";
  for (int i = 0; i < k; ++i)
    if (!g.valid_vertex(w.x_row[i]) || !g.valid_vertex(w.y_row[i])) return "vertex out of range";
  VertexBits A = g.bits_of(w.a_side), B = g.bits_of(w.b_side);
  VertexBits X = g.bits_of(w.x_row), Y = g.bits_of(w.y_row);
  if (A.count() != static_cast<int>(w.a_side.size()) || B.count() != static_cast<int>(w.b_side.size()) ||
      X.count() != k || Y.count() != k)
    return "sets contain repeated vertices";
  if (A.intersects(B) || A.intersects(X) || A.intersects(Y) || B.intersects(X) || B.intersects(Y) || X.intersects(Y))
    return "A, B, X, Y mutually disjoint";
  if (A.none() || B.none()) return "A and B nonempty";
  if (!is_connected_set(g, A)) return "G[A] connected";
  if (!is_connected_set(g, B)) return "G[B] connected";
  if (!is_anticomplete(g, w.a_side, w.b_side)) return "A anti-complete B";
  VertexBits na = open_neighborhood_bits(g, A), nb = open_neighborhood_bits(g, B);
  if (na.intersects(Y)) return "A anti-complete Y";
  if (nb.intersects(X)) return "B anti-complete X";
  for (int i = 0; i < k; ++i) {
    if (!na.test(w.x_row[i])) return "x_i has a neighbour in A";
    if (!nb.test(w.y_row[i])) return "y_i has a neighbour in B";
    for (int j = 0; j < k; ++j)
      if (g.adjacent(w.x_row[i], w.y_row[j]) != (i == j)) return "x_i y_j edge iff i = j";
  }
  return {};
}

namespace {

class CreatureSearch {
 public:
  CreatureSearch(const Graph& g, int k, Counter& c) : g_(g), mg_(g), k_(k), counter_(c) {
    for (auto e : g.edges()) edges_.push_back(e);
  }

  bool run() { return choose(0, 0); }
  const CreatureWitness& witness() const { return witness_; }

 private:
  bool choose(std::size_t from, int depth) {
    if (depth == k_) return test();
    for (std::size_t e = from; e < edges_.size(); ++e) {
      for (int orient = 0; orient < (depth == 0 ? 1 : 2); ++orient) {
        Vertex x = orient ? edges_[e].second : edges_[e].first;
        Vertex y = orient ? edges_[e].first : edges_[e].second;
        if ((xm_ | ym_) & (bit(x) | bit(y))) continue;
        if ((mg_.adj[x] & ym_) || (mg_.adj[y] & xm_)) continue;
        counter_.tick();
        xs_.push_back(x);
        ys_.push_back(y);
        xm_ |= bit(x);
        ym_ |= bit(y);
        if (choose(e + 1, depth + 1)) return true;
        xs_.pop_back();
        ys_.pop_back();
        xm_ &= ~bit(x);
        ym_ &= ~bit(y);
      }
    }
    return false;
  }

  // Is there a connected D inside `dom_region` dominating `targets`, plus a
  // component of far_region - N[D] dominating `far_targets`?
  bool test() {
    const Mask all = mg_.all();
    const Mask rest = all & ~xm_ & ~ym_;
    Mask va = rest & ~mg_.open_nbhd(ym_);
    Mask vb = rest & ~mg_.open_nbhd(xm_);
    for (Mask t = xm_; t; t &= t - 1)
      if (!(mg_.adj[std::countr_zero(t)] & va)) return false;
    for (Mask t = ym_; t; t &= t - 1)
      if (!(mg_.adj[std::countr_zero(t)] & vb)) return false;
    swapped_ = std::popcount(vb) < std::popcount(va);
    if (swapped_) {
      near_region_ = vb;
      far_region_ = va;
      near_targets_ = ym_;
      far_targets_ = xm_;
    } else {
      near_region_ = va;
      far_region_ = vb;
      near_targets_ = xm_;
      far_targets_ = ym_;
    }
    Mask banned = 0;
    for (Mask t = near_region_; t; t &= t - 1) {
      int s = std::countr_zero(t);
      if (grow(bit(s), near_region_ & mg_.adj[s] & ~banned & ~bit(s), banned | bit(s))) return true;
      banned |= bit(s);
    }
    return false;
  }

  /// Component of far_region - N[d] dominating far_targets, or 0.
  Mask partner(Mask d) const {
    Mask pool = far_region_ & ~mg_.closed_nbhd(d);
    while (pool) {
      Mask c = mg_.component(pool, std::countr_zero(pool));
      pool &= ~c;
      bool dom = true;
      for (Mask t = far_targets_; t && dom; t &= t - 1) dom = (mg_.adj[std::countr_zero(t)] & c) != 0;
      if (dom) return c;
    }
    return 0;
  }

  bool grow(Mask set, Mask cand, Mask banned) {
    counter_.tick();
    Mask other = partner(set);
    if (!other) return false;  // supersets only shrink the far side
    bool dominated = true;
    for (Mask t = near_targets_; t && dominated; t &= t - 1) dominated = (mg_.adj[std::countr_zero(t)] & set) != 0;
    if (dominated) {
      record(set, other);
      return true;
    }
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      Mask next = (cand | (mg_.adj[w] & near_region_)) & ~banned & ~set & ~bit(w);
      if (grow(set | bit(w), next, banned)) return true;
      banned |= bit(w);
    }
    return false;
  }

  void record(Mask near, Mask far) {
    witness_.order = k_;
    witness_.a_side = detail::mask_members(swapped_ ? far : near);
    witness_.b_side = detail::mask_members(swapped_ ? near : far);
    witness_.x_row = xs_;
    witness_.y_row = ys_;
  }

  const Graph& g_;
  MaskGraph mg_;
  int k_;
  Counter& counter_;
  std::vector<Edge> edges_;
  std::vector<Vertex> xs_, ys_;
  Mask xm_ = 0, ym_ = 0;
  bool swapped_ = false;
  Mask near_region_ = 0, far_region_ = 0, near_targets_ = 0, far_targets_ = 0;
  CreatureWitness witness_;
};

}  // namespace

SearchVerdict<CreatureWitness> find_creature(const Graph& g, int k, std::uint64_t budget) {
  if (k < 1) throw Error("creature order must be positive");
  if (g.vertex_count() > kCreatureVertexCap) throw Error("creature search limited to 64 vertices");
  SearchVerdict<CreatureWitness> out;
  if (2 * k + 2 > g.vertex_count()) return out;
  Counter counter{budget};
  CreatureSearch search(g, k, counter);
  try {
    if (search.run()) {
      out.status = SearchStatus::found;
      out.witness = search.witness();
    }
  } catch (const BudgetHit&) {
    out.status = SearchStatus::unknown_budget;
  }
  out.nodes_explored = counter.nodes;
  return out;
}

int max_creature_order(const Graph& g, int cap, std::uint64_t budget) {
  int best = 0;
  for (int k = 1; k <= cap; ++k) {
    auto v = find_creature(g, k, budget);
    if (v.status == SearchStatus::unknown_budget)
      throw BudgetExceeded("creature search of order " + std::to_string(k) + " exhausted its budget");
    if (v.status != SearchStatus::found) break;  // dropping a pair keeps a creature, so orders are downward closed
    best = k;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Long induced cycles

SearchVerdict<std::vector<Vertex>> longest_induced_cycle_at_least(const Graph& g, int r, std::uint64_t budget) {
  SearchVerdict<std::vector<Vertex>> out;
  r = std::max(r, 3);
  const int n = g.vertex_count();
  if (r > n) return out;
  Counter counter{budget};
  std::vector<Vertex> path;
  VertexBits blocked(n);  // path vertices and neighbours of non-terminal path vertices
  std::function<bool(Vertex)> extend = [&](Vertex s) -> bool {
    counter.tick();
    Vertex last = path.back();
    for (Vertex v : g.neighbors(last)) {
      if (v <= s || blocked.test(v)) continue;
      // v may touch only `last` and, when closing, the start.
      bool touches_start = path.size() >= 2 && g.adjacent(v, s);
      bool bad = false;
      for (std::size_t i = 1; i + 1 < path.size() && !bad; ++i) bad = g.adjacent(v, path[i]);
      if (bad) continue;
      if (touches_start) {
        if (static_cast<int>(path.size()) + 1 >= r) {
          path.push_back(v);
          return true;
        }
        continue;
      }
      path.push_back(v);
      blocked.set(v);
      if (extend(s)) return true;
      blocked.reset(v);
      path.pop_back();
    }
    return false;
  };
  try {
    for (Vertex s = 0; s < n; ++s) {
      path = {s};
      blocked.clear();
      blocked.set(s);
      if (extend(s)) {
        out.status = SearchStatus::found;
        out.witness = path;
        break;
      }
    }
  } catch (const BudgetHit&) {
    out.status = SearchStatus::unknown_budget;
  }
  out.nodes_explored = counter.nodes;
  return out;
}

// ---------------------------------------------------------------------------
// Monotone subsequences and ladder extraction

namespace {

std::vector<int> best_chain(const std::vector<int>& seq, bool increasing) {
  const int n = static_cast<int>(seq.size());
  auto ok = [&](int i, int j) { return increasing ? seq[j] > seq[i] : seq[j] < seq[i]; };
  std::vector<int> len(n, 1);  // longest chain starting at i
  for (int i = n - 1; i >= 0; --i)
    for (int j = i + 1; j < n; ++j)
      if (ok(i, j)) len[i] = std::max(len[i], len[j] + 1);
  int best = n ? *std::max_element(len.begin(), len.end()) : 0;
  std::vector<int> out;
  int prev = -1;
  for (int need = best; need >= 1; --need) {
    for (int j = prev + 1; j < n; ++j) {
      if (len[j] == need && (prev < 0 || ok(prev, j))) {
        out.push_back(j);
        prev = j;
        break;
      }
    }
  }
  return out;
}

}  // namespace

MonotoneSubsequence monotone_subsequence(const std::vector<int>& seq, int r, int s) {
  if (r < 1 || s < 1) throw Error("monotone_subsequence needs r, s >= 1");
  std::unordered_set<int> distinct(seq.begin(), seq.end());
  if (distinct.size() != seq.size()) throw Error("monotone_subsequence needs distinct values");
  auto inc = best_chain(seq, true), dec = best_chain(seq, false);
  if (static_cast<int>(inc.size()) >= r) return {true, inc};
  if (static_cast<int>(dec.size()) >= s) return {false, dec};
  if (inc.size() >= dec.size()) return {true, inc};
  return {false, dec};
}

MinorWitness extract_skinny_ladder(const Graph& g, const StructureWitness& almost, int k) {
  if (k < 1) throw Error("extract_skinny_ladder needs k >= 1");
  auto find = [&](const std::string& name) -> const std::vector<Vertex>& {
    auto it = almost.find(name);
    if (it == almost.end()) throw Error("almost-skinny witness lacks role " + name);
    return it->second;
  };
  const auto& L = find("L");
  auto R = find("R");
  const auto& S = find("S");
  FamilySpec spec;
  spec.family = Family::almost_skinny_ladder;
  spec.k = static_cast<int>(S.size());
  auto report = verify_witness(g, spec, almost);
  if (!report.ok) throw Error("almost-skinny witness invalid: " + report.violations.front());

  auto span_on = [&](Vertex s, const std::vector<Vertex>& path) {
    int lo = -1, hi = -1;
    for (int i = 0; i < static_cast<int>(path.size()); ++i)
      if (g.adjacent(s, path[i])) {
        if (lo < 0) lo = i;
        hi = i;
      }
    return std::make_pair(lo, hi);
  };
  std::vector<Vertex> spokes = S;
  std::sort(spokes.begin(), spokes.end(), [&](Vertex a, Vertex b) { return span_on(a, L).first < span_on(b, L).first; });
  std::vector<int> highest;
  for (Vertex s : spokes) highest.push_back(span_on(s, R).second);
  auto mono = monotone_subsequence(highest, k, k);
  if (static_cast<int>(mono.indices.size()) < k)
    throw Error("monotone subsequence shorter than k; the witness has too few spokes");
  if (!mono.increasing) std::reverse(R.begin(), R.end());
  std::vector<Vertex> chosen;
  for (int i = 0; i < k; ++i) chosen.push_back(spokes[mono.indices[i]]);

  auto branch_sets = [&](const std::vector<Vertex>& path) {
    std::vector<std::pair<int, int>> spans;
    for (Vertex s : chosen) spans.push_back(span_on(s, path));
    std::vector<VertexSet> sets;
    for (int i = 0; i < k; ++i) {
      int lo = spans[i].first;
      int hi = i + 1 < k ? spans[i + 1].first - 1 : spans[i].second;
      sets.push_back(canonical_set({path.begin() + lo, path.begin() + hi + 1}));
    }
    return sets;
  };
  MinorWitness w;
  for (auto& b : branch_sets(L)) w.branch_sets.push_back(std::move(b));
  for (Vertex s : chosen) w.branch_sets.push_back({s});
  for (auto& b : branch_sets(R)) w.branch_sets.push_back(std::move(b));
  return w;
}

}  // namespace sepscope
