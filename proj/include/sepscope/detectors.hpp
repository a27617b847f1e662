#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepscope/families.hpp"
#include "sepscope/graph.hpp"

namespace sepscope {

enum class SearchStatus { found, absent_exhaustive, unknown_budget };

std::string status_name(SearchStatus s);

template <class W>
struct SearchVerdict {
  SearchStatus status = SearchStatus::absent_exhaustive;
  std::optional<W> witness;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// h-vertex i maps to g-vertex embedding[i]; adjacency and non-adjacency preserved.
using Embedding = std::vector<Vertex>;

SearchVerdict<Embedding> find_induced_subgraph(const Graph& g, const Graph& h,
                                               std::uint64_t budget = kDefaultSearchBudget);

/// branch_sets[i] is the branch set of h-vertex i.
struct MinorWitness {
  std::vector<VertexSet> branch_sets;
};

/// Branch sets connected and disjoint, and the contracted graph on them equals h.
bool validate_minor(const Graph& g, const Graph& h, const MinorWitness& w);

inline constexpr int kMinorVertexCap = 14;

/// Branch-set growth with lowest-index anchoring.
SearchVerdict<MinorWitness> find_induced_minor(const Graph& g, const Graph& h,
                                               std::uint64_t budget = kDefaultSearchBudget,
                                               int vertex_cap = kMinorVertexCap);

/// Reference: delete/contract recursion with canonical-form memo; n <= 9,
/// returns only a yes/no verdict.
SearchVerdict<MinorWitness> find_induced_minor_reference(const Graph& g, const Graph& h);

struct CreatureWitness {
  VertexSet a_side;
  VertexSet b_side;
  std::vector<Vertex> x_row;
  std::vector<Vertex> y_row;
  int order = 0;
};

/// Empty when (A, B, X, Y) satisfies every creature clause; otherwise the
/// first violated clause.
std::string creature_violation(const Graph& g, const CreatureWitness& w);
inline bool validate_creature(const Graph& g, const CreatureWitness& w) { return creature_violation(g, w).empty(); }

inline constexpr int kCreatureVertexCap = 64;

SearchVerdict<CreatureWitness> find_creature(const Graph& g, int k, std::uint64_t budget = kDefaultSearchBudget);

/// Largest order <= cap that find_creature finds; 0 when none. Throws
/// BudgetExceeded when a level is undecided.
int max_creature_order(const Graph& g, int cap, std::uint64_t budget = kDefaultSearchBudget);

/// Induced cycle on at least r vertices, listed in cycle order.
SearchVerdict<std::vector<Vertex>> longest_induced_cycle_at_least(const Graph& g, int r,
                                                                  std::uint64_t budget = kDefaultSearchBudget);

struct MonotoneSubsequence {
  bool increasing = true;
  std::vector<int> indices;
};

/// A longest increasing subsequence when it reaches length r, else a longest
/// decreasing one when it reaches s, else the longer of the two (ties prefer
/// increasing). Within a direction the index list is lexicographically smallest.
MonotoneSubsequence monotone_subsequence(const std::vector<int>& seq, int r, int s);

/// Turns an almost-skinny-ladder witness with |S| >= (k-1)^2 + 1 into branch
/// sets of a k-skinny-ladder minor, indexed like generate(skinny_ladder, k):
/// l_1..l_k, s_1..s_k, r_1..r_k.
MinorWitness extract_skinny_ladder(const Graph& g, const StructureWitness& almost, int k);

}  // namespace sepscope
