#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sepscope/graph.hpp"

namespace sepscope {

/// A minimal separator S together with its full components.
struct SeparatorRecord {
  VertexSet separator;
  std::vector<VertexSet> full_components;
  std::optional<std::pair<Vertex, Vertex>> witness_pair;
};

/// Components C of G - s with N(C) = s, ordered by smallest member.
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s);
bool is_minimal_separator(const Graph& g, const VertexSet& s);
bool is_minimal_separator(const Graph& g, const VertexBits& s);

/// Builds the record for a minimal separator; throws Error otherwise. The
/// witness pair is the smallest vertex of the first two full components.
SeparatorRecord make_separator_record(const Graph& g, const VertexSet& s);

/// Checks every record invariant (nonempty, >= 2 full components, N(C) = S,
/// components disjoint from S and pairwise anti-complete).
bool record_is_valid(const Graph& g, const SeparatorRecord& rec);

inline constexpr int kOracleDefaultCap = 16;
inline constexpr int kOracleHardCap = 30;

/// Subset-testing oracle; OpenMP over the 2^n subsets. Throws BudgetExceeded
/// when n exceeds `vertex_cap`.
std::vector<VertexSet> enumerate_oracle(const Graph& g, int vertex_cap = kOracleDefaultCap);
/// Single-threaded reference for enumerate_oracle.
std::vector<VertexSet> enumerate_oracle_serial(const Graph& g, int vertex_cap = kOracleDefaultCap);

/// Closure listing: seeds N(C) for components C of G - N[v], then expands
/// every S through x in S by the components of G - (S u N[x]).
/// Parallel variant processes each frontier round with OpenMP.
std::vector<VertexSet> enumerate_closure(const Graph& g);
std::vector<VertexSet> enumerate_closure_serial(const Graph& g);

/// The unique minimal u-v separator contained in N(v).
SeparatorRecord close_separator(const Graph& g, Vertex u, Vertex v);

/// Component of u in G - s (s must not contain u).
VertexSet component_of(const Graph& g, const VertexSet& s, Vertex u);

/// True when u and v lie in two distinct full components of s.
bool is_minimal_uv_separator(const Graph& g, const VertexSet& s, Vertex u, Vertex v);

/// s1 <=_{u,v} s2: u's component in G - s1 is contained in u's component in G - s2.
bool separator_leq(const Graph& g, const SeparatorRecord& s1, const SeparatorRecord& s2, Vertex u, Vertex v);

struct TraceFamily {
  Vertex anchor_vertex = -1;
  std::vector<VertexSet> traces;  // deduplicated, lexicographic
};

/// {N(v) & S : S in separators, v not in S}.
TraceFamily trace_family(const Graph& g, Vertex v, const std::vector<VertexSet>& separators);

struct ShatterResult {
  int dimension = 0;
  VertexSet witness;
  bool exact = true;  // false: search stopped at the size cap, dimension is a lower bound
};

ShatterResult shattered_set_max(const TraceFamily& family, int size_cap = 20);

struct DominationResult {
  int size = 0;
  VertexSet witness;
  std::uint64_t nodes = 0;
};

/// Minimum X subset of candidates with target inside N[X]. Exact branch and
/// bound; BudgetExceeded past node_cap, Error when target is not dominable.
DominationResult domination_number(const Graph& g, const VertexSet& target, const VertexSet& candidates,
                                   std::uint64_t node_cap = std::uint64_t{1} << 24);

/// Splits a minimal connected S-dominating subgraph of the selected full
/// component into the root-to-leaf paths of a breadth-first tree. Each path
/// is listed from the root.
std::vector<std::vector<Vertex>> dominating_path_decomposition(const Graph& g, const SeparatorRecord& s,
                                                               int component_index);

// ---------------------------------------------------------------------------
// Branching enumeration over shrinking active sets.

/// Returns the traces {N(q) & S : S minimal separator of G[present], q not in S}
/// in original labels. The empty set counts as a separator of a disconnected
/// G[present].
using TraceOracle = std::function<std::vector<VertexSet>(const VertexSet& present, Vertex q)>;

struct BranchingConfig {
  int k = 1;                                   // domination bound
  std::uint64_t node_cap = std::uint64_t{1} << 22;
  bool memoize = true;
};

struct BranchingResult {
  std::vector<VertexSet> raw;       // the returned collection as built
  std::vector<VertexSet> minimal;   // raw filtered to minimal separators of g
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  std::size_t trace_bound = 0;      // largest trace family seen (the instance's c)
};

inline constexpr int kBranchingMaxVertices = 64;

/// Default oracle: subset enumeration on G[present].
TraceOracle oracle_traces(const Graph& g);

BranchingResult enumerate_branching(const Graph& g, const BranchingConfig& config,
                                    const TraceOracle& traces = {});

/// Largest domination number over the minimal separators of g.
int max_separator_domination(const Graph& g, const std::vector<VertexSet>& separators);

}  // namespace sepscope
