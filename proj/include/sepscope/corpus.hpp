#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sepscope/graph.hpp"

namespace sepscope {

/// One representative per isomorphism class, by vertex augmentation with
/// canonical-form dedupe. Requires n <= kCanonicalFormMaxVertices.
std::vector<Graph> graphs_up_to_iso(int n, bool connected_only);

/// Concatenation of graphs_up_to_iso(n, connected_only) over n = 1..max_n.
std::vector<Graph> graphs_up_to(int max_n, bool connected_only);

/// Seeded G(n, p) with n drawn from [min_n, max_n] and p from [20%, 60%].
std::vector<Graph> random_graphs(int count, int min_n, int max_n, std::uint64_t seed);

Graph random_graph(int n, int percent, std::mt19937_64& rng);

}  // namespace sepscope
