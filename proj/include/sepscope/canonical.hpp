#pragma once

#include <cstdint>
#include <string>

#include "sepscope/graph.hpp"

namespace sepscope {

/// Largest vertex count accepted by canonical_form.
inline constexpr int kCanonicalFormMaxVertices = 10;

/// Exact canonical form: the lexicographically smallest adjacency string over
/// all relabelings that respect an isomorphism-invariant colour refinement.
/// Two graphs are isomorphic iff their canonical forms are equal.
std::string canonical_form(const Graph& g);

/// Isomorphism-invariant hash (degrees, refined colour classes, triangles).
std::uint64_t fingerprint(const Graph& g);

/// Exact for n <= kCanonicalFormMaxVertices; larger graphs use fingerprints
/// followed by a budgeted backtracking search (BudgetExceeded on exhaustion).
bool are_isomorphic(const Graph& a, const Graph& b, std::uint64_t budget = 50'000'000);

}  // namespace sepscope
