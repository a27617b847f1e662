#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepscope/detectors.hpp"
#include "sepscope/families.hpp"
#include "sepscope/graph.hpp"

namespace sepscope {

struct ForbiddenFamily {
  std::vector<Graph> members;
  int h = 0;  // largest member size
};

/// Throws Error on an empty list or an empty member graph.
ForbiddenFamily make_forbidden_family(std::vector<Graph> members);

/// The seven family types of the finite-forbidden-set dichotomy.
enum class FamilyType { theta, prism, pyramid, ladder_theta, ladder_prism, claw, paw };

const std::vector<FamilyType>& all_family_types();
std::string family_type_name(FamilyType t);
Family family_of(FamilyType t);

enum class ClassStatus { strongly_quasi_tame, tame, feral, inconclusive };
std::string class_status_name(ClassStatus s);

struct ClassifierConfig {
  int sampled_layouts = 64;
  std::uint64_t seed = 1;
  std::uint64_t search_budget = 10'000'000;        // per induced-subgraph search
  std::uint64_t representative_cap = 2'000'000;    // per (type, k)
};

struct TypeCheck {
  FamilyType type = FamilyType::theta;
  int k = 0;
  bool forbids = false;
  std::string label;                     // "exhaustive" or "canonical+sampled"
  std::uint64_t representatives = 0;     // instances examined
  int effective_length_cap = 0;
  // forbids == false: an instance avoiding every member.
  std::optional<FamilySpec> avoiding_spec;
  std::optional<Generated> avoiding;
  // forbids == true: how many representatives each member was found in (first hit wins).
  std::map<int, std::uint64_t> member_hits;
};

/// Lengths with at least 2h+3 vertices are interchangeable for containing a
/// graph on at most h vertices, so the search caps path lengths there.
int effective_length_cap(int length_cap, int h);

/// Every representative of `type` at parameter k (path lengths up to
/// length_cap; ladder types on the canonical layout plus sampled layouts)
/// contains a member of hh. Throws BudgetExceeded when the representative
/// set exceeds the cap or a containment search exhausts its budget.
TypeCheck forbids_family_type(const ForbiddenFamily& hh, FamilyType type, int k, int length_cap,
                              const ClassifierConfig& config = {});

struct ClassificationVerdict {
  ClassStatus status = ClassStatus::inconclusive;
  int k_certificate = 0;
  int k_max = 0;
  int length_cap = 0;
  std::vector<TypeCheck> evidence;  // checks performed at the deciding k
  std::optional<int> forbidden_clique;  // smallest complete member
  std::string note;
};

/// Defaults: k_max = 6, length_cap = 5h (when passed 0).
ClassificationVerdict classify(const ForbiddenFamily& hh, int k_max = 6, int length_cap = 0,
                               const ClassifierConfig& config = {});

/// Contracts the middle edge of induced paths on >= 5h vertices whose
/// internal vertices have degree 2, until none remains. Requires h > 5.
Graph reduce_degree_two_paths(const Graph& g, int h);

/// True when g contains some member of hh as an induced subgraph; the
/// member index is returned through `which`. Throws BudgetExceeded.
bool contains_member(const Graph& g, const ForbiddenFamily& hh, std::uint64_t budget, int* which = nullptr);

}  // namespace sepscope
