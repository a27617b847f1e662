#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sepscope/graph.hpp"

namespace sepscope {

enum class Family {
  theta,
  prism,
  pyramid,
  ladder_theta,
  ladder_prism,
  ladder,
  claw,
  paw,
  long_claw,
  long_paw,
  skinny_ladder,
  almost_skinny_ladder,
  twisted_ladder,
  claw_feral,
  paw_feral,
  subdivision,
};

std::string family_name(Family f);
/// Accepts underscores or hyphens ("skinny-ladder").
std::optional<Family> parse_family(const std::string& name);
const std::vector<Family>& all_families();

/// Positions (0-based) on a backbone path that one attachment vertex sees.
using Attachment = std::vector<int>;

struct BackboneLayout {
  int length = 0;                        // backbone vertex count
  std::vector<Attachment> attachments;  // one entry per attached vertex, in index order
};

struct FamilySpec {
  Family family = Family::theta;
  int k = 3;
  std::vector<int> path_lengths;  // vertex counts; empty selects the definitional minimum
  int arm_length = 0;             // 0 selects the family default (k, or 6 for feral gluings)
  int c = 2;                      // gluing depth for claw_feral / paw_feral
  int f = 1;                      // subdivision parameter
  std::optional<Graph> base_graph;
  std::optional<BackboneLayout> left_layout;   // L of ladder types / almost-skinny ladders
  std::optional<BackboneLayout> right_layout;  // R of k-ladders / almost-skinny ladders
  std::optional<std::uint64_t> layout_seed;    // random layouts when no explicit layout is given
};

/// Role name -> vertices. Path roles are listed in path order.
using StructureWitness = std::map<std::string, std::vector<Vertex>>;

struct Generated {
  Graph graph;
  StructureWitness witness;
};

/// Throws Error when a parameter is below its definitional minimum.
Generated generate(const FamilySpec& spec);

struct WitnessReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Clause-by-clause check of the family definition. Throws Error for
/// unknown role names or out-of-range vertices.
WitnessReport verify_witness(const Graph& g, const FamilySpec& spec, const StructureWitness& w);

/// Replaces every edge by a path with f new internal vertices.
Graph subdivide(const Graph& g, int f);

/// Random backbone layout: `count` disjoint intervals in random order, each
/// attachment seeing a nonempty subset of its interval that includes both
/// interval ends.
BackboneLayout random_layout(int count, std::uint64_t seed);
/// One private backbone vertex per attachment, in order.
BackboneLayout canonical_layout(int count);

/// Planted faults for the acceptance mutation mode.
enum class GeneratorFault { none, theta_chord, twisted_ladder_drop_twins };
void set_generator_fault(GeneratorFault fault);
GeneratorFault generator_fault();

/// Uniform integer in [lo, hi]. The engine output is fixed by the standard;
/// the range reduction is ours so results match across standard libraries.
int uniform_int(std::mt19937_64& rng, int lo, int hi);

}  // namespace sepscope
