#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "sepscope/classifier.hpp"
#include "sepscope/detectors.hpp"
#include "sepscope/families.hpp"
#include "sepscope/graph.hpp"

namespace sepscope {

using Json = nlohmann::json;  // std::map-backed, so object keys are emitted sorted

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_digest(const std::string& bytes);
std::string file_digest(const std::string& path);

struct RunReport {
  std::string command;
  Json inputs = Json::object();   // path -> digest
  Json config = Json::object();
  Json results = Json::object();
  std::int64_t elapsed_ms = 0;
  bool complete = true;
  bool timing = true;  // false drops elapsed_ms so identical runs are byte-identical

  Json to_json() const;
  std::string dump() const;  // two-space indent, trailing newline
};

Json graph_json(const Graph& g);
Json witness_json(const StructureWitness& w);
Json spec_json(const FamilySpec& s);
Json layout_json(const BackboneLayout& l);
Json creature_json(const CreatureWitness& w);
Json type_check_json(const TypeCheck& c);
Json verdict_json(const ClassificationVerdict& v);

}  // namespace sepscope
