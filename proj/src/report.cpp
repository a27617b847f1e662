#include "sepscope/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sepscope {

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return fnv1a_digest(ss.str());
}

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["config"] = config;
  j["results"] = results;
  j["complete"] = complete;
  if (timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string RunReport::dump() const { return to_json().dump(2) + "\n"; }

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

Json witness_json(const StructureWitness& w) {
  Json j = Json::object();
  for (const auto& [role, vs] : w) j[role] = vs;
  return j;
}

Json layout_json(const BackboneLayout& l) { return {{"length", l.length}, {"attachments", l.attachments}}; }

Json spec_json(const FamilySpec& s) {
  Json j{{"family", family_name(s.family)}, {"k", s.k}};
  if (!s.path_lengths.empty()) j["path_lengths"] = s.path_lengths;
  if (s.arm_length) j["arm_length"] = s.arm_length;
  if (s.family == Family::claw_feral || s.family == Family::paw_feral) j["c"] = s.c;
  if (s.family == Family::subdivision) j["f"] = s.f;
  if (s.base_graph) j["base_graph"] = graph_json(*s.base_graph);
  if (s.left_layout) j["left_layout"] = layout_json(*s.left_layout);
  if (s.right_layout) j["right_layout"] = layout_json(*s.right_layout);
  if (s.layout_seed) j["layout_seed"] = *s.layout_seed;
  return j;
}

Json creature_json(const CreatureWitness& w) {
  return {{"A", w.a_side}, {"B", w.b_side}, {"X", w.x_row}, {"Y", w.y_row}, {"order", w.order}};
}

Json type_check_json(const TypeCheck& c) {
  Json j{{"type", family_type_name(c.type)},
         {"k", c.k},
         {"forbids", c.forbids},
         {"label", c.label},
         {"representatives", c.representatives},
         {"effective_length_cap", c.effective_length_cap}};
  if (c.avoiding_spec) j["avoiding_spec"] = spec_json(*c.avoiding_spec);
  if (c.avoiding) j["avoiding_graph"] = graph_json(c.avoiding->graph);
  Json hits = Json::object();
  for (auto [member, count] : c.member_hits) hits[std::to_string(member)] = count;
  j["member_hits"] = hits;
  return j;
}

Json verdict_json(const ClassificationVerdict& v) {
  Json ev = Json::array();
  for (const auto& c : v.evidence) ev.push_back(type_check_json(c));
  Json j{{"status", class_status_name(v.status)},
         {"k_certificate", v.k_certificate},
         {"evidence", {{"checks", ev}, {"note", v.note}}},
         {"caps", {{"k_max", v.k_max}, {"length_cap", v.length_cap}}}};
  j["evidence"]["forbidden_clique"] = v.forbidden_clique ? Json(*v.forbidden_clique) : Json(nullptr);
  return j;
}

}  // namespace sepscope
