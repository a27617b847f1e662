#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "sepscope/acceptance.hpp"
#include "sepscope/classifier.hpp"
#include "sepscope/detectors.hpp"
#include "sepscope/families.hpp"
#include "sepscope/report.hpp"
#include "sepscope/separators.hpp"

using namespace sepscope;

namespace {

struct Common {
  int threads = 0;
  bool json = false;
  bool no_timing = false;
  std::uint64_t budget = 0;
};

std::uint64_t default_budget(std::uint64_t fallback) {
  if (const char* env = std::getenv("SEPSCOPE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw Error("SEPSCOPE_BUDGET must be a positive integer");
  }
  return fallback;
}

std::vector<int> parse_lengths(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw Error("");
    } catch (...) {
      throw Error("bad --len entry '" + item + "'");
    }
  }
  return out;
}

class Timer {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

RunReport start_report(const std::string& command, const Common& c) {
  RunReport r;
  r.command = command;
  r.timing = !c.no_timing;
  r.config["threads"] = c.threads;
  return r;
}

void emit(RunReport& r, const Timer& t, const Common& c, const std::string& text) {
  r.elapsed_ms = t.ms();
  if (c.json) std::cout << r.dump();
  else std::cout << text;
}

std::string join_set(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal-separator enumeration, structure detection and family classification"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads, "OpenMP threads (0 keeps the runtime default)");
  app.add_flag("--json", common.json, "print the full JSON run report");
  app.add_flag("--no-timing", common.no_timing, "omit elapsed_ms so reports are byte-identical");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a structured graph");
  std::string family_text, len_text, out_path, base_path;
  FamilySpec spec;
  std::uint64_t gen_seed = 0;
  bool gen_seeded = false;
  gen->add_option("family", family_text, "family name")->required();
  gen->add_option("--k", spec.k, "family parameter");
  gen->add_option("--len", len_text, "comma-separated path vertex counts");
  gen->add_option("--arm", spec.arm_length, "arm length of claws and paws");
  gen->add_option("--c", spec.c, "gluing depth for feral families");
  gen->add_option("--f", spec.f, "subdivision parameter");
  gen->add_option("--base", base_path, "base graph for subdivision");
  auto* seed_opt = gen->add_option("--seed", gen_seed, "seed for random layouts");
  gen->add_option("--out", out_path, "write edge list here and the witness to <out>.witness.json");

  // enum
  auto* en = app.add_subcommand("enum", "enumerate minimal separators");
  std::string enum_in, algo = "closure";
  int enum_k = 0, oracle_cap = kOracleDefaultCap;
  bool serial = false;
  en->add_option("graph", enum_in, "edge-list file")->required()->check(CLI::ExistingFile);
  en->add_option("--algo", algo, "oracle, closure or branching")
      ->check(CLI::IsMember({"oracle", "closure", "branching"}));
  en->add_option("--k", enum_k, "branching domination bound (0 measures it)");
  en->add_option("--max-n", oracle_cap, "oracle vertex cap")->check(CLI::Range(1, kOracleHardCap));
  en->add_option("--budget", common.budget, "branching node cap");
  en->add_flag("--serial", serial, "use the single-threaded reference kernels");

  // detect
  auto* det = app.add_subcommand("detect", "search for a structure");
  std::string kind, det_g, det_h;
  int det_k = 2, det_r = 4;
  det->add_option("kind", kind, "creature, subgraph, minor or cycle")
      ->required()
      ->check(CLI::IsMember({"creature", "subgraph", "minor", "cycle"}));
  det->add_option("graph", det_g, "host edge-list file")->required()->check(CLI::ExistingFile);
  det->add_option("pattern", det_h, "pattern edge-list file (subgraph, minor)")->check(CLI::ExistingFile);
  det->add_option("--k", det_k, "creature order");
  det->add_option("--r", det_r, "minimum cycle length");
  det->add_option("--budget", common.budget, "search node budget");

  // classify
  auto* cls = app.add_subcommand("classify", "classify the family excluding a finite set of graphs");
  std::string cls_dir;
  int kmax = 6, length_cap = 0;
  ClassifierConfig ccfg;
  cls->add_option("dir", cls_dir, "directory of edge-list files")->required()->check(CLI::ExistingDirectory);
  cls->add_option("--kmax", kmax, "largest parameter checked")->check(CLI::Range(3, 64));
  cls->add_option("--length-cap", length_cap, "path length cap (0 selects 5h)");
  cls->add_option("--samples", ccfg.sampled_layouts, "sampled ladder layouts per check");
  cls->add_option("--seed", ccfg.seed, "sampling seed");
  cls->add_option("--budget", common.budget, "per-search node budget");

  // verify
  auto* ver = app.add_subcommand("verify", "run the acceptance suite");
  AcceptanceOptions aopt;
  std::string mutate = "none";
  ver->add_option("--filter", aopt.filter, "group, key or criterion number");
  ver->add_option("--mutate", mutate, "planted generator fault")
      ->check(CLI::IsMember({"none", "theta_chord", "twisted_ladder_drop_twins"}));
  ver->add_option("--seed", aopt.seed, "corpus seed");

  CLI11_PARSE(app, argc, argv);
  gen_seeded = seed_opt->count() > 0;

  try {
    if (common.threads > 0) omp_set_num_threads(common.threads);
    Timer timer;

    if (*gen) {
      auto fam = parse_family(family_text);
      if (!fam) throw Error("unknown family '" + family_text + "'");
      spec.family = *fam;
      if (!len_text.empty()) spec.path_lengths = parse_lengths(len_text);
      if (!base_path.empty()) spec.base_graph = read_edge_list_file(base_path);
      if (gen_seeded) spec.layout_seed = gen_seed;
      Generated g = generate(spec);
      auto rep = verify_witness(g.graph, spec, g.witness);
      if (!rep.ok) throw Error("generated witness fails: " + rep.violations.front());
      RunReport r = start_report("gen", common);
      r.config["spec"] = spec_json(spec);
      r.results = {{"n", g.graph.vertex_count()}, {"m", g.graph.edge_count()}, {"witness_ok", rep.ok}};
      if (!out_path.empty()) {
        write_edge_list_file(out_path, g.graph);
        std::ofstream w(out_path + ".witness.json");
        w << witness_json(g.witness).dump(2) << "\n";
        if (!w) throw Error("cannot write " + out_path + ".witness.json");
        r.results["files"] = {out_path, out_path + ".witness.json"};
        emit(r, timer, common,
             "wrote " + out_path + " (n=" + std::to_string(g.graph.vertex_count()) + ", m=" +
                 std::to_string(g.graph.edge_count()) + ")\n");
      } else {
        r.results["graph"] = graph_json(g.graph);
        r.results["witness"] = witness_json(g.witness);
        emit(r, timer, common, to_edge_list(g.graph));
      }
      return 0;
    }

    if (*en) {
      Graph g = read_edge_list_file(enum_in);
      RunReport r = start_report("enum", common);
      r.inputs[enum_in] = file_digest(enum_in);
      r.config["algo"] = algo;
      r.config["serial"] = serial;
      std::vector<VertexSet> seps;
      if (algo == "oracle") {
        r.config["max_n"] = oracle_cap;
        seps = serial ? enumerate_oracle_serial(g, oracle_cap) : enumerate_oracle(g, oracle_cap);
      } else if (algo == "closure") {
        seps = serial ? enumerate_closure_serial(g) : enumerate_closure(g);
      } else {
        BranchingConfig bc;
        bc.node_cap = common.budget ? common.budget : default_budget(bc.node_cap);
        bc.k = enum_k > 0 ? enum_k : std::max(1, max_separator_domination(g, enumerate_closure(g)));
        r.config["k"] = bc.k;
        r.config["budget"] = bc.node_cap;
        auto b = enumerate_branching(g, bc);
        seps = b.minimal;
        r.results["raw_count"] = b.raw.size();
        r.results["nodes"] = b.nodes;
        r.results["memo_hits"] = b.memo_hits;
        r.results["trace_bound"] = b.trace_bound;
      }
      r.results["count"] = seps.size();
      r.results["separators"] = seps;
      std::string text = "count " + std::to_string(seps.size()) + "\n";
      for (const auto& s : seps) text += join_set(s) + "\n";
      emit(r, timer, common, text);
      return 0;
    }

    if (*det) {
      const std::uint64_t budget = common.budget ? common.budget : default_budget(kDefaultSearchBudget);
      Graph g = read_edge_list_file(det_g);
      RunReport r = start_report("detect", common);
      r.inputs[det_g] = file_digest(det_g);
      r.config["kind"] = kind;
      r.config["budget"] = budget;
      SearchStatus status;
      std::uint64_t nodes = 0;
      Json witness = nullptr;
      if (kind == "subgraph" || kind == "minor") {
        if (det_h.empty()) throw Error(kind + " detection needs a pattern file");
        Graph h = read_edge_list_file(det_h);
        r.inputs[det_h] = file_digest(det_h);
        if (kind == "subgraph") {
          auto v = find_induced_subgraph(g, h, budget);
          status = v.status;
          nodes = v.nodes_explored;
          if (v.witness) witness = *v.witness;
        } else {
          auto v = find_induced_minor(g, h, budget);
          status = v.status;
          nodes = v.nodes_explored;
          if (v.witness) witness = v.witness->branch_sets;
        }
      } else if (kind == "creature") {
        r.config["k"] = det_k;
        auto v = find_creature(g, det_k, budget);
        status = v.status;
        nodes = v.nodes_explored;
        if (v.witness) witness = creature_json(*v.witness);
      } else {
        r.config["r"] = det_r;
        auto v = longest_induced_cycle_at_least(g, det_r, budget);
        status = v.status;
        nodes = v.nodes_explored;
        if (v.witness) witness = *v.witness;
      }
      r.complete = status != SearchStatus::unknown_budget;
      r.results = {{"status", status_name(status)}, {"nodes_explored", nodes}, {"witness", witness}};
      emit(r, timer, common, status_name(status) + (witness.is_null() ? "" : " " + witness.dump()) + "\n");
      return 0;
    }

    if (*cls) {
      ccfg.search_budget = common.budget ? common.budget : default_budget(ccfg.search_budget);
      std::vector<std::string> files;
      for (const auto& entry : std::filesystem::directory_iterator(cls_dir))
        if (entry.is_regular_file()) files.push_back(entry.path().string());
      std::sort(files.begin(), files.end());
      if (files.empty()) throw Error("no graph files in " + cls_dir);
      std::vector<Graph> members;
      RunReport r = start_report("classify", common);
      for (const auto& f : files) {
        members.push_back(read_edge_list_file(f));
        r.inputs[f] = file_digest(f);
      }
      auto v = classify(make_forbidden_family(std::move(members)), kmax, length_cap, ccfg);
      r.config["kmax"] = kmax;
      r.config["length_cap"] = v.length_cap;
      r.config["samples"] = ccfg.sampled_layouts;
      r.config["seed"] = ccfg.seed;
      r.config["budget"] = ccfg.search_budget;
      r.results = verdict_json(v);
      r.complete = v.status != ClassStatus::inconclusive;
      emit(r, timer, common,
           class_status_name(v.status) + " (k=" + std::to_string(v.k_certificate) + ") " + v.note + "\n");
      return 0;
    }

    if (*ver) {
      if (mutate == "theta_chord") aopt.fault = GeneratorFault::theta_chord;
      else if (mutate == "twisted_ladder_drop_twins") aopt.fault = GeneratorFault::twisted_ladder_drop_twins;
      RunReport r = start_report("verify", common);
      r.config["filter"] = aopt.filter;
      r.config["mutate"] = mutate;
      r.config["seed"] = aopt.seed;
      auto results = run_acceptance(aopt, [&](const CriterionResult& res) {
        if (!common.json) std::cout << format_result_line(res) << std::endl;
      });
      bool ok = !results.empty();
      Json items = Json::array();
      for (const auto& res : results) {
        ok = ok && res.passed;
        items.push_back({{"id", res.info.id}, {"key", res.info.key}, {"passed", res.passed}, {"detail", res.detail}});
      }
      r.results = {{"criteria", items}, {"all_passed", ok}};
      emit(r, timer, common, std::to_string(results.size()) + " criteria, " + (ok ? "all passed" : "failures present") + "\n");
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
