#include <doctest.h>

#include "sepscope/acceptance.hpp"
#include "sepscope/report.hpp"

using namespace sepscope;

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a_digest("") == "cbf29ce484222325");
  CHECK(fnv1a_digest("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_digest("foobar") == "85944171f73967e8");
}

TEST_CASE("reports sort keys and drop timing on request") {
  RunReport r;
  r.command = "enum";
  r.config["zeta"] = 1;
  r.config["alpha"] = 2;
  r.elapsed_ms = 17;
  std::string with = r.dump();
  CHECK(with.find("elapsed_ms") != std::string::npos);
  CHECK(with.find("\"alpha\"") < with.find("\"zeta\""));
  r.timing = false;
  std::string without = r.dump();
  CHECK(without.find("elapsed_ms") == std::string::npos);
  r.elapsed_ms = 99;
  CHECK(r.dump() == without);
}

TEST_CASE("graph and verdict JSON") {
  Json g = graph_json(path_graph(3));
  CHECK(g["n"] == 3);
  CHECK(g["edges"].size() == 2);
  auto v = classify(make_forbidden_family({complete_graph(3)}));
  Json j = verdict_json(v);
  CHECK(j["status"] == "feral");
  CHECK(j["caps"]["length_cap"] == 15);
  CHECK(j["evidence"]["checks"][0]["type"] == "theta");
  CHECK(j.dump() == verdict_json(classify(make_forbidden_family({complete_graph(3)}))).dump());
}

TEST_CASE("acceptance filters") {
  const auto& all = acceptance_criteria();
  CHECK(all.size() == 12);
  int separators = 0;
  for (const auto& c : all) separators += criterion_selected(c, "separators");
  CHECK(separators == 4);
  CHECK(criterion_selected(all[2], "3"));
  CHECK(criterion_selected(all[2], "twisted-ladder-counts"));
  CHECK_FALSE(criterion_selected(all[2], "classifier"));
  auto r = run_acceptance({"7", GeneratorFault::none, 1});
  REQUIRE(r.size() == 1);
  CHECK(r[0].passed);
  auto mutated = run_acceptance({"5", GeneratorFault::theta_chord, 1});
  REQUIRE(mutated.size() == 1);
  CHECK_FALSE(mutated[0].passed);
  CHECK(generator_fault() == GeneratorFault::none);
}
