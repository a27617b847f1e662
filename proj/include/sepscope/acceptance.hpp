#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sepscope/families.hpp"

namespace sepscope {

struct CriterionInfo {
  int id = 0;
  std::string key;        // e.g. "oracle-equivalence"
  std::string group;      // separators, families, detectors, classifier
  std::string tolerance;  // pinned comparison rule
};

struct CriterionResult {
  CriterionInfo info;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::string filter;  // empty, a group, a key, or a criterion number
  GeneratorFault fault = GeneratorFault::none;
  std::uint64_t seed = 20240611;
};

const std::vector<CriterionInfo>& acceptance_criteria();
bool criterion_selected(const CriterionInfo& info, const std::string& filter);

/// Runs the selected criteria in order; on_result fires after each one.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3 twisted-ladder-counts [tolerance] detail".
std::string format_result_line(const CriterionResult& r);

}  // namespace sepscope
