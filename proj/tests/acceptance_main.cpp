// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstring>
#include <string>

#include "sepscope/acceptance.hpp"

int main(int argc, char** argv) {
  sepscope::AcceptanceOptions opt;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--filter") == 0) opt.filter = argv[i + 1];
  bool ok = true;
  auto results = sepscope::run_acceptance(opt, [&](const sepscope::CriterionResult& r) {
    std::printf("%s\n", sepscope::format_result_line(r).c_str());
    std::fflush(stdout);
    ok = ok && r.passed;
  });
  std::printf("%zu criteria, %s\n", results.size(), ok ? "all passed" : "failures present");
  return ok ? 0 : 1;
}
