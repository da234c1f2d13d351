// Acceptance battery: one PASS/FAIL line per criterion.
//   acceptance            run all criteria
//   acceptance <id>...    run the listed criteria only
// Exit status is nonzero when any selected criterion fails.

#include <cstdio>
#include <cstdlib>
#include <set>

#include "hopf/acceptance.hpp"

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const hopf::Criterion& c : hopf::acceptance_criteria()) {
    if (!only.empty() && !only.count(c.id)) continue;
    const hopf::CriterionResult r = run_criterion(c);
    std::printf("%s\n", hopf::format_result(c, r).c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
