#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hopf {

struct CriterionResult {
  bool pass = false;
  std::string detail;   // worst observed quantity against its threshold
};

struct Criterion {
  int id = 0;
  std::string title;
  std::function<CriterionResult()> run;
};

// The acceptance battery, in order. Each check builds its own models and fields.
std::vector<Criterion> acceptance_criteria();

// Runs one criterion; an exception counts as a failure and is reported.
CriterionResult run_criterion(const Criterion& c);

// "PASS <id> <title>: <detail>" or "FAIL ...".
std::string format_result(const Criterion& c, const CriterionResult& r);

}  // namespace hopf
