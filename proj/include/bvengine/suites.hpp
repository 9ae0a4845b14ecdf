// Law suites and reporting: named checks over an instance, run concurrently,
// assembled into text and JSON reports with CI-friendly exit codes.
#pragma once

#include <string>
#include <vector>

#include "bvengine/instance.hpp"

namespace bveng {

struct CheckResult {
  std::string check;
  std::string instance;
  std::string status;  // "pass", "fail" (falsification), "error" (budget/config), "skip"
  std::string witness;
  std::vector<long long> cardinalities;
  long long millis = 0;
};

struct SuiteReport {
  std::string suite;
  std::string instance;
  std::vector<CheckResult> results;
};

// available suites, in run order
std::vector<std::string> suite_names();

// run one suite or "all"; each check builds its own engine so checks are
// independent and can run concurrently; a failing instance load yields a
// single error result. Throws ConfigError for an unknown suite name.
std::vector<SuiteReport> run_suites(const std::string& suite_sel, const std::string& instance,
                                    long long budget);

// canonical rule morphisms: interchange and sequence take four formulas,
// switch takes three; the morphism is constructed (never searched) and
// validated, and the result reports endpoint cardinalities
CheckResult check_rule(Engine& E, const std::string& rule, const std::vector<ChuObj>& args,
                       const std::string& instance);

// exit code 0: all pass/skip, 1: any falsification, 2: any error
int report_exit_code(const std::vector<SuiteReport>& reports);
std::string report_text(const std::vector<SuiteReport>& reports);
std::string report_json(const std::vector<SuiteReport>& reports);

}  // namespace bveng
