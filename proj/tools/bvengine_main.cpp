// bvengine: validate instances, run law suites, evaluate BV formulas, and
// check rule-induced canonical morphisms.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bvengine/suites.hpp"

using namespace bveng;

namespace {

constexpr long long kDefaultBudget = 50000000;

long long resolve_budget(long long flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* s = std::getenv("BVENGINE_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end == s || *end != '\0' || v <= 0)
      fail(ErrKind::ConfigError, "BVENGINE_BUDGET must be a positive integer");
    return v;
  }
  return kDefaultBudget;
}

void write_report(const std::string& path, const std::vector<SuiteReport>& reports) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) fail(ErrKind::ConfigError, "cannot write report file: " + path);
  out << report_json(reports);
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  size_t b = 0;
  while (b <= s.size()) {
    size_t e = s.find(',', b);
    if (e == std::string::npos) e = s.size();
    out.push_back(s.substr(b, e - b));
    b = e + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite model checker for BV-style linear logic over Chu spaces"};
  app.require_subcommand(1);

  std::string instance = "I2", suite = "all", report_path, env_path, formula_text;
  std::string rule_name, rule_args, validate_path;
  long long budget = 0;

  CLI::App* cmd_validate = app.add_subcommand("validate", "load and validate an instance file");
  cmd_validate->add_option("path", validate_path, "instance JSON file")->required();

  CLI::App* cmd_run = app.add_subcommand("run", "run law suites over an instance");
  cmd_run->add_option("--instance", instance, "builtin name (I1..I4) or instance file");
  cmd_run->add_option("--suite", suite, "all|finbase|prof|tambara|chu|events");
  cmd_run->add_option("--budget", budget, "enumeration budget");
  cmd_run->add_option("--report", report_path, "write a JSON report to this path");

  CLI::App* cmd_eval = app.add_subcommand("eval", "interpret a formula in an instance");
  cmd_eval->add_option("--instance", instance, "builtin name (I1..I4) or instance file");
  cmd_eval->add_option("--env", env_path, "bindings JSON file");
  cmd_eval->add_option("--formula", formula_text, "BV formula text")->required();
  cmd_eval->add_option("--budget", budget, "enumeration budget");
  cmd_eval->add_option("--report", report_path, "write a JSON report to this path");

  CLI::App* cmd_rule = app.add_subcommand("rule", "check a rule-induced canonical morphism");
  cmd_rule->add_option("--name", rule_name, "switch|sequence|interchange")->required();
  cmd_rule->add_option("--args", rule_args, "comma-separated formulas")->required();
  cmd_rule->add_option("--instance", instance, "builtin name (I1..I4) or instance file");
  cmd_rule->add_option("--env", env_path, "bindings JSON file");
  cmd_rule->add_option("--budget", budget, "enumeration budget");
  cmd_rule->add_option("--report", report_path, "write a JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    long long B = resolve_budget(budget);

    if (cmd_validate->parsed()) {
      FinCategory C = load_category_file(validate_path);
      std::cout << "instance '" << C.name << "' validates: " << C.n_obj() << " objects, "
                << C.n_mor() << " morphisms\n";
      return 0;
    }

    if (cmd_run->parsed()) {
      std::vector<SuiteReport> reports = run_suites(suite, instance, B);
      std::cout << report_text(reports);
      write_report(report_path, reports);
      int code = report_exit_code(reports);
      std::cout << (code == 0   ? "all checks passed\n"
                    : code == 1 ? "falsification found\n"
                                : "configuration or budget error\n");
      return code;
    }

    if (cmd_eval->parsed()) {
      auto Ep = make_instance_engine(instance, B);
      Engine& E = *Ep;
      ChuEnv env = env_path.empty() ? default_bindings(E, instance) : load_bindings(E, env_path);
      Formula f = parse_formula(formula_text);
      ChuObj X = eval_formula(E, env, f);
      const SetFunctor &FA = E.F(X.a), &FB = E.F(X.a2);
      long long ta = 0, tb = 0;
      std::cout << print_formula(f) << "\n  carrier cardinalities:";
      for (int c : FA.card) {
        std::cout << " " << c;
        ta += c;
      }
      std::cout << "\n  co-carrier cardinalities:";
      for (int c : FB.card) {
        std::cout << " " << c;
        tb += c;
      }
      std::cout << "\n";
      SuiteReport rep{"eval", instance, {}};
      rep.results.push_back(
          CheckResult{"eval:" + print_formula(f), instance, "pass", "", {ta, tb}, 0});
      write_report(report_path, {rep});
      return 0;
    }

    // rule
    auto Ep = make_instance_engine(instance, B);
    Engine& E = *Ep;
    ChuEnv env = env_path.empty() ? default_bindings(E, instance) : load_bindings(E, env_path);
    std::vector<ChuObj> args;
    for (const std::string& text : split_args(rule_args))
      args.push_back(eval_formula(E, env, parse_formula(text)));
    CheckResult r = check_rule(E, rule_name, args, instance);
    std::vector<SuiteReport> reports{{"rule", instance, {r}}};
    std::cout << report_text(reports);
    write_report(report_path, reports);
    return report_exit_code(reports);
  } catch (const EngineError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
