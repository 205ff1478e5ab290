#include "qheis/expr.hpp"
#include "qheis/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::map<std::string, long> parse_bounds(const std::vector<std::string> &items) {
  std::map<std::string, long> out;
  for (const std::string &item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw qheis::UsageError("bound '" + item + "' is not of the form key=value");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(value, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0 || used != value.size())
      throw qheis::UsageError("bound '" + key + "' needs an integer value, got '" + value + "'");
    out[key] = v;
  }
  return out;
}

qheis::QValue parse_q(const std::string &text) {
  try {
    return qheis::QValue::parse(text);
  } catch (const std::exception &ex) {
    throw qheis::UsageError(ex.what());
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact verification tool for the q-deformed Heisenberg algebra AB - qBA = I"};
  app.require_subcommand(1);

  std::string suite, q_text = "symbolic", json_path;
  std::vector<std::string> bound_items;
  unsigned jobs = 1;
  bool verbose = false;
  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--q", q_text, "symbolic, an integer or p/r")->capture_default_str();
  verify->add_option("--bound", bound_items, "Override a bound, key=value (repeatable)");
  verify->add_option("--json", json_path, "Write the JSON report to this file");
  verify->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  verify->add_flag("--verbose,-v", verbose, "Print every entry with both sides");
  verify->footer([] {
    std::string names;
    for (const std::string &n : qheis::suite_names())
      names += "  " + n + "\n";
    return "Suites:\n" + names;
  }());

  std::string eval_q = "symbolic", expression;
  auto *eval = app.add_subcommand("eval", "Normalize an expression and report its structure");
  eval->add_option("--q", eval_q, "symbolic, an integer or p/r")->capture_default_str();
  eval->add_option("expression", expression, "Expression such as \"[A,B]^2 - q*<BA>\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      qheis::SuiteConfig cfg;
      cfg.suite = suite;
      cfg.q = parse_q(q_text);
      cfg.bounds = parse_bounds(bound_items);
      cfg.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
      const qheis::Report report = qheis::run_suite(cfg);
      std::cout << qheis::to_text(report, verbose);
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
          std::cerr << "error: cannot write " << json_path << '\n';
          return kExitUsage;
        }
        out << qheis::to_json(report) << '\n';
      }
      return report.summary().fail == 0 ? 0 : kExitFail;
    }
    const qheis::QValue q = parse_q(eval_q);
    const qheis::NormalElement value = qheis::evaluate(*qheis::parse_expression(expression), q);
    std::cout << qheis::to_text(qheis::summarize(value));
    return 0;
  } catch (const qheis::UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qheis::ParseError &e) {
    std::cerr << e.what() << '\n' << "  " << expression << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
    return kExitUsage;
  } catch (const qheis::DomainError &e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitFail;
  }
}
