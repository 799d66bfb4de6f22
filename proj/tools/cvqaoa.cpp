// Command-line front end: run, scan, grover, check.
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "cvqaoa/checks.hpp"
#include "cvqaoa/error.hpp"
#include "cvqaoa/experiments.hpp"
#include "cvqaoa/io.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;

int report_check(const cvqaoa::CheckReport& report) {
  std::cout << "[" << report.suite << "]\n";
  for (const auto& l : report.lines) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "  %-4s %-58s %-12.4e (limit %.1e)\n", l.pass ? "ok" : "FAIL", l.label.c_str(),
                  l.value, l.limit);
    std::cout << buf;
  }
  return report.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous-variable QAOA simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "experiment config file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--seed", seed, "sampling seed (overrides the config)");
    cmd->add_option("--out", out_dir, "output directory (overrides the config)");
  };

  auto* run_cmd = app.add_subcommand("run", "evolve, sample and write artifacts");
  add_common(run_cmd);
  std::vector<double> scan_values;
  auto* scan_cmd = app.add_subcommand("scan", "scan the uniform angle T");
  add_common(scan_cmd);
  scan_cmd->add_option("--T", scan_values, "T values (defaults to [scan] T)");
  auto* grover_cmd = app.add_subcommand("grover", "Grover-mode amplitude amplification");
  add_common(grover_cmd);
  std::string suite;
  auto* check_cmd = app.add_subcommand("check", "run an invariant suite");
  check_cmd->add_option("suite", suite, "heisenberg | parseval | grover-model | pubo-oracle | gradient-fd | iqp | all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) {
      if (suite == "all") {
        int status = 0;
        for (const auto& name : cvqaoa::check_suites()) status |= report_check(cvqaoa::run_check(name));
        return status;
      }
      return report_check(cvqaoa::run_check(suite));
    }

    cvqaoa::Overrides overrides;
    overrides.seed = seed;
    if (out_dir) overrides.out_dir = *out_dir;
    const auto config = cvqaoa::apply_overrides(cvqaoa::load_config(config_path), overrides);
    if (run_cmd->parsed()) cvqaoa::cmd_run(config, std::cout, std::cerr);
    else if (scan_cmd->parsed()) cvqaoa::cmd_scan(config, scan_values, std::cout);
    else if (grover_cmd->parsed()) cvqaoa::cmd_grover(config, std::cout);
    return 0;
  } catch (const cvqaoa::NumericalGuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
