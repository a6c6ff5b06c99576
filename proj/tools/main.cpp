#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>

#include <dunkl/report.hpp>

using namespace dunkl;

namespace {

struct CliOptions {
  int n = 3;
  int k_max = 2;
  std::string mu_spec;
  std::vector<std::string> suites;
  std::string realization = "both";
  std::string out_dir;
  int jobs = 1;
  std::uint64_t seed = 1;
  bool negative_control = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--n", opt.n, "number of variables (>= 3)");
  cmd->add_option("--k-max", opt.k_max, "maximum polynomial degree");
  cmd->add_option("--mu", opt.mu_spec,
                  "parameters: comma-separated rationals p/q, or random:<seed>");
  cmd->add_option("--suite", opt.suites, "suites to run (osp bi casimir monogenic ladder connection all)");
  cmd->add_option("--realization", opt.realization, "clifford | scalar | both");
  cmd->add_option("--out", opt.out_dir, "output directory");
  cmd->add_option("--jobs", opt.jobs, "worker threads");
  cmd->add_option("--seed", opt.seed, "seed for sampled parameters");
}

RunConfig to_config(const CliOptions& opt) {
  RunConfig config;
  config.n = opt.n;
  config.k_max = opt.k_max;
  config.mu = resolve_mu(opt.mu_spec, opt.n, opt.seed);
  config.mu_spec = opt.mu_spec;
  if (!opt.suites.empty()) config.suites = opt.suites;
  config.realization = opt.realization;
  config.out_dir = opt.out_dir;
  config.jobs = opt.jobs;
  config.seed = opt.seed;
  config.corrupt_sign = opt.negative_control;
  return config;
}

int run_verify(const CliOptions& opt) {
  RunConfig config = to_config(opt);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = run_suite(config);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  const std::string body = report.to_json().dump(2) + "\n";
  if (config.out_dir.empty()) {
    std::cout << body;
  } else {
    std::filesystem::create_directories(config.out_dir);
    std::ofstream out(std::filesystem::path(config.out_dir) / "report.json", std::ios::binary);
    out << body;
  }
  std::cerr << "checks: " << report.total() << ", failed: " << report.failed() << " ("
            << elapsed.count() << " ms)\n";
  return report.all_passed() ? 0 : 1;
}

int run_export(const CliOptions& opt, const std::string& what) {
  RunConfig config = to_config(opt);
  config.validate();
  const std::filesystem::path dir = config.out_dir.empty() ? "." : config.out_dir;
  const ParameterSet params = config.params();
  if (what == "basis") {
    for (int k = 0; k <= config.k_max; ++k) export_basis(params, k, dir);
  } else if (what == "ladder") {
    export_ladder(params, config.k_max, dir);
  } else {
    for (int k = 0; k <= config.k_max; ++k) {
      for (const Blade& s : all_blades(params.n)) export_connection(params, k, s, dir);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of a reflection-group Dirac symmetry algebra"};
  app.require_subcommand(1);
  CliOptions opt;

  CLI::App* verify = app.add_subcommand("verify", "run verification suites, emit a JSON report");
  add_common_flags(verify, opt);
  verify->add_flag("--negative-control", opt.negative_control,
                   "inject a sign error into the structure relation (must fail)");

  CLI::App* basis = app.add_subcommand("basis", "export basis functions");
  add_common_flags(basis, opt);
  CLI::App* ladder = app.add_subcommand("ladder", "export the ladder-action table");
  add_common_flags(ladder, opt);
  CLI::App* connection = app.add_subcommand("connection", "export connection-coefficient data");
  add_common_flags(connection, opt);

  CLI11_PARSE(app, argc, argv);
  try {
    if (verify->parsed()) return run_verify(opt);
    if (basis->parsed()) return run_export(opt, "basis");
    if (ladder->parsed()) return run_export(opt, "ladder");
    return run_export(opt, "connection");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
