// Command-line front end: `wdlmp run --config <file> --out <dir> [overrides]`.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wdlmp/config.hpp"
#include "wdlmp/errors.hpp"
#include "wdlmp/experiment.hpp"
#include "wdlmp/export.hpp"

namespace {

std::vector<wdlmp::Algorithm> parse_algorithm_list(const std::string& csv) {
  std::vector<wdlmp::Algorithm> out;
  std::stringstream in(csv);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    const auto a = wdlmp::parse_algorithm(name);
    if (!a) throw wdlmp::ConfigError("algorithms", "unknown algorithm \"" + name + "\"");
    out.push_back(*a);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted diffusion LMP simulator"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a Monte-Carlo experiment and export its results");
  std::string config_path, out_dir, algorithms;
  std::uint64_t seed = 0;
  std::size_t trials = 0, iterations = 0, workers = 0;
  bool plot = false;
  run->add_option("--config", config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory")->required();
  auto* seed_opt = run->add_option("--seed", seed, "Override master_seed");
  auto* trials_opt = run->add_option("--trials", trials, "Override trial count")->check(CLI::PositiveNumber);
  auto* iter_opt = run->add_option("--iterations", iterations, "Override iteration count")->check(CLI::PositiveNumber);
  auto* alg_opt = run->add_option("--algorithms", algorithms, "Comma-separated algorithm list");
  run->add_option("--workers", workers, "Worker threads (0 = all cores)");
  run->add_flag("--plot", plot, "Write an SVG learning curve per algorithm");

  CLI11_PARSE(app, argc, argv);

  try {
    auto config = wdlmp::load_config(config_path);
    if (*seed_opt) config.master_seed = seed;
    if (*trials_opt) config.trials = trials;
    if (*iter_opt) config.iterations = iterations;
    if (*alg_opt) config.algorithms = parse_algorithm_list(algorithms);
    config.validate();

    const auto result = wdlmp::run_experiment(config, {workers});
    wdlmp::export_results(result, out_dir, {plot});

    for (const auto& r : result.algorithms) {
      std::cout << wdlmp::algorithm_name(r.algorithm) << ": ";
      if (r.curve) {
        std::cout << "steady-state MSD " << wdlmp::steady_state_msd_db(*r.curve) << " dB, ";
      }
      std::cout << r.trials_used << " trials used, " << r.diverged_trials << " diverged";
      if (!r.error.empty()) std::cout << " (" << r.error << ")";
      std::cout << '\n';
    }
    std::cout << "results written to " << out_dir << '\n';
    return result.ok() ? 0 : 3;
  } catch (const wdlmp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
