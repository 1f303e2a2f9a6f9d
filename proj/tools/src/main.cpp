#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "heatdens/errors.hpp"

using namespace heatdens;

int main(int argc, char** argv) {
  CLI::App app{"Densities, moments and convergence tables for the random heat equation"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_file;
  std::string preset;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::string estimator;
  std::optional<std::size_t> samples;

  auto* cfg_opt = app.add_option("--config", config_file, "JSON run configuration");
  auto* preset_opt = app.add_option("--preset", preset, "Built-in configuration")
                         ->check(CLI::IsMember(cli::preset_names()));
  cfg_opt->excludes(preset_opt);
  app.add_option("--seed", seed, "Override run.seed");
  app.add_option("--out", out_dir, "Override output.directory");
  app.add_option("--estimator", estimator, "Density estimator")
      ->check(CLI::IsMember({"quad", "mc", "auto"}));
  app.add_option("--samples", samples, "Override run.samples");

  struct Sub {
    const char* name;
    const char* help;
    cli::CommandResult (*fn)(const cli::RunConfig&, std::ostream&);
  };
  const Sub subs[] = {
      {"paths", "Sample initial-condition paths", cli::cmd_paths},
      {"density", "Density curves per truncation order", cli::cmd_density},
      {"moments", "Mean and variance per truncation order", cli::cmd_moments},
      {"converge", "Sup-norm differences of consecutive orders", cli::cmd_converge},
      {"check", "Which convergence theorems apply", cli::cmd_check},
  };
  for (const auto& s : subs) app.add_subcommand(s.name, s.help);

  CLI11_PARSE(app, argc, argv);

  try {
    if (config_file.empty() && preset.empty()) throw InvalidParameter("give --config or --preset");
    nlohmann::json doc;
    if (!preset.empty()) {
      doc = cli::preset_json(preset);
    } else {
      std::ifstream in(config_file);
      if (!in) throw InvalidParameter("cannot open config file " + config_file);
      doc = nlohmann::json::parse(in, nullptr, true, true);
    }
    if (seed) doc["run"]["seed"] = *seed;
    if (samples) doc["run"]["samples"] = *samples;
    if (!estimator.empty()) doc["run"]["estimator"] = estimator;
    if (!out_dir.empty()) doc["output"]["directory"] = out_dir;
    const cli::RunConfig cfg = cli::parse_config(doc);

    for (const auto& s : subs) {
      if (!app.got_subcommand(s.name)) continue;
      const auto res = s.fn(cfg, std::cerr);
      for (const auto& f : res.files) std::cout << f.string() << "\n";
      return res.exit_code;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
