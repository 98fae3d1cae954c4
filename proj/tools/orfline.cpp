#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "orf/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Rational orthonormal system experiment driver"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_override;
  std::uint64_t seed_override = 0;
  bool seed_given = false;
  bool parallel = false;

  CLI::App* run_cmd = app.add_subcommand("run", "Run the configured suites");
  run_cmd->add_option("config", config_path, "Experiment config file")
      ->required();
  run_cmd->add_option("--output", output_override,
                      "Directory for CSV outputs (overrides config)");
  run_cmd
      ->add_option("--seed", seed_override,
                   "RNG seed (overrides config)")
      ->each([&seed_given](const std::string&) { seed_given = true; });
  run_cmd->add_flag("--parallel", parallel, "Run suites concurrently");

  CLI11_PARSE(app, argc, argv);

  try {
    orf::ExperimentConfig cfg = orf::parse_config_file(config_path);
    if (!output_override.empty()) cfg.output = output_override;
    if (seed_given) cfg.seed = seed_override;
    const orf::RunOutcome outcome = orf::run(cfg, parallel);
    return outcome.exit_code;
  } catch (const orf::ConfigParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const orf::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
