// SPDX-License-Identifier: Apache-2.0
//
// traincap: worst-case capacity of a training-based block-fading SIMO link.
#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "traincap/cli.hpp"

namespace {

constexpr const char* kFooter = R"(Exit codes:
  0  success
  2  parse error (command line or matrix file)
  3  invalid matrix (not square, asymmetric, not positive semidefinite)
  4  invalid configuration (flags, block/training lengths, output files)
  5  numeric failure (factorization pivot, eigensolver convergence)

Matrix files are whitespace text (one row per line, # comments) or JSON
({"matrix": [[...], ...]}). All randomized commands require --seed.)";

struct FlagSet {
  CLI::Option* matrix = nullptr;
  CLI::Option* power = nullptr;
  CLI::Option* block_length = nullptr;
  CLI::Option* t_tau = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* trials = nullptr;
};

// Raw flag storage; optional fields move into RunConfig only when given.
struct FlagValues {
  double power = 0.0;
  int block_length = 0;
  int t_tau = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string out;
  std::string format;
};

FlagSet add_common_flags(CLI::App* cmd, traincap::RunConfig* config,
                         FlagValues* values) {
  FlagSet flags;
  flags.matrix = cmd->add_option("--matrix", config->matrix_path,
                                 "Path to the channel covariance matrix");
  flags.power = cmd->add_option("--power", values->power,
                                "Per-symbol transmit power (linear)");
  flags.block_length = cmd->add_option("--block-length", values->block_length,
                                       "Coherence block length in symbols");
  flags.t_tau = cmd->add_option("--t-tau", values->t_tau,
                                "Number of training symbols");
  flags.seed = cmd->add_option("--seed", values->seed,
                               "Random generator seed");
  flags.trials = cmd->add_option("--trials", values->trials,
                                 "Number of trials or sampled spectra");
  cmd->add_option("--out", values->out, "Output file path");
  cmd->add_option("--format", values->format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  return flags;
}

traincap::OutputFormat parse_format(const std::string& name) {
  if (name == "json") return traincap::OutputFormat::kJson;
  if (name == "svg") return traincap::OutputFormat::kSvg;
  return traincap::OutputFormat::kCsv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Worst-case capacity of a training-based block-fading SIMO "
               "link, as a function of the number of pilot symbols"};
  app.footer(kFooter);
  app.require_subcommand(1);

  traincap::RunConfig config;
  FlagValues values;
  std::map<const CLI::App*, traincap::Command> commands;

  const auto add_command = [&](const char* name, const char* help,
                               traincap::Command command) {
    CLI::App* cmd = app.add_subcommand(name, help);
    commands[cmd] = command;
    return add_common_flags(cmd, &config, &values);
  };

  {
    FlagSet f = add_command("validate", "Check a covariance matrix file",
                            traincap::Command::kValidate);
    f.matrix->required();
  }
  {
    FlagSet f = add_command("capacity",
                            "Capacity for one training length",
                            traincap::Command::kCapacity);
    f.matrix->required();
    f.power->required();
    f.block_length->required();
    f.t_tau->required();
  }
  {
    FlagSet f = add_command("sweep",
                            "Capacity at every training length in [1, T]",
                            traincap::Command::kSweep);
    f.matrix->required();
    f.power->required();
    f.block_length->required();
  }
  {
    FlagSet f = add_command("optimize",
                            "Find the capacity-maximizing training length",
                            traincap::Command::kOptimize);
    f.matrix->required();
    f.power->required();
    f.block_length->required();
  }
  {
    FlagSet f = add_command("simulate",
                            "Monte Carlo check of the estimator statistics",
                            traincap::Command::kSimulate);
    f.matrix->required();
    f.power->required();
    f.block_length->required();
    f.t_tau->required();
    f.seed->required();
    f.trials->required();
  }
  {
    FlagSet f = add_command("oracle",
                            "Random-spectrum search against equal power",
                            traincap::Command::kOracle);
    f.matrix->required();
    f.power->required();
    f.block_length->required();
    f.t_tau->required();
    f.seed->required();
    f.trials->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  config.command = commands.at(chosen);
  config.power = values.power;
  config.block_length = values.block_length;
  if (chosen->count("--t-tau") > 0) config.t_tau = values.t_tau;
  if (chosen->count("--seed") > 0) config.seed = values.seed;
  if (chosen->count("--trials") > 0) config.trials = values.trials;
  if (chosen->count("--out") > 0) config.output_path = values.out;
  if (chosen->count("--format") > 0) config.format = parse_format(values.format);

  return traincap::run_with_exit_codes(config, std::cout, std::cerr);
}
