// SPDX-License-Identifier: Apache-2.0
#include "traincap/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "traincap/capacity.hpp"
#include "traincap/emit.hpp"
#include "traincap/errors.hpp"
#include "traincap/matrix_io.hpp"
#include "traincap/montecarlo.hpp"
#include "traincap/optimizer.hpp"

namespace traincap {

namespace {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InvalidConfigError("cannot open output file: " + path);
  }
  out << content;
  if (!out) {
    throw InvalidConfigError("cannot write output file: " + path);
  }
}

void emit_text(const RunConfig& config, const std::string& content,
               std::ostream& out) {
  if (config.output_path) {
    write_file(*config.output_path, content);
  } else {
    out << content;
  }
}

int require_t_tau(const RunConfig& config) {
  if (!config.t_tau) {
    throw InvalidConfigError("--t-tau is required for this command");
  }
  return *config.t_tau;
}

std::uint64_t require_seed(const RunConfig& config) {
  if (!config.seed) {
    throw InvalidConfigError("--seed is required for this command");
  }
  return *config.seed;
}

int require_trials(const RunConfig& config) {
  if (!config.trials) {
    throw InvalidConfigError("--trials is required for this command");
  }
  return *config.trials;
}

void run_validate(const ChannelStats& stats, const SpdCheckReportX& check,
                  std::ostream& out) {
  out << "dim=" << stats.antennas() << "\n";
  out << "min_eigenvalue=" << format_double(check.min_eigenvalue) << "\n";
  out << "positive_definite=" << (check.is_pd ? "true" : "false") << "\n";
  out << "ok\n";
}

void run_capacity(const ChannelStats& stats, const LinkBudget& budget,
                  const RunConfig& config, std::ostream& out) {
  const TrainingPlan plan{require_t_tau(config)};
  const CapacityValue value = capacity(stats, budget, plan);
  char line[96];
  std::snprintf(line, sizeof(line), "capacity: %.6f bits\n",
                value.bits_per_block);
  out << line;
  out << "bits_per_block=" << format_double(value.bits_per_block) << "\n";
  out << "bits_per_symbol=" << format_double(value.bits_per_symbol) << "\n";
}

void run_sweep(const ChannelStats& stats, const LinkBudget& budget,
               const RunConfig& config, std::ostream& out) {
  const CapacityCurve curve = sweep(stats, budget);
  const OutputFormat format = config.format.value_or(OutputFormat::kCsv);
  switch (format) {
    case OutputFormat::kCsv:
      emit_text(config, curve_to_csv(curve), out);
      break;
    case OutputFormat::kJson:
      emit_text(config, curve_to_json(curve), out);
      break;
    case OutputFormat::kSvg:
      // The plot goes to the output file; the table still goes to stdout.
      if (!config.output_path) {
        throw InvalidConfigError("--out is required with --format svg");
      }
      write_file(*config.output_path, curve_to_svg(curve));
      out << curve_to_csv(curve);
      break;
  }
}

void run_optimize(const ChannelStats& stats, const LinkBudget& budget,
                  std::ostream& out) {
  const CapacityCurve curve = sweep(stats, budget);
  out << "argmax=" << curve.argmax_t_tau << "\n";
  out << "max_bits_per_block=" << format_double(curve.max_bits) << "\n";
  out << "max_bits_per_symbol="
      << format_double(curve.max_bits /
                       static_cast<double>(curve.entries.back().t_tau))
      << "\n";
}

void run_simulate(const ChannelStats& stats, const LinkBudget& budget,
                  const RunConfig& config, std::ostream& out) {
  const OutputFormat format = config.format.value_or(OutputFormat::kJson);
  if (format != OutputFormat::kJson) {
    throw InvalidConfigError("simulate emits JSON only");
  }
  const SimConfig sim{stats, budget, TrainingPlan{require_t_tau(config)},
                      require_seed(config), require_trials(config)};
  const SimReport report = run_estimation_sim(sim);
  emit_text(config, sim_report_to_json(report), out);
}

void run_oracle(const ChannelStats& stats, const LinkBudget& budget,
                const RunConfig& config, std::ostream& out) {
  const TrainingPlan plan{require_t_tau(config)};
  const int t_d = budget.block_length - plan.t_tau;
  const SymMatrixX c_tilde = error_covariance(stats, budget, plan);
  const AmgmOracleReport report =
      amgm_oracle(stats, c_tilde, budget.power, t_d, require_trials(config),
                  require_seed(config));
  out << "equal_power_mi=" << format_double(report.equal_power_mi) << "\n";
  out << "max_random_mi=" << format_double(report.max_random_mi) << "\n";
  out << "equal_power_dominates="
      << (report.max_random_mi <= report.equal_power_mi + 1e-9 ? "true"
                                                               : "false")
      << "\n";
}

}  // namespace

void run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  SpdCheckReportX check;
  const ChannelStats stats = load_covariance(config.matrix_path, &check);
  if (!check.is_pd) {
    // PSD within tolerance but not strictly PD: usable, worth flagging.
    err << "warning: covariance is singular or nearly singular "
        << "(min eigenvalue " << format_double(check.min_eigenvalue) << ")\n";
  }
  if (config.command == Command::kValidate) {
    run_validate(stats, check, out);
    return;
  }

  const LinkBudget budget(config.power, config.block_length);
  switch (config.command) {
    case Command::kCapacity:
      run_capacity(stats, budget, config, out);
      break;
    case Command::kSweep:
      run_sweep(stats, budget, config, out);
      break;
    case Command::kOptimize:
      run_optimize(stats, budget, out);
      break;
    case Command::kSimulate:
      run_simulate(stats, budget, config, out);
      break;
    case Command::kOracle:
      run_oracle(stats, budget, config, out);
      break;
    case Command::kValidate:
      break;
  }
}

int run_with_exit_codes(const RunConfig& config, std::ostream& out,
                        std::ostream& err) {
  try {
    run(config, out, err);
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidMatrixError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return 5;
  }
}

}  // namespace traincap
