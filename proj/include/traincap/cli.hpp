// SPDX-License-Identifier: Apache-2.0
//
// Command dispatch for the traincap tool, kept separate from flag parsing so
// the whole surface is callable from tests.
//
// Exit codes: 0 success, 2 parse error (command line or matrix file),
// 3 invalid matrix, 4 invalid configuration, 5 numeric failure.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace traincap {

enum class Command { kValidate, kCapacity, kSweep, kOptimize, kSimulate, kOracle };

enum class OutputFormat { kCsv, kJson, kSvg };

struct RunConfig {
  Command command = Command::kValidate;
  std::string matrix_path;
  double power = 0.0;
  int block_length = 0;
  std::optional<int> t_tau;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> output_path;
  std::optional<OutputFormat> format;
};

/// Executes the command, writing results to `out` and warnings to `err`.
/// Throws the library error types on failure.
void run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// run() with the documented exception-to-exit-code mapping applied; error
/// messages go to `err`.
int run_with_exit_codes(const RunConfig& config, std::ostream& out,
                        std::ostream& err);

}  // namespace traincap
