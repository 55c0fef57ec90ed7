// Copyright 2026 The mdfcda Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MDFCDA_COMMANDS_HPP
#define MDFCDA_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>

#include "mdfcda/config.hpp"

namespace mdfcda::cli {

enum ExitCode : int
{
  kSuccess = 0,
  kUsageError = 1,
  kRuntimeFailure = 2,
  kValidationMismatch = 3,
};

/// Simulate and write the report into config.output_dir.
int cmd_run(const ExperimentConfig& config, unsigned jobs, std::ostream& out, std::ostream& err);

/// Fairness-on and fairness-off arms on identical bid streams. Writes
/// <out>/mdfcda/, <out>/baseline/ and <out>/comparison.csv.
int cmd_compare(const ExperimentConfig& config, unsigned jobs, std::ostream& out, std::ostream& err);

inline constexpr const char* kComparisonHeader =
    "run,drops_delta,mean_drop_round_delta,total_utility_delta,utilization_delta,win_percent_delta";

struct ValidateOptions
{
  std::int64_t corpus_size = 500;
  std::uint64_t seed = 1;
};

using SolverUnderTest = std::function<WdpSolution(const WdpInstance&)>;

/// Checks the solver (solve_exact by default) against solve_oracle on a
/// seeded corpus of micro instances. A mismatching instance is printed to
/// `err` in the instance dump format.
int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err,
                 const SolverUnderTest& solver = {});

/// Parses argv and dispatches to a subcommand.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mdfcda::cli

#endif  // MDFCDA_COMMANDS_HPP
