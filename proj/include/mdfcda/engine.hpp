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

#ifndef MDFCDA_ENGINE_HPP
#define MDFCDA_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>

#include "mdfcda/metrics.hpp"
#include "mdfcda/repository.hpp"
#include "mdfcda/round_result.hpp"
#include "mdfcda/scenario.hpp"

namespace mdfcda {

enum class SolverMode
{
  exact,
  heuristic,
  oracle
};

std::string to_string(SolverMode mode);
SolverMode parse_solver_mode(const std::string& text);

struct EngineConfig
{
  /// false runs the baseline auction: every fairness factor is 0.
  bool fairness_enabled = true;
  FairnessParams fairness_params;
  SolverMode solver_mode = SolverMode::heuristic;
  SolverLimits solver_limits;
  std::int64_t rounds = 100;
  std::uint64_t master_seed = 1;

  void validate() const;

  friend bool operator==(const EngineConfig& a, const EngineConfig& b)
  {
    return a.fairness_enabled == b.fairness_enabled && a.fairness_params == b.fairness_params &&
           a.solver_mode == b.solver_mode && a.solver_limits.time_budget == b.solver_limits.time_budget &&
           a.solver_limits.node_budget == b.solver_limits.node_budget && a.rounds == b.rounds &&
           a.master_seed == b.master_seed;
  }
};

WdpSolution solve(const WdpInstance& instance, SolverMode mode, const SolverLimits& limits);

/// Plays round repo.round_counter + 1: extends the bids with fairness
/// factors, solves the winner determination, settles prices and fills in
/// the round metrics. The repository is not modified. `fairness_rng` is
/// only advanced when fairness is enabled.
RoundResult run_round(const Repository& repo, std::span<const ConsumerBid> consumer_bids,
                      std::span<const ProviderBid> provider_bids, const EngineConfig& config,
                      std::mt19937_64& fairness_rng);

/// Successor repository after `result`: winners gain a win and reset their
/// streak, losers gain a loss and extend it, and a loser whose streak
/// exceeds max_losses is dropped in this round.
Repository update_repository(const Repository& repo, const RoundResult& result, const FairnessParams& params);

/// Independent random streams of one run.
enum class Stream : std::uint32_t
{
  providers = 1,
  consumers = 2,
  fairness = 3,
};

std::mt19937_64 make_stream(std::uint64_t master_seed, std::int64_t run, Stream stream);

struct SimulationOptions
{
  /// Worker threads across runs; results do not depend on it.
  unsigned jobs = 1;
  /// Called after every round. Must be thread-safe when jobs > 1.
  std::function<void(std::int64_t run, const RoundResult&)> on_round;
};

/// Runs scenario.runs independent runs of engine.rounds rounds each.
/// Consumer and provider bids come from streams that do not depend on
/// auction outcomes, so two configurations with the same master seed see
/// the same bids (dropped consumers' bids are discarded).
SimulationReport run_simulation(const ScenarioConfig& scenario, const EngineConfig& engine,
                                const SimulationOptions& options = {});

}  // namespace mdfcda

#endif  // MDFCDA_ENGINE_HPP
