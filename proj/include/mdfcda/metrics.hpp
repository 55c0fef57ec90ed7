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

#ifndef MDFCDA_METRICS_HPP
#define MDFCDA_METRICS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdfcda/repository.hpp"
#include "mdfcda/round_result.hpp"

namespace mdfcda {

struct RoundRow
{
  std::int64_t run = 0;
  std::int64_t round = 0;
  Money total_utility;
  double total_satisfaction = 0.0;
  double utilization_percent = 0.0;
  double win_percent = 0.0;
  std::int64_t cumulative_drops = 0;

  friend bool operator==(const RoundRow&, const RoundRow&) = default;
};

struct RunRow
{
  std::int64_t run = 0;
  Money total_utility;
  std::int64_t drops = 0;
  std::optional<double> mean_drop_round;
  double mean_utilization = 0.0;
  double mean_win_percent = 0.0;

  friend bool operator==(const RunRow&, const RunRow&) = default;
};

struct SimulationReport
{
  std::vector<RoundRow> per_round;
  std::vector<RunRow> per_run;
  nlohmann::json config_echo = nlohmann::json::object();
  /// Final repository of each run, in run order.
  std::vector<Repository> repositories;

  friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

/// 100 * units sold / units offered. Throws if nothing was offered.
double utilization_percent(const RoundResult& round, std::span<const ProviderBid> provider_bids);

/// 100 * winners / participants. Throws if there are no participants.
double win_percent(const RoundResult& round, std::span<const ConsumerId> participants);

RoundRow make_round_row(std::int64_t run, const RoundResult& round, std::int64_t cumulative_drops);

/// Per-run summary from the run's round rows and its final repository.
RunRow aggregate(std::int64_t run, std::span<const RoundRow> rounds, const Repository& final_repository);

inline constexpr const char* kPerRoundHeader =
    "run,round,total_utility,total_satisfaction,utilization_percent,win_percent,cumulative_drops";
inline constexpr const char* kPerRunHeader =
    "run,total_utility,drops,mean_drop_round,mean_utilization,mean_win_percent";

std::string per_round_csv(const SimulationReport& report);
std::string per_run_csv(const SimulationReport& report);

nlohmann::json report_to_json(const SimulationReport& report);
/// Inverse of report_to_json; repositories are not part of the JSON.
SimulationReport report_from_json(const nlohmann::json& doc);

/// Writes per_round.csv, per_run.csv, report.json and one
/// repository_run<k>.json per run into `destination` (created if needed).
/// Per-run rows are re-derived from per-round rows first; a mismatch throws
/// std::logic_error and nothing is written.
void emit(const SimulationReport& report, const std::filesystem::path& destination);

/// Reads back everything emit() wrote.
SimulationReport load_report(const std::filesystem::path& source);

/// Shortest text that parses back to the same double.
std::string format_real(double v);

}  // namespace mdfcda

#endif  // MDFCDA_METRICS_HPP
