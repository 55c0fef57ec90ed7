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

#include "mdfcda/metrics.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mdfcda {

namespace {

using nlohmann::json;

void write_file(const std::filesystem::path& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (!out)
    throw std::runtime_error("failed writing " + path.string());
}

std::string read_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path repository_file(const std::filesystem::path& dir, std::int64_t run)
{
  return dir / ("repository_run" + std::to_string(run) + ".json");
}

// Per-run rows must be exactly what aggregate() would produce from the round rows.
void cross_check(const SimulationReport& report)
{
  std::map<std::int64_t, std::vector<RoundRow>> by_run;
  for (const auto& row : report.per_round)
    by_run[row.run].push_back(row);
  for (std::size_t k = 0; k < report.per_run.size(); ++k)
  {
    const auto& reported = report.per_run[k];
    const auto& rows = by_run[reported.run];
    RunRow expected;
    if (k < report.repositories.size())
    {
      expected = aggregate(reported.run, rows, report.repositories[k]);
    }
    else
    {
      expected = aggregate(reported.run, rows, Repository{});
      expected.drops = reported.drops;
      expected.mean_drop_round = reported.mean_drop_round;
    }
    if (!(expected == reported))
      throw std::logic_error("per-run row for run " + std::to_string(reported.run) +
                             " does not match its per-round rows");
    if (!rows.empty() && rows.back().cumulative_drops != reported.drops)
      throw std::logic_error("run " + std::to_string(reported.run) + ": cumulative drops disagree with drop count");
  }
}

}  // namespace

std::string format_real(double v)
{
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double utilization_percent(const RoundResult& round, std::span<const ProviderBid> provider_bids)
{
  std::int64_t offered = 0;
  for (const auto& p : provider_bids)
    for (auto q : p.quantities())
      offered += q;
  if (offered == 0)
    throw std::invalid_argument("utilization undefined: providers offered no units");
  const auto sold = round.allocation().transfers.total_units();
  return 100.0 * static_cast<double>(sold) / static_cast<double>(offered);
}

double win_percent(const RoundResult& round, std::span<const ConsumerId> participants)
{
  if (participants.empty())
    throw std::invalid_argument("win percentage undefined: no participants");
  return 100.0 * static_cast<double>(round.allocation().winner_count()) / static_cast<double>(participants.size());
}

RoundRow make_round_row(std::int64_t run, const RoundResult& round, std::int64_t cumulative_drops)
{
  return RoundRow{run,
                  round.round_index,
                  round.total_utility,
                  round.total_satisfaction,
                  round.utilization_percent,
                  round.win_percent,
                  cumulative_drops};
}

RunRow aggregate(std::int64_t run, std::span<const RoundRow> rounds, const Repository& final_repository)
{
  RunRow row;
  row.run = run;
  double utilization = 0.0;
  double wins = 0.0;
  for (const auto& r : rounds)
  {
    row.total_utility += r.total_utility;
    utilization += r.utilization_percent;
    wins += r.win_percent;
  }
  if (!rounds.empty())
  {
    row.mean_utilization = utilization / static_cast<double>(rounds.size());
    row.mean_win_percent = wins / static_cast<double>(rounds.size());
  }

  double drop_round_sum = 0.0;
  for (const auto& [id, rec] : final_repository.records)
    if (rec.dropped_at_round)
    {
      ++row.drops;
      drop_round_sum += static_cast<double>(*rec.dropped_at_round);
    }
  if (row.drops > 0)
    row.mean_drop_round = drop_round_sum / static_cast<double>(row.drops);
  return row;
}

std::string per_round_csv(const SimulationReport& report)
{
  std::string out = std::string(kPerRoundHeader) + "\n";
  for (const auto& r : report.per_round)
  {
    out += std::to_string(r.run) + "," + std::to_string(r.round) + "," + r.total_utility.to_string() + "," +
           format_real(r.total_satisfaction) + "," + format_real(r.utilization_percent) + "," +
           format_real(r.win_percent) + "," + std::to_string(r.cumulative_drops) + "\n";
  }
  return out;
}

std::string per_run_csv(const SimulationReport& report)
{
  std::string out = std::string(kPerRunHeader) + "\n";
  for (const auto& r : report.per_run)
  {
    out += std::to_string(r.run) + "," + r.total_utility.to_string() + "," + std::to_string(r.drops) + "," +
           (r.mean_drop_round ? format_real(*r.mean_drop_round) : std::string{}) + "," +
           format_real(r.mean_utilization) + "," + format_real(r.mean_win_percent) + "\n";
  }
  return out;
}

json report_to_json(const SimulationReport& report)
{
  json rounds = json::array();
  for (const auto& r : report.per_round)
    rounds.push_back({{"run", r.run},
                      {"round", r.round},
                      {"total_utility", r.total_utility.to_double()},
                      {"total_satisfaction", r.total_satisfaction},
                      {"utilization_percent", r.utilization_percent},
                      {"win_percent", r.win_percent},
                      {"cumulative_drops", r.cumulative_drops}});
  json runs = json::array();
  for (const auto& r : report.per_run)
    runs.push_back({{"run", r.run},
                    {"total_utility", r.total_utility.to_double()},
                    {"drops", r.drops},
                    {"mean_drop_round", r.mean_drop_round ? json(*r.mean_drop_round) : json(nullptr)},
                    {"mean_utilization", r.mean_utilization},
                    {"mean_win_percent", r.mean_win_percent}});
  return json{{"schema", "mdfcda.report/1"}, {"config", report.config_echo}, {"per_round", rounds}, {"per_run", runs}};
}

SimulationReport report_from_json(const json& doc)
{
  if (doc.value("schema", std::string{}) != "mdfcda.report/1")
    throw std::invalid_argument("report schema must be mdfcda.report/1");
  try
  {
    SimulationReport report;
    report.config_echo = doc.at("config");
    for (const auto& r : doc.at("per_round"))
      report.per_round.push_back(RoundRow{r.at("run").get<std::int64_t>(),
                                          r.at("round").get<std::int64_t>(),
                                          Money::from_double(r.at("total_utility").get<double>()),
                                          r.at("total_satisfaction").get<double>(),
                                          r.at("utilization_percent").get<double>(),
                                          r.at("win_percent").get<double>(),
                                          r.at("cumulative_drops").get<std::int64_t>()});
    for (const auto& r : doc.at("per_run"))
    {
      RunRow row;
      row.run = r.at("run").get<std::int64_t>();
      row.total_utility = Money::from_double(r.at("total_utility").get<double>());
      row.drops = r.at("drops").get<std::int64_t>();
      if (!r.at("mean_drop_round").is_null())
        row.mean_drop_round = r.at("mean_drop_round").get<double>();
      row.mean_utilization = r.at("mean_utilization").get<double>();
      row.mean_win_percent = r.at("mean_win_percent").get<double>();
      report.per_run.push_back(row);
    }
    return report;
  }
  catch (const json::exception& e)
  {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

void emit(const SimulationReport& report, const std::filesystem::path& destination)
{
  cross_check(report);
  std::error_code ec;
  std::filesystem::create_directories(destination, ec);
  if (ec)
    throw std::runtime_error("cannot create " + destination.string() + ": " + ec.message());

  write_file(destination / "per_round.csv", per_round_csv(report));
  write_file(destination / "per_run.csv", per_run_csv(report));
  write_file(destination / "report.json", report_to_json(report).dump(2) + "\n");
  for (std::size_t k = 0; k < report.repositories.size(); ++k)
  {
    const auto run = k < report.per_run.size() ? report.per_run[k].run : static_cast<std::int64_t>(k + 1);
    save_repository(report.repositories[k], repository_file(destination, run));
  }
}

SimulationReport load_report(const std::filesystem::path& source)
{
  json doc;
  try
  {
    doc = json::parse(read_file(source / "report.json"));
  }
  catch (const json::parse_error& e)
  {
    throw std::invalid_argument((source / "report.json").string() + ": " + e.what());
  }
  auto report = report_from_json(doc);
  for (const auto& row : report.per_run)
  {
    const auto path = repository_file(source, row.run);
    if (!std::filesystem::exists(path))
      break;
    report.repositories.push_back(load_repository(path));
  }
  return report;
}

}  // namespace mdfcda
