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

#include "mdfcda/repository.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mdfcda {

namespace {

constexpr const char* kSchema = "mdfcda.repository/1";

}  // namespace

void Repository::register_consumer(ConsumerId id)
{
  records.try_emplace(id);
}

const ParticipantRecord& Repository::record(ConsumerId id) const
{
  const auto it = records.find(id);
  if (it == records.end())
    throw std::out_of_range("repository has no record for consumer " + to_string(id));
  return it->second;
}

bool Repository::is_dropped(ConsumerId id) const
{
  const auto it = records.find(id);
  return it != records.end() && it->second.dropped_at_round.has_value();
}

std::size_t Repository::drop_count() const
{
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& kv) {
    return kv.second.dropped_at_round.has_value();
  }));
}

std::string export_repository(const Repository& repo)
{
  using nlohmann::json;
  json consumers = json::array();
  for (const auto& [id, rec] : repo.records)
  {
    json history = json::array();
    for (const auto& entry : rec.price_history)
    {
      json row = json::array();
      for (Money p : entry)
        row.push_back(p.to_string());
      history.push_back(std::move(row));
    }
    json last = nullptr;
    if (auto it = repo.previous_outcomes.find(id); it != repo.previous_outcomes.end())
      last = it->second == RoundOutcome::won ? "won" : "lost";
    consumers.push_back({
        {"id", to_index(id)},
        {"wins", rec.wins},
        {"losses", rec.losses},
        {"consecutive_losses", rec.consecutive_losses},
        {"dropped_at_round", rec.dropped_at_round ? json(*rec.dropped_at_round) : json(nullptr)},
        {"last_outcome", last},
        {"price_history", std::move(history)},
    });
  }
  json doc = {
      {"schema", kSchema},
      {"round_counter", repo.round_counter},
      {"market_mean_prices", repo.market_mean_prices},
      {"consumers", std::move(consumers)},
  };
  return doc.dump(2) + "\n";
}

Repository import_repository(const std::string& text)
{
  using nlohmann::json;
  json doc;
  try
  {
    doc = json::parse(text);
  }
  catch (const json::parse_error& e)
  {
    throw std::invalid_argument(std::string("repository snapshot is not valid JSON: ") + e.what());
  }
  if (doc.value("schema", std::string{}) != kSchema)
    throw std::invalid_argument(std::string("repository snapshot schema must be ") + kSchema);

  try
  {
    Repository repo;
    repo.round_counter = doc.at("round_counter").get<std::int64_t>();
    repo.market_mean_prices = doc.at("market_mean_prices").get<std::vector<double>>();
    for (const auto& c : doc.at("consumers"))
    {
      const auto id = ConsumerId{c.at("id").get<std::uint32_t>()};
      ParticipantRecord rec;
      rec.wins = c.at("wins").get<std::int64_t>();
      rec.losses = c.at("losses").get<std::int64_t>();
      rec.consecutive_losses = c.at("consecutive_losses").get<std::int64_t>();
      if (!c.at("dropped_at_round").is_null())
        rec.dropped_at_round = c.at("dropped_at_round").get<std::int64_t>();
      for (const auto& row : c.at("price_history"))
      {
        std::vector<Money> entry;
        for (const auto& p : row)
          entry.push_back(Money::parse(p.get<std::string>()));
        rec.price_history.push_back(std::move(entry));
      }
      rec.validate();
      const auto& last = c.at("last_outcome");
      if (!last.is_null())
      {
        const auto s = last.get<std::string>();
        if (s != "won" && s != "lost")
          throw std::invalid_argument("consumer " + to_string(id) + ": last_outcome must be won, lost or null");
        repo.previous_outcomes[id] = s == "won" ? RoundOutcome::won : RoundOutcome::lost;
      }
      if (!repo.records.emplace(id, std::move(rec)).second)
        throw std::invalid_argument("duplicate record for consumer " + to_string(id));
    }
    return repo;
  }
  catch (const json::exception& e)
  {
    throw std::invalid_argument(std::string("malformed repository snapshot: ") + e.what());
  }
}

void save_repository(const Repository& repo, const std::filesystem::path& path)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << export_repository(repo);
  if (!out)
    throw std::runtime_error("failed writing " + path.string());
}

Repository load_repository(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return import_repository(buf.str());
}

}  // namespace mdfcda
