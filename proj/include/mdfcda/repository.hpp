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

#ifndef MDFCDA_REPOSITORY_HPP
#define MDFCDA_REPOSITORY_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mdfcda/model.hpp"

namespace mdfcda {

enum class RoundOutcome
{
  won,
  lost
};

/// Auctioneer's memory of every consumer it has seen.
///
/// Besides the per-consumer records it keeps what the next round's fairness
/// computation needs from the round just played: who won or lost it and the
/// per-type mean unit price consumers offered.
struct Repository
{
  std::map<ConsumerId, ParticipantRecord> records;
  std::int64_t round_counter = 0;
  std::map<ConsumerId, RoundOutcome> previous_outcomes;
  std::vector<double> market_mean_prices;

  /// Adds an empty record if the consumer is new; no-op otherwise.
  void register_consumer(ConsumerId id);

  /// Throws std::out_of_range naming the consumer if no record exists.
  const ParticipantRecord& record(ConsumerId id) const;

  bool is_dropped(ConsumerId id) const;
  std::size_t drop_count() const;

  friend bool operator==(const Repository&, const Repository&) = default;
};

/// Snapshot text: a JSON document with schema "mdfcda.repository/1".
///
///   { "schema": "mdfcda.repository/1", "round_counter": 12,
///     "market_mean_prices": [171.2, 160.05],
///     "consumers": [ { "id": 0, "wins": 3, "losses": 9, "consecutive_losses": 2,
///                      "dropped_at_round": null, "last_outcome": "lost",
///                      "price_history": [["120.000", "99.500"], ...] }, ... ] }
///
/// Money is written as exact decimal strings; mean prices as JSON numbers.
std::string export_repository(const Repository& repo);
Repository import_repository(const std::string& text);

void save_repository(const Repository& repo, const std::filesystem::path& path);
Repository load_repository(const std::filesystem::path& path);

}  // namespace mdfcda

#endif  // MDFCDA_REPOSITORY_HPP
