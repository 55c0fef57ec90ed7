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

#ifndef MDFCDA_SCENARIO_HPP
#define MDFCDA_SCENARIO_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mdfcda/model.hpp"

namespace mdfcda {

template <typename T>
struct Interval
{
  T lo{};
  T hi{};

  bool contains(T v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Market generator settings. Defaults are the reference setup:
/// 300 consumers, 5 providers, 4 resource types, 10 runs.
struct ScenarioConfig
{
  MarketShape shape{300, 5, 4};
  std::int64_t runs = 10;
  Interval<std::int32_t> provider_quantity_range{30, 100};
  Interval<std::int32_t> consumer_quantity_range{1, 3};
  Interval<Money> provider_price_range{Money::from_units(50), Money::from_units(200)};
  Interval<Money> consumer_price_range{Money::from_units(100), Money::from_units(250)};
  /// Relative half-width of the window around a consumer's previous price.
  double price_drift = 0.10;
  /// Draw fresh provider bids every round instead of once per run.
  bool regenerate_providers = true;

  void validate() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// One bid per provider; per type, quantity and whole-cent price are
/// uniform on the configured ranges.
std::vector<ProviderBid> generate_provider_bids(const ScenarioConfig& config, std::mt19937_64& rng);

/// One bid per consumer (ids 0..N-1).
///
/// Round 1 prices are uniform on the consumer price range. In later rounds
/// each price is drawn uniformly within +/- price_drift of that consumer's
/// previous price for the type, rounded to the cent and clamped into the
/// range. `previous_prices` must be given (N rows of L prices) exactly when
/// round_index > 1.
std::vector<ConsumerBid> generate_consumer_bids(const ScenarioConfig& config, std::mt19937_64& rng,
                                                std::int64_t round_index,
                                                std::span<const std::vector<Money>> previous_prices = {});

}  // namespace mdfcda

#endif  // MDFCDA_SCENARIO_HPP
