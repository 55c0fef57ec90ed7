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

#include "mdfcda/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mdfcda {

namespace {

std::int64_t cents(Money m) { return m.ticks() / Money::kTicksPerCent; }

Money uniform_price(const Interval<Money>& range, std::mt19937_64& rng)
{
  std::uniform_int_distribution<std::int64_t> dist(cents(range.lo), cents(range.hi));
  return Money::from_cents(dist(rng));
}

std::int32_t uniform_quantity(const Interval<std::int32_t>& range, std::mt19937_64& rng)
{
  return std::uniform_int_distribution<std::int32_t>(range.lo, range.hi)(rng);
}

template <typename T>
void check_interval(const char* name, const Interval<T>& r)
{
  if (r.lo < T{} || r.hi < r.lo)
    throw std::invalid_argument(std::string(name) + " must be a non-empty interval with non-negative bounds");
}

}  // namespace

void ScenarioConfig::validate() const
{
  shape.validate();
  if (runs < 1)
    throw std::invalid_argument("runs must be at least 1");
  check_interval("provider_quantity_range", provider_quantity_range);
  check_interval("consumer_quantity_range", consumer_quantity_range);
  check_interval("provider_price_range", provider_price_range);
  check_interval("consumer_price_range", consumer_price_range);
  if (consumer_quantity_range.hi < 1)
    throw std::invalid_argument("consumer_quantity_range must allow at least one unit");
  for (Money m : {provider_price_range.lo, provider_price_range.hi, consumer_price_range.lo, consumer_price_range.hi})
    if (!m.is_whole_cents())
      throw std::invalid_argument("price ranges must be whole cents");
  if (!std::isfinite(price_drift) || price_drift < 0.0 || price_drift >= 1.0)
    throw std::invalid_argument("price_drift must be in [0, 1)");
}

std::vector<ProviderBid> generate_provider_bids(const ScenarioConfig& config, std::mt19937_64& rng)
{
  const auto types = config.shape.resource_types;
  std::vector<ProviderBid> bids;
  bids.reserve(config.shape.providers);
  for (std::size_t m = 0; m < config.shape.providers; ++m)
  {
    std::vector<Money> prices(types);
    std::vector<std::int32_t> quantities(types);
    for (std::size_t l = 0; l < types; ++l)
    {
      quantities[l] = uniform_quantity(config.provider_quantity_range, rng);
      prices[l] = uniform_price(config.provider_price_range, rng);
    }
    bids.emplace_back(ProviderId{static_cast<std::uint32_t>(m)}, std::move(prices), std::move(quantities));
  }
  return bids;
}

std::vector<ConsumerBid> generate_consumer_bids(const ScenarioConfig& config, std::mt19937_64& rng,
                                                std::int64_t round_index,
                                                std::span<const std::vector<Money>> previous_prices)
{
  const auto count = config.shape.consumers;
  const auto types = config.shape.resource_types;
  if (round_index < 1)
    throw std::invalid_argument("round index must be at least 1");
  const bool follow_previous = round_index > 1;
  if (follow_previous && previous_prices.size() != count)
    throw std::invalid_argument("round " + std::to_string(round_index) + " needs previous prices for all " +
                                std::to_string(count) + " consumers");
  if (!follow_previous && !previous_prices.empty())
    throw std::invalid_argument("round 1 takes no previous prices");

  const auto lo_cents = cents(config.consumer_price_range.lo);
  const auto hi_cents = cents(config.consumer_price_range.hi);

  std::vector<ConsumerBid> bids;
  bids.reserve(count);
  for (std::size_t n = 0; n < count; ++n)
  {
    std::vector<Money> prices(types);
    std::vector<std::int32_t> quantities(types);
    for (std::size_t l = 0; l < types; ++l)
    {
      quantities[l] = uniform_quantity(config.consumer_quantity_range, rng);
      if (!follow_previous)
      {
        prices[l] = uniform_price(config.consumer_price_range, rng);
        continue;
      }
      if (previous_prices[n].size() != types)
        throw std::invalid_argument("previous prices for consumer " + std::to_string(n) + " have wrong length");
      const double prev = static_cast<double>(cents(previous_prices[n][l]));
      std::uniform_real_distribution<double> window(prev * (1.0 - config.price_drift),
                                                    prev * (1.0 + config.price_drift));
      const auto drawn = std::llround(window(rng));
      prices[l] = Money::from_cents(std::clamp<std::int64_t>(drawn, lo_cents, hi_cents));
    }
    // An all-zero request is not a bid; redraw the first type until it asks for something.
    while (std::all_of(quantities.begin(), quantities.end(), [](auto q) { return q == 0; }))
      quantities[0] = uniform_quantity(config.consumer_quantity_range, rng);
    bids.emplace_back(ConsumerId{static_cast<std::uint32_t>(n)}, std::move(prices), std::move(quantities));
  }
  return bids;
}

}  // namespace mdfcda
