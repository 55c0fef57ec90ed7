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

#include "mdfcda/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mdfcda {

namespace {

template <typename Id>
void check_prices_and_quantities(const char* who, Id id, const std::vector<Money>& prices,
                                 const std::vector<std::int32_t>& quantities)
{
  const auto label = std::string(who) + " " + to_string(id);
  if (prices.empty())
    throw std::invalid_argument(label + ": bid covers no resource types");
  if (prices.size() != quantities.size())
    throw std::invalid_argument(label + ": " + std::to_string(prices.size()) + " prices but " +
                                std::to_string(quantities.size()) + " quantities");
  for (std::size_t l = 0; l < prices.size(); ++l)
  {
    if (prices[l] < Money{})
      throw std::invalid_argument(label + ": negative unit price for type " + std::to_string(l));
    if (!prices[l].is_whole_cents())
      throw std::invalid_argument(label + ": unit price " + prices[l].to_string() + " for type " +
                                  std::to_string(l) + " is not a whole number of cents");
    if (quantities[l] < 0)
      throw std::invalid_argument(label + ": negative quantity for type " + std::to_string(l));
  }
}

}  // namespace

std::string to_string(ConsumerId id) { return "c" + std::to_string(to_index(id)); }
std::string to_string(ProviderId id) { return "p" + std::to_string(to_index(id)); }

void MarketShape::validate() const
{
  if (consumers < 1 || providers < 1 || resource_types < 1)
    throw std::invalid_argument("market shape needs at least one consumer, provider and resource type (got N=" +
                                std::to_string(consumers) + ", M=" + std::to_string(providers) +
                                ", L=" + std::to_string(resource_types) + ")");
}

ConsumerBid::ConsumerBid(ConsumerId id, std::vector<Money> unit_prices, std::vector<std::int32_t> quantities)
  : id_(id), unit_prices_(std::move(unit_prices)), quantities_(std::move(quantities))
{
  check_prices_and_quantities("consumer", id_, unit_prices_, quantities_);
  if (std::none_of(quantities_.begin(), quantities_.end(), [](auto q) { return q >= 1; }))
    throw std::invalid_argument("consumer " + to_string(id_) + ": requests no units");
}

std::int64_t ConsumerBid::total_units() const
{
  return std::accumulate(quantities_.begin(), quantities_.end(), std::int64_t{0});
}

ProviderBid::ProviderBid(ProviderId id, std::vector<Money> unit_prices, std::vector<std::int32_t> quantities)
  : id_(id), unit_prices_(std::move(unit_prices)), quantities_(std::move(quantities))
{
  check_prices_and_quantities("provider", id_, unit_prices_, quantities_);
}

ExtendedConsumerBid::ExtendedConsumerBid(ConsumerBid bid, double fairness_factor)
  : bid_(std::move(bid)), fairness_factor_(fairness_factor)
{
  if (!std::isfinite(fairness_factor_))
    throw std::invalid_argument("consumer " + to_string(bid_.id()) + ": fairness factor is not finite");
}

Money budget(const ConsumerBid& bid)
{
  Money total;
  for (std::size_t l = 0; l < bid.resource_types(); ++l)
    total += bid.unit_prices()[l] * bid.quantities()[l];
  return total;
}

void ParticipantRecord::validate() const
{
  if (wins < 0 || losses < 0 || consecutive_losses < 0)
    throw std::invalid_argument("participant record has negative counters");
  if (consecutive_losses > losses)
    throw std::invalid_argument("participant record: consecutive losses (" + std::to_string(consecutive_losses) +
                                ") exceed total losses (" + std::to_string(losses) + ")");
  if (dropped_at_round && *dropped_at_round < 1)
    throw std::invalid_argument("participant record: drop round must be >= 1");
}

void FairnessParams::validate() const
{
  for (double v : {alpha1, alpha2, beta1, beta2})
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("fairness coefficients must be finite and non-negative");
  if (!(beta2 > 0.0))
    throw std::invalid_argument("fairness coefficient beta2 must be positive");
  if (max_losses < 1)
    throw std::invalid_argument("max_losses must be at least 1");
}

Transfers::Transfers(std::size_t consumers, std::size_t resource_types, std::size_t providers)
  : consumers_(consumers), types_(resource_types), providers_(providers),
    data_(consumers * resource_types * providers, 0)
{
}

std::int64_t Transfers::units_to_consumer(std::size_t n) const
{
  const auto first = data_.begin() + static_cast<std::ptrdiff_t>(n * types_ * providers_);
  return std::accumulate(first, first + static_cast<std::ptrdiff_t>(types_ * providers_), std::int64_t{0});
}

std::int64_t Transfers::total_units() const
{
  return std::accumulate(data_.begin(), data_.end(), std::int64_t{0});
}

Allocation Allocation::empty(const MarketShape& shape)
{
  return Allocation{std::vector<std::uint8_t>(shape.consumers, 0),
                    Transfers(shape.consumers, shape.resource_types, shape.providers)};
}

std::size_t Allocation::winner_count() const
{
  return static_cast<std::size_t>(std::count_if(winners.begin(), winners.end(), [](auto x) { return x != 0; }));
}

}  // namespace mdfcda
