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

#ifndef MDFCDA_MODEL_HPP
#define MDFCDA_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdfcda/money.hpp"

namespace mdfcda {

enum class ConsumerId : std::uint32_t {};
enum class ProviderId : std::uint32_t {};

constexpr std::uint32_t to_index(ConsumerId id) { return static_cast<std::uint32_t>(id); }
constexpr std::uint32_t to_index(ProviderId id) { return static_cast<std::uint32_t>(id); }

std::string to_string(ConsumerId id);
std::string to_string(ProviderId id);

/// Market dimensions: N consumers, M providers, L resource types.
struct MarketShape
{
  std::size_t consumers = 1;
  std::size_t providers = 1;
  std::size_t resource_types = 1;

  /// Throws std::invalid_argument when any count is zero.
  void validate() const;

  friend bool operator==(const MarketShape&, const MarketShape&) = default;
};

/// Consumer request: per-type unit price ceiling and the exact bundle wanted.
class ConsumerBid
{
public:
  ConsumerBid(ConsumerId id, std::vector<Money> unit_prices, std::vector<std::int32_t> quantities);

  ConsumerId id() const { return id_; }
  const std::vector<Money>& unit_prices() const { return unit_prices_; }
  const std::vector<std::int32_t>& quantities() const { return quantities_; }
  std::size_t resource_types() const { return unit_prices_.size(); }
  std::int64_t total_units() const;

  friend bool operator==(const ConsumerBid&, const ConsumerBid&) = default;

private:
  ConsumerId id_;
  std::vector<Money> unit_prices_;
  std::vector<std::int32_t> quantities_;
};

/// Provider offer: per-type unit ask and available supply.
class ProviderBid
{
public:
  ProviderBid(ProviderId id, std::vector<Money> unit_prices, std::vector<std::int32_t> quantities);

  ProviderId id() const { return id_; }
  const std::vector<Money>& unit_prices() const { return unit_prices_; }
  const std::vector<std::int32_t>& quantities() const { return quantities_; }
  std::size_t resource_types() const { return unit_prices_.size(); }

  friend bool operator==(const ProviderBid&, const ProviderBid&) = default;

private:
  ProviderId id_;
  std::vector<Money> unit_prices_;
  std::vector<std::int32_t> quantities_;
};

/// A consumer bid tagged with the fairness factor the auctioneer attached to it.
class ExtendedConsumerBid
{
public:
  ExtendedConsumerBid(ConsumerBid bid, double fairness_factor);

  const ConsumerBid& bid() const { return bid_; }
  double fairness_factor() const { return fairness_factor_; }

  friend bool operator==(const ExtendedConsumerBid&, const ExtendedConsumerBid&) = default;

private:
  ConsumerBid bid_;
  double fairness_factor_;
};

/// Total amount a consumer is willing to pay for the whole bundle.
Money budget(const ConsumerBid& bid);

/// Per-consumer participation history kept by the auctioneer.
struct ParticipantRecord
{
  std::int64_t wins = 0;
  std::int64_t losses = 0;
  std::int64_t consecutive_losses = 0;
  std::optional<std::int64_t> dropped_at_round;
  /// Offered unit prices, one entry per round participated, L values each.
  std::vector<std::vector<Money>> price_history;

  void validate() const;

  friend bool operator==(const ParticipantRecord&, const ParticipantRecord&) = default;
};

/// Fairness coefficients. Defaults are the reference parametrization.
struct FairnessParams
{
  double alpha1 = 9.0;
  double alpha2 = 7.0;
  double beta1 = 4.0;
  double beta2 = 28.0;
  std::int64_t max_losses = 6;

  void validate() const;

  friend bool operator==(const FairnessParams&, const FairnessParams&) = default;
};

/// Dense N x L x M array of transferred units y(n, l, m).
class Transfers
{
public:
  Transfers() = default;
  Transfers(std::size_t consumers, std::size_t resource_types, std::size_t providers);

  std::size_t consumers() const { return consumers_; }
  std::size_t resource_types() const { return types_; }
  std::size_t providers() const { return providers_; }

  std::int32_t& at(std::size_t n, std::size_t l, std::size_t m) { return data_[index(n, l, m)]; }
  std::int32_t at(std::size_t n, std::size_t l, std::size_t m) const { return data_[index(n, l, m)]; }

  std::int64_t units_to_consumer(std::size_t n) const;
  std::int64_t total_units() const;

  friend bool operator==(const Transfers&, const Transfers&) = default;

private:
  std::size_t index(std::size_t n, std::size_t l, std::size_t m) const
  {
    return (n * types_ + l) * providers_ + m;
  }

  std::size_t consumers_ = 0;
  std::size_t types_ = 0;
  std::size_t providers_ = 0;
  std::vector<std::int32_t> data_;
};

/// Winner vector x and transfer tensor y. Feasibility is checked by
/// validate_solution, not here, so that infeasible candidates can be inspected.
struct Allocation
{
  std::vector<std::uint8_t> winners;
  Transfers transfers;

  static Allocation empty(const MarketShape& shape);

  std::size_t winner_count() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

}  // namespace mdfcda

#endif  // MDFCDA_MODEL_HPP
