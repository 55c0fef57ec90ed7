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

#ifndef MDFCDA_PRICING_HPP
#define MDFCDA_PRICING_HPP

#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

#include "mdfcda/wdp_solver.hpp"

namespace mdfcda {

/// (consumer index, resource type, provider index) of a traded pair.
using TradeKey = std::tuple<std::size_t, std::size_t, std::size_t>;

struct Settlement
{
  std::map<TradeKey, Money> unit_trade_prices;
  std::vector<Money> consumer_payments;   // indexed like instance.consumers()
  std::vector<Money> provider_receipts;   // indexed like instance.providers()
  std::vector<Money> consumer_utilities;
  std::vector<Money> provider_utilities;
};

/// Per-unit price of a trade: the mean of the two asks.
/// Throws std::invalid_argument when the consumer price is below the provider price.
Money trade_price_unit(Money consumer_price, Money provider_price);

/// Payments, receipts and utilities for a clean allocation.
Settlement settle(const WdpInstance& instance, const Allocation& allocation);

}  // namespace mdfcda

#endif  // MDFCDA_PRICING_HPP
