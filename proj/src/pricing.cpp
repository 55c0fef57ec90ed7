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

#include "mdfcda/pricing.hpp"

#include <stdexcept>

namespace mdfcda {

Money trade_price_unit(Money consumer_price, Money provider_price)
{
  if (!compatible(consumer_price, provider_price))
    throw std::invalid_argument("no trade possible: consumer price " + consumer_price.to_string() +
                                " is below provider price " + provider_price.to_string());
  return midpoint(consumer_price, provider_price);
}

Settlement settle(const WdpInstance& instance, const Allocation& allocation)
{
  const auto& shape = instance.shape();
  if (const auto violations = validate_solution(instance, allocation); !violations.empty())
    throw std::invalid_argument("cannot settle an infeasible allocation: " + violations.front());

  Settlement s;
  s.consumer_payments.assign(shape.consumers, Money{});
  s.consumer_utilities.assign(shape.consumers, Money{});
  s.provider_receipts.assign(shape.providers, Money{});
  s.provider_utilities.assign(shape.providers, Money{});

  for (std::size_t n = 0; n < shape.consumers; ++n)
    for (std::size_t l = 0; l < shape.resource_types; ++l)
      for (std::size_t m = 0; m < shape.providers; ++m)
      {
        const auto units = allocation.transfers.at(n, l, m);
        if (units == 0)
          continue;
        const Money ask = instance.provider(m).unit_prices()[l];
        const Money offer = instance.consumer(n).unit_prices()[l];
        const Money price = trade_price_unit(offer, ask);
        s.unit_trade_prices.emplace(TradeKey{n, l, m}, price);
        s.consumer_payments[n] += price * units;
        s.provider_receipts[m] += price * units;
        s.consumer_utilities[n] += (offer - price) * units;
        s.provider_utilities[m] += (price - ask) * units;
      }
  return s;
}

}  // namespace mdfcda
