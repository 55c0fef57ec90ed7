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

#include "mdfcda/corpus.hpp"

#include <algorithm>

namespace mdfcda {

WdpInstance random_micro_instance(std::mt19937_64& rng, const MicroInstanceLimits& limits)
{
  auto pick = [&rng](auto lo, auto hi) {
    using T = decltype(lo);
    return std::uniform_int_distribution<T>(lo, hi)(rng);
  };
  const auto consumers = pick(std::size_t{1}, limits.max_consumers);
  const auto providers = pick(std::size_t{1}, limits.max_providers);
  const auto types = pick(std::size_t{1}, limits.max_types);

  auto prices = [&]() {
    std::vector<Money> p(types);
    for (auto& v : p)
      v = Money::from_units(pick(limits.min_price, limits.max_price));
    return p;
  };
  auto quantities = [&](bool need_one) {
    std::vector<std::int32_t> q(types);
    do
    {
      for (auto& v : q)
        v = pick(std::int32_t{0}, limits.max_quantity);
    } while (need_one && std::all_of(q.begin(), q.end(), [](auto x) { return x == 0; }));
    return q;
  };

  std::vector<ProviderBid> provider_bids;
  for (std::size_t m = 0; m < providers; ++m)
  {
    auto p = prices();
    provider_bids.emplace_back(ProviderId{static_cast<std::uint32_t>(m)}, std::move(p), quantities(false));
  }
  std::vector<ExtendedConsumerBid> consumer_bids;
  for (std::size_t n = 0; n < consumers; ++n)
  {
    auto p = prices();
    auto q = quantities(true);
    const auto factor = static_cast<double>(pick(limits.min_factor, limits.max_factor));
    consumer_bids.emplace_back(ConsumerBid(ConsumerId{static_cast<std::uint32_t>(n)}, std::move(p), std::move(q)),
                               factor);
  }
  return WdpInstance(types, std::move(consumer_bids), std::move(provider_bids));
}

}  // namespace mdfcda
