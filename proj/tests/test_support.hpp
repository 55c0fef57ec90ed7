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

#ifndef MDFCDA_TESTS_TEST_SUPPORT_HPP
#define MDFCDA_TESTS_TEST_SUPPORT_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "mdfcda/wdp_solver.hpp"

namespace mdfcda::testing {

inline std::vector<Money> units(std::initializer_list<double> values)
{
  std::vector<Money> out;
  for (double v : values)
    out.push_back(Money::from_double(v));
  return out;
}

inline ConsumerBid consumer(std::uint32_t id, std::initializer_list<double> prices, std::vector<std::int32_t> qty)
{
  return ConsumerBid(ConsumerId{id}, units(prices), std::move(qty));
}

inline ExtendedConsumerBid ext(std::uint32_t id, std::initializer_list<double> prices, std::vector<std::int32_t> qty,
                               double ff = 0.0)
{
  return ExtendedConsumerBid(consumer(id, prices, std::move(qty)), ff);
}

inline ProviderBid provider(std::uint32_t id, std::initializer_list<double> prices, std::vector<std::int32_t> qty)
{
  return ProviderBid(ProviderId{id}, units(prices), std::move(qty));
}

// Brute force over every integer transfer matrix. Written straight from the
// constraint list (supply, exact demand, price compatibility) and shares no
// code with the library solvers.
inline std::optional<Money> brute_min_cost(const WdpInstance& inst, std::span<const std::uint8_t> winners)
{
  const auto& shape = inst.shape();
  Money total;
  for (std::size_t l = 0; l < shape.resource_types; ++l)
  {
    std::vector<std::int32_t> supply(shape.providers);
    for (std::size_t m = 0; m < shape.providers; ++m)
      supply[m] = inst.provider(m).quantities()[l];
    std::vector<std::size_t> demand;
    for (std::size_t n = 0; n < shape.consumers; ++n)
      if (winners[n] && inst.consumer(n).quantities()[l] > 0)
        demand.push_back(n);

    std::optional<Money> best;
    // k: index into demand, m: provider being filled for demand[k], left: units still owed
    auto go = [&](auto&& self, std::size_t k, std::size_t m, std::int32_t left, Money cost) -> void {
      if (k == demand.size())
      {
        if (!best || cost < *best)
          best = cost;
        return;
      }
      const std::size_t n = demand[k];
      if (m == shape.providers)
      {
        if (left == 0)
          self(self, k + 1, 0, k + 1 < demand.size() ? inst.consumer(demand[k + 1]).quantities()[l] : 0, cost);
        return;
      }
      const Money ask = inst.provider(m).unit_prices()[l];
      const bool ok = inst.consumer(n).unit_prices()[l] >= ask;
      const std::int32_t cap = ok ? std::min(left, supply[m]) : 0;
      for (std::int32_t y = 0; y <= cap; ++y)
      {
        supply[m] -= y;
        self(self, k, m + 1, left - y, cost + ask * y);
        supply[m] += y;
      }
    };
    go(go, 0, 0, demand.empty() ? 0 : inst.consumer(demand[0]).quantities()[l], Money{});
    if (!best)
      return std::nullopt;
    total += *best;
  }
  return total;
}

struct BruteOptimum
{
  double objective = 0.0;
  std::vector<std::uint8_t> winners;
};

// Maximum of sum(budget + factor) - min cost over all winner subsets.
inline BruteOptimum brute_optimum(const WdpInstance& inst)
{
  const std::size_t n = inst.shape().consumers;
  BruteOptimum best{0.0, std::vector<std::uint8_t>(n, 0)};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
  {
    std::vector<std::uint8_t> w(n);
    Money value;
    double ff = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
      w[i] = (mask >> i) & 1;
      if (w[i])
      {
        value += inst.budgets()[i];
        ff += inst.fairness_factor(i);
      }
    }
    const auto cost = brute_min_cost(inst, w);
    if (!cost)
      continue;
    const double obj = (value - *cost).to_double() + ff;
    if (obj > best.objective)
      best = {obj, w};
  }
  return best;
}

inline std::filesystem::path scratch_dir(const std::string& name)
{
  auto dir = std::filesystem::temp_directory_path() / ("mdfcda_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

inline std::string slurp(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mdfcda::testing

#endif  // MDFCDA_TESTS_TEST_SUPPORT_HPP
