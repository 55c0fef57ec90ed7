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

#include <stdexcept>

#include "cost_model.hpp"

namespace mdfcda {

// Enumerates every winner subset. Each subset is scored through the public
// min_cost_allocation and objective_value, not through the search internals.
WdpSolution solve_oracle(const WdpInstance& instance)
{
  const std::size_t count = instance.shape().consumers;
  if (count > kOracleMaxConsumers)
    throw std::invalid_argument("oracle enumerates at most " + std::to_string(kOracleMaxConsumers) +
                                " consumers, instance has " + std::to_string(count));

  Allocation best = Allocation::empty(instance.shape());
  double best_objective = objective_value(instance, best).objective;
  std::uint64_t visited = 0;

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask)
  {
    ++visited;
    std::vector<std::uint8_t> winners(count);
    for (std::size_t n = 0; n < count; ++n)
      winners[n] = (mask >> n) & 1u;
    auto plan = min_cost_allocation(instance, winners);
    if (!plan)
      continue;
    Allocation candidate{std::move(winners), std::move(*plan)};
    const double obj = objective_value(instance, candidate).objective;
    if (detail::preferred(obj, candidate.winners, best_objective, best.winners))
    {
      best = std::move(candidate);
      best_objective = obj;
    }
  }
  return detail::make_solution(instance, std::move(best), Optimality::oracle, best_objective, visited + 1);
}

}  // namespace mdfcda
