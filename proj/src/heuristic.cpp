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

#include <algorithm>
#include <numeric>

#include "cost_model.hpp"
#include "search_common.hpp"

namespace mdfcda {

namespace detail {

std::optional<double> evaluate_set(const WdpInstance& instance, const CostModel& model,
                                   std::span<const std::uint8_t> winners)
{
  const auto cost = model.cost(winners);
  if (!cost)
    return std::nullopt;
  Money value;
  double satisfaction = 0.0;
  for (std::size_t n = 0; n < winners.size(); ++n)
    if (winners[n])
    {
      value += instance.budgets()[n];
      satisfaction += instance.fairness_factor(n);
    }
  return score(value - *cost, satisfaction);
}

double root_bound(const CostModel& model)
{
  double bound = 0.0;
  for (std::size_t n = 0; n < model.consumers(); ++n)
    if (model.serviceable(n) && model.potential(n) > 0.0)
      bound += model.potential(n);
  return bound;
}

SearchResult greedy_with_local_search(const WdpInstance& instance, const CostModel& model)
{
  const std::size_t count = model.consumers();

  // Consumers that could ever improve the objective, best potential first.
  std::vector<std::size_t> ranked;
  for (std::size_t n = 0; n < count; ++n)
    if (model.serviceable(n) && model.potential(n) > 0.0)
      ranked.push_back(n);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](std::size_t a, std::size_t b) { return model.potential(a) > model.potential(b); });

  SearchResult best{std::vector<std::uint8_t>(count, 0), 0.0};

  auto try_admit = [&](SearchResult& current, std::size_t c) {
    if (current.winners[c])
      return;
    current.winners[c] = 1;
    const auto obj = evaluate_set(instance, model, current.winners);
    if (obj)
    {
      auto candidate = current.winners;
      candidate[c] = 0;
      if (preferred(*obj, current.winners, current.objective, candidate))
      {
        current.objective = *obj;
        return;
      }
    }
    current.winners[c] = 0;
  };

  for (std::size_t c : ranked)
    try_admit(best, c);

  // One drop-and-readd pass, weakest admitted consumer first.
  std::vector<std::size_t> admitted;
  for (auto it = ranked.rbegin(); it != ranked.rend(); ++it)
    if (best.winners[*it])
      admitted.push_back(*it);
  for (std::size_t d : admitted)
  {
    if (!best.winners[d])
      continue;
    SearchResult trial = best;
    trial.winners[d] = 0;
    trial.objective = *evaluate_set(instance, model, trial.winners);
    for (std::size_t c : ranked)
      if (c != d)
        try_admit(trial, c);
    if (preferred(trial.objective, trial.winners, best.objective, best.winners))
      best = std::move(trial);
  }
  return best;
}

Allocation materialize(const WdpInstance& instance, std::vector<std::uint8_t> winners)
{
  const auto& shape = instance.shape();
  Allocation alloc{std::move(winners), Transfers(shape.consumers, shape.resource_types, shape.providers)};
  if (!CostModel(instance).cost(alloc.winners, &alloc.transfers))
    throw std::logic_error("solver produced an infeasible winner set");
  return alloc;
}

}  // namespace detail

WdpSolution solve_heuristic(const WdpInstance& instance)
{
  const detail::CostModel model(instance);
  auto found = detail::greedy_with_local_search(instance, model);
  return detail::make_solution(instance, detail::materialize(instance, std::move(found.winners)),
                               Optimality::heuristic, detail::root_bound(model), 0);
}

}  // namespace mdfcda
