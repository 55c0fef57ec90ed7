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

#include "mdfcda/wdp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cost_model.hpp"

namespace mdfcda {

WdpInstance::WdpInstance(std::size_t resource_types, std::vector<ExtendedConsumerBid> consumers,
                         std::vector<ProviderBid> providers)
  : consumers_(std::move(consumers)), providers_(std::move(providers))
{
  shape_ = MarketShape{consumers_.size(), providers_.size(), resource_types};
  if (resource_types < 1)
    throw std::invalid_argument("instance needs at least one resource type");
  if (providers_.empty())
    throw std::invalid_argument("instance needs at least one provider");
  for (std::size_t n = 0; n < consumers_.size(); ++n)
  {
    const auto& bid = consumers_[n].bid();
    if (bid.resource_types() != resource_types)
      throw std::invalid_argument("consumer " + to_string(bid.id()) + " bids on " +
                                  std::to_string(bid.resource_types()) + " types, instance has " +
                                  std::to_string(resource_types));
    if (n > 0 && !(consumers_[n - 1].bid().id() < bid.id()))
      throw std::invalid_argument("consumer ids must be strictly ascending (at " + to_string(bid.id()) + ")");
    budgets_.push_back(budget(bid));
  }
  for (std::size_t m = 0; m < providers_.size(); ++m)
  {
    if (providers_[m].resource_types() != resource_types)
      throw std::invalid_argument("provider " + to_string(providers_[m].id()) + " offers " +
                                  std::to_string(providers_[m].resource_types()) + " types, instance has " +
                                  std::to_string(resource_types));
    if (m > 0 && !(providers_[m - 1].id() < providers_[m].id()))
      throw std::invalid_argument("provider ids must be strictly ascending (at " +
                                  to_string(providers_[m].id()) + ")");
  }
}

std::string to_string(Optimality o)
{
  switch (o)
  {
  case Optimality::proved_optimal: return "proved_optimal";
  case Optimality::heuristic: return "heuristic";
  case Optimality::oracle: return "oracle";
  }
  return "unknown";
}

Money transfer_cost(const WdpInstance& instance, const Transfers& transfers)
{
  const auto& shape = instance.shape();
  Money total;
  for (std::size_t n = 0; n < shape.consumers; ++n)
    for (std::size_t l = 0; l < shape.resource_types; ++l)
      for (std::size_t m = 0; m < shape.providers; ++m)
        total += instance.provider(m).unit_prices()[l] * transfers.at(n, l, m);
  return total;
}

std::vector<std::string> validate_solution(const WdpInstance& instance, const Allocation& allocation)
{
  const auto& shape = instance.shape();
  const auto& y = allocation.transfers;
  if (allocation.winners.size() != shape.consumers || y.consumers() != shape.consumers ||
      y.resource_types() != shape.resource_types || y.providers() != shape.providers)
    return {"allocation shape does not match the instance"};

  std::vector<std::string> violations;
  auto where = [&](std::size_t n, std::size_t l, std::size_t m) {
    return "(" + to_string(instance.consumer(n).id()) + ", type " + std::to_string(l) + ", " +
           to_string(instance.provider(m).id()) + ")";
  };

  for (std::size_t n = 0; n < shape.consumers; ++n)
  {
    const auto id = to_string(instance.consumer(n).id());
    const int x = allocation.winners[n];
    if (x != 0 && x != 1)
      violations.push_back("binary: x for " + id + " is " + std::to_string(x));

    const auto moved = y.units_to_consumer(n);
    const auto requested = instance.consumer(n).total_units();
    if (static_cast<std::int64_t>(x) * requested < moved)
      violations.push_back("linkage (x >= sum y / sum Q'): " + id + " receives " + std::to_string(moved) +
                           " units with x=" + std::to_string(x));
    if (static_cast<std::int64_t>(x) > moved)
      violations.push_back("linkage (x <= sum y): " + id + " wins but receives no units");

    for (std::size_t l = 0; l < shape.resource_types; ++l)
    {
      std::int64_t served = 0;
      for (std::size_t m = 0; m < shape.providers; ++m)
      {
        const auto units = y.at(n, l, m);
        served += units;
        const auto cap = instance.provider(m).quantities()[l];
        if (units < 0 || units > cap)
          violations.push_back("domain: y" + where(n, l, m) + " = " + std::to_string(units) + " outside [0, " +
                               std::to_string(cap) + "]");
        if (units > 0 && !compatible(instance.consumer(n).unit_prices()[l], instance.provider(m).unit_prices()[l]))
          violations.push_back("compatibility: y" + where(n, l, m) + " > 0 but consumer price " +
                               instance.consumer(n).unit_prices()[l].to_string() + " < provider price " +
                               instance.provider(m).unit_prices()[l].to_string());
      }
      const auto expected = static_cast<std::int64_t>(x) * instance.consumer(n).quantities()[l];
      if (served != expected)
        violations.push_back("demand: " + id + " type " + std::to_string(l) + " receives " + std::to_string(served) +
                             " units, needs " + std::to_string(expected));
    }
  }

  for (std::size_t l = 0; l < shape.resource_types; ++l)
    for (std::size_t m = 0; m < shape.providers; ++m)
    {
      std::int64_t sold = 0;
      for (std::size_t n = 0; n < shape.consumers; ++n)
        sold += y.at(n, l, m);
      const auto cap = instance.provider(m).quantities()[l];
      if (sold > cap)
        violations.push_back("supply: " + to_string(instance.provider(m).id()) + " type " + std::to_string(l) +
                             " sells " + std::to_string(sold) + " of " + std::to_string(cap) + " units");
    }
  return violations;
}

ObjectiveValue objective_value(const WdpInstance& instance, const Allocation& allocation)
{
  const auto violations = validate_solution(instance, allocation);
  if (!violations.empty())
  {
    std::string msg = "allocation violates " + std::to_string(violations.size()) + " constraint(s):";
    for (const auto& v : violations)
      msg += "\n  " + v;
    throw std::invalid_argument(msg);
  }
  ObjectiveValue out;
  Money value;
  for (std::size_t n = 0; n < instance.shape().consumers; ++n)
    if (allocation.winners[n])
    {
      value += instance.budgets()[n];
      out.total_satisfaction += instance.fairness_factor(n);
    }
  out.total_utility = value - transfer_cost(instance, allocation.transfers);
  out.objective = detail::score(out.total_utility, out.total_satisfaction);
  return out;
}

std::optional<Transfers> min_cost_allocation(const WdpInstance& instance, std::span<const std::uint8_t> winners)
{
  if (winners.size() != instance.shape().consumers)
    throw std::invalid_argument("winner vector has " + std::to_string(winners.size()) + " entries, instance has " +
                                std::to_string(instance.shape().consumers) + " consumers");
  const auto& shape = instance.shape();
  Transfers plan(shape.consumers, shape.resource_types, shape.providers);
  if (!detail::CostModel(instance).cost(winners, &plan))
    return std::nullopt;
  return plan;
}

namespace detail {

CostModel::CostModel(const WdpInstance& instance) : instance_(&instance)
{
  const auto& shape = instance.shape();
  types_.resize(shape.resource_types);
  for (std::size_t l = 0; l < shape.resource_types; ++l)
  {
    auto& tm = types_[l];
    for (std::size_t m = 0; m < shape.providers; ++m)
      if (instance.provider(m).quantities()[l] > 0)
        tm.providers.push_back(m);
    std::stable_sort(tm.providers.begin(), tm.providers.end(), [&](std::size_t a, std::size_t b) {
      return instance.provider(a).unit_prices()[l] < instance.provider(b).unit_prices()[l];
    });
    for (std::size_t n = 0; n < shape.consumers; ++n)
      if (instance.consumer(n).quantities()[l] > 0)
        tm.consumers.push_back(n);
    std::stable_sort(tm.consumers.begin(), tm.consumers.end(), [&](std::size_t a, std::size_t b) {
      return instance.consumer(a).unit_prices()[l] < instance.consumer(b).unit_prices()[l];
    });
  }

  serviceable_.assign(shape.consumers, 1);
  lower_bound_.assign(shape.consumers, Money{});
  potential_.assign(shape.consumers, -std::numeric_limits<double>::infinity());
  for (std::size_t n = 0; n < shape.consumers; ++n)
  {
    const auto& bid = instance.consumer(n);
    for (std::size_t l = 0; l < shape.resource_types && serviceable_[n]; ++l)
    {
      const auto need = bid.quantities()[l];
      if (need == 0)
        continue;
      std::int64_t reachable = 0;
      for (std::size_t m : types_[l].providers)
      {
        const auto& p = instance.provider(m);
        if (!compatible(bid.unit_prices()[l], p.unit_prices()[l]))
          break;
        if (reachable == 0)
          lower_bound_[n] += p.unit_prices()[l] * need;
        reachable += p.quantities()[l];
      }
      if (reachable < need)
        serviceable_[n] = 0;
    }
    if (serviceable_[n])
      potential_[n] = score(instance.budgets()[n] - lower_bound_[n], instance.fairness_factor(n));
  }
}

std::optional<Money> CostModel::cost(std::span<const std::uint8_t> winners, Transfers* out) const
{
  const auto& inst = *instance_;
  Money total;
  std::vector<std::int32_t> left;
  for (std::size_t l = 0; l < types_.size(); ++l)
  {
    const auto& tm = types_[l];
    left.resize(tm.providers.size());
    for (std::size_t k = 0; k < tm.providers.size(); ++k)
      left[k] = inst.provider(tm.providers[k]).quantities()[l];

    std::size_t cursor = 0;
    for (std::size_t n : tm.consumers)
    {
      if (!winners[n])
        continue;
      const auto threshold = inst.consumer(n).unit_prices()[l];
      std::int32_t need = inst.consumer(n).quantities()[l];
      while (need > 0)
      {
        while (cursor < left.size() && left[cursor] == 0)
          ++cursor;
        if (cursor == left.size())
          return std::nullopt;
        const std::size_t m = tm.providers[cursor];
        const auto ask = inst.provider(m).unit_prices()[l];
        if (!compatible(threshold, ask))
          return std::nullopt;
        const auto take = std::min(need, left[cursor]);
        total += ask * take;
        need -= take;
        left[cursor] -= take;
        if (out)
          out->at(n, l, m) += take;
      }
    }
  }
  return total;
}

bool objectives_tie(double a, double b)
{
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-9 * scale;
}

bool preferred(double objective_a, std::span<const std::uint8_t> winners_a, double objective_b,
               std::span<const std::uint8_t> winners_b)
{
  if (objectives_tie(objective_a, objective_b))
    return std::lexicographical_compare(winners_a.begin(), winners_a.end(), winners_b.begin(), winners_b.end());
  return objective_a > objective_b;
}

WdpSolution make_solution(const WdpInstance& instance, Allocation allocation, Optimality optimality,
                          double upper_bound, std::uint64_t nodes)
{
  const auto value = objective_value(instance, allocation);
  WdpSolution s;
  s.allocation = std::move(allocation);
  s.objective = value.objective;
  s.total_utility = value.total_utility;
  s.total_satisfaction = value.total_satisfaction;
  s.optimality = optimality;
  s.gap_bound = optimality == Optimality::heuristic ? std::max(0.0, upper_bound - value.objective) : 0.0;
  s.nodes = nodes;
  return s;
}

}  // namespace detail

}  // namespace mdfcda
