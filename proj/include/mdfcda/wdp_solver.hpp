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

#ifndef MDFCDA_WDP_SOLVER_HPP
#define MDFCDA_WDP_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdfcda/model.hpp"

namespace mdfcda {

/// Winner determination instance. Consumer ids must be strictly ascending;
/// ties between equally good allocations are broken on that order.
/// Zero consumers is allowed (a market where every bidder has left).
class WdpInstance
{
public:
  WdpInstance(std::size_t resource_types, std::vector<ExtendedConsumerBid> consumers,
              std::vector<ProviderBid> providers);

  const MarketShape& shape() const { return shape_; }
  const std::vector<ExtendedConsumerBid>& consumers() const { return consumers_; }
  const std::vector<ProviderBid>& providers() const { return providers_; }
  const std::vector<Money>& budgets() const { return budgets_; }

  const ConsumerBid& consumer(std::size_t n) const { return consumers_[n].bid(); }
  const ProviderBid& provider(std::size_t m) const { return providers_[m]; }
  double fairness_factor(std::size_t n) const { return consumers_[n].fairness_factor(); }

  friend bool operator==(const WdpInstance&, const WdpInstance&) = default;

private:
  MarketShape shape_;
  std::vector<ExtendedConsumerBid> consumers_;
  std::vector<ProviderBid> providers_;
  std::vector<Money> budgets_;
};

enum class Optimality
{
  proved_optimal,
  heuristic,
  oracle
};

std::string to_string(Optimality o);

struct WdpSolution
{
  Allocation allocation;
  double objective = 0.0;
  Money total_utility;
  double total_satisfaction = 0.0;
  Optimality optimality = Optimality::proved_optimal;
  double gap_bound = 0.0;
  std::uint64_t nodes = 0;
};

struct ObjectiveValue
{
  double objective = 0.0;
  Money total_utility;
  double total_satisfaction = 0.0;
};

struct SolverLimits
{
  std::chrono::milliseconds time_budget{10'000};
  std::uint64_t node_budget = 5'000'000;
};

/// A unit of type l may move from provider to consumer only if the
/// consumer's unit price covers the provider's ask.
constexpr bool compatible(Money consumer_price, Money provider_price)
{
  return consumer_price >= provider_price;
}

/// Total utility = sum of winners' budgets minus the providers' asks for
/// every unit moved; satisfaction = sum of winners' fairness factors.
/// Throws std::invalid_argument listing violations for an infeasible allocation.
ObjectiveValue objective_value(const WdpInstance& instance, const Allocation& allocation);

/// Sum over all moved units of the provider's unit ask.
Money transfer_cost(const WdpInstance& instance, const Transfers& transfers);

/// Cheapest way to give every flagged consumer exactly its bundle, solved
/// independently per resource type. Returns std::nullopt when no feasible
/// plan exists.
std::optional<Transfers> min_cost_allocation(const WdpInstance& instance, std::span<const std::uint8_t> winners);

/// Branch and bound over the winner vector. Returns the incumbent and a gap
/// bound when a limit stops the search early.
WdpSolution solve_exact(const WdpInstance& instance, const SolverLimits& limits = {});

/// Exhaustive enumeration of winner subsets; at most kOracleMaxConsumers.
inline constexpr std::size_t kOracleMaxConsumers = 12;
WdpSolution solve_oracle(const WdpInstance& instance);

/// Greedy admission by optimistic surplus, then one drop-and-readd pass.
WdpSolution solve_heuristic(const WdpInstance& instance);

/// One human-readable entry per violated constraint; empty when feasible.
std::vector<std::string> validate_solution(const WdpInstance& instance, const Allocation& allocation);

}  // namespace mdfcda

#endif  // MDFCDA_WDP_SOLVER_HPP
