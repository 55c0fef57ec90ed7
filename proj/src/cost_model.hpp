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

#ifndef MDFCDA_SRC_COST_MODEL_HPP
#define MDFCDA_SRC_COST_MODEL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mdfcda/wdp_solver.hpp"

namespace mdfcda::detail {

/// Per-type transportation structure of an instance, prepared once and
/// reused for every winner set a solver evaluates.
///
/// Compatibility is nested: a consumer with threshold t can use exactly the
/// providers whose ask is <= t. Serving consumers in ascending threshold
/// order, each from the cheapest provider with units left, is therefore both
/// feasibility-complete and cost-optimal.
class CostModel
{
public:
  explicit CostModel(const WdpInstance& instance);

  /// Minimum cost of serving the flagged consumers, or nullopt if infeasible.
  /// Fills `out` with the plan when given.
  std::optional<Money> cost(std::span<const std::uint8_t> winners, Transfers* out = nullptr) const;

  /// Could this consumer be served if it were the only winner?
  bool serviceable(std::size_t n) const { return serviceable_[n] != 0; }

  /// Units times the cheapest compatible ask, supply ignored. A lower bound
  /// on what adding this consumer to any winner set costs.
  Money cost_lower_bound(std::size_t n) const { return lower_bound_[n]; }

  /// Upper bound on the objective gain from adding consumer n to any set:
  /// v_n + ff_n - cost_lower_bound(n).
  double potential(std::size_t n) const { return potential_[n]; }

  std::size_t consumers() const { return serviceable_.size(); }

private:
  struct TypeMarket
  {
    std::vector<std::size_t> providers;  // positive supply, ascending ask
    std::vector<std::size_t> consumers;  // positive demand, ascending threshold
  };

  const WdpInstance* instance_;
  std::vector<TypeMarket> types_;
  std::vector<std::uint8_t> serviceable_;
  std::vector<Money> lower_bound_;
  std::vector<double> potential_;
};

/// Objective as compared by every solver.
inline double score(Money utility, double satisfaction) { return utility.to_double() + satisfaction; }

/// Strict "a is preferred to b": higher objective, or an objective tie
/// (relative tolerance 1e-9) and a lexicographically smaller winner vector.
bool preferred(double objective_a, std::span<const std::uint8_t> winners_a, double objective_b,
               std::span<const std::uint8_t> winners_b);

bool objectives_tie(double a, double b);

/// Builds a solution record, recomputing the objective from the allocation.
WdpSolution make_solution(const WdpInstance& instance, Allocation allocation, Optimality optimality,
                          double upper_bound, std::uint64_t nodes);

}  // namespace mdfcda::detail

#endif  // MDFCDA_SRC_COST_MODEL_HPP
