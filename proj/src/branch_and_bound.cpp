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
#include <chrono>
#include <limits>
#include <stdexcept>

#include "cost_model.hpp"
#include "search_common.hpp"

namespace mdfcda {

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first search over candidates in ascending consumer order, trying
// "win" before "lose". Consumers with non-positive potential are fixed to
// lose: including one can never raise the objective, and leaving it out
// gives the lexicographically smaller vector on a tie.
class BranchAndBound
{
public:
  BranchAndBound(const WdpInstance& instance, const SolverLimits& limits)
    : instance_(instance), model_(instance), limits_(limits), deadline_(Clock::now() + limits.time_budget)
  {
    for (std::size_t n = 0; n < model_.consumers(); ++n)
      if (model_.serviceable(n) && model_.potential(n) > 0.0)
        candidates_.push_back(n);
    suffix_.assign(candidates_.size() + 1, 0.0);
    for (std::size_t k = candidates_.size(); k-- > 0;)
      suffix_[k] = suffix_[k + 1] + model_.potential(candidates_[k]);

    incumbent_ = detail::greedy_with_local_search(instance_, model_);
    current_.assign(model_.consumers(), 0);
  }

  void run() { explore(0, Money{}, 0.0); }

  bool complete() const { return !aborted_; }
  double open_bound() const { return open_bound_; }
  std::uint64_t nodes() const { return nodes_; }
  detail::SearchResult incumbent() const { return incumbent_; }

private:
  // `budget_minus_cost` and `satisfaction` describe the consumers already fixed to win.
  void explore(std::size_t k, Money budget_minus_cost, double satisfaction)
  {
    const double here = detail::score(budget_minus_cost, satisfaction);
    const double bound = here + suffix_[k];
    if (out_of_budget())
    {
      note_open(bound);
      return;
    }
    ++nodes_;
    if (k == candidates_.size() || prunable(bound, k))
      return;

    const std::size_t c = candidates_[k];
    current_[c] = 1;
    if (const auto cost = model_.cost(current_))
    {
      const Money value = budget_minus_cost + instance_.budgets()[c] + cost_so_far_ - *cost;
      const double sat = satisfaction + instance_.fairness_factor(c);
      const double obj = detail::score(value, sat);
      if (detail::preferred(obj, current_, incumbent_.objective, incumbent_.winners))
        incumbent_ = {current_, obj};

      const Money saved_cost = cost_so_far_;
      cost_so_far_ = *cost;
      explore(k + 1, value, sat);
      cost_so_far_ = saved_cost;
    }
    current_[c] = 0;

    if (aborted_)
    {
      note_open(here + suffix_[k + 1]);
      return;
    }
    explore(k + 1, budget_minus_cost, satisfaction);
  }

  // A node whose bound cannot beat the incumbent is dropped; on a tie it is
  // kept only while its fixed prefix is not lexicographically larger.
  bool prunable(double bound, std::size_t k) const
  {
    if (detail::objectives_tie(bound, incumbent_.objective))
    {
      const auto prefix = static_cast<std::ptrdiff_t>(candidates_[k]);
      return std::lexicographical_compare(incumbent_.winners.begin(), incumbent_.winners.begin() + prefix,
                                          current_.begin(), current_.begin() + prefix);
    }
    return bound < incumbent_.objective;
  }

  bool out_of_budget()
  {
    if (aborted_)
      return true;
    if (nodes_ >= limits_.node_budget || ((nodes_ & 0x3ff) == 0 && Clock::now() > deadline_))
      aborted_ = true;
    return aborted_;
  }

  void note_open(double bound) { open_bound_ = std::max(open_bound_, bound); }

  const WdpInstance& instance_;
  detail::CostModel model_;
  SolverLimits limits_;
  Clock::time_point deadline_;

  std::vector<std::size_t> candidates_;
  std::vector<double> suffix_;
  std::vector<std::uint8_t> current_;
  Money cost_so_far_;
  detail::SearchResult incumbent_;

  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  double open_bound_ = -std::numeric_limits<double>::infinity();
};

}  // namespace

WdpSolution solve_exact(const WdpInstance& instance, const SolverLimits& limits)
{
  if (limits.time_budget.count() <= 0 || limits.node_budget == 0)
    throw std::invalid_argument("solver limits must be positive");

  BranchAndBound search(instance, limits);
  search.run();

  auto best = search.incumbent();
  const double upper = std::max(search.open_bound(), best.objective);
  const auto optimality = search.complete() ? Optimality::proved_optimal : Optimality::heuristic;
  return detail::make_solution(instance, detail::materialize(instance, std::move(best.winners)), optimality, upper,
                               search.nodes());
}

}  // namespace mdfcda
