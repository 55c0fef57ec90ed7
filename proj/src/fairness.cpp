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

#include "mdfcda/fairness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mdfcda {

namespace {

constexpr double kEvalMin = 0.1;
constexpr double kEvalMax = 10.0;

void require_positive_eval(double eval)
{
  if (!(eval > 0.0) || !std::isfinite(eval))
    throw std::invalid_argument("eval_fun value must be positive and finite");
}

}  // namespace

double FairnessOutcome::factor(ConsumerId id) const
{
  const auto it = factors.find(id);
  return it == factors.end() ? 0.0 : it->second;
}

FairnessBranch FairnessOutcome::branch(ConsumerId id) const
{
  const auto it = applied_branch.find(id);
  return it == applied_branch.end() ? FairnessBranch::none : it->second;
}

double eval_fun(const ParticipantRecord& record, std::span<const double> market_mean_prices)
{
  if (record.price_history.empty())
    return 1.0;
  const auto& last = record.price_history.back();
  if (last.size() != market_mean_prices.size())
    throw std::invalid_argument("price history has " + std::to_string(last.size()) + " types but market has " +
                                std::to_string(market_mean_prices.size()));
  double sum = 0.0;
  for (std::size_t l = 0; l < last.size(); ++l)
  {
    if (!(market_mean_prices[l] > 0.0))
      throw std::invalid_argument("market mean price for type " + std::to_string(l) + " must be positive");
    sum += last[l].to_double() / market_mean_prices[l];
  }
  return std::clamp(sum / static_cast<double>(last.size()), kEvalMin, kEvalMax);
}

double fun_w(std::int64_t losses, double eval, std::int64_t consecutive_losses, const FairnessParams& params)
{
  return static_cast<double>(consecutive_losses + 1) *
         (params.alpha1 * static_cast<double>(losses) + params.alpha2 * eval);
}

double fun_l(std::int64_t wins, double eval, std::int64_t consecutive_losses, const FairnessParams& params)
{
  require_positive_eval(eval);
  return -1.0 / static_cast<double>(consecutive_losses + 1) *
         (params.beta1 * static_cast<double>(wins) + params.beta2 / eval);
}

double prob_w(std::int64_t consecutive_losses, const FairnessParams& params)
{
  return std::min(1.0, static_cast<double>(consecutive_losses + 1) / static_cast<double>(params.max_losses + 1));
}

double prob_l(std::int64_t consecutive_losses, const FairnessParams&)
{
  return 1.0 / static_cast<double>(consecutive_losses + 1);
}

UniformDraw uniform_draw(std::mt19937_64& rng)
{
  return [&rng]() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); };
}

FairnessOutcome compute_fairness_factors(const Repository& repository, std::span<const ConsumerId> participants,
                                         const std::map<ConsumerId, RoundOutcome>& previous_outcomes,
                                         std::span<const double> market_mean_prices, const FairnessParams& params,
                                         const UniformDraw& draw)
{
  params.validate();
  std::vector<ConsumerId> order(participants.begin(), participants.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  FairnessOutcome outcome;
  for (ConsumerId id : order)
  {
    const auto& rec = repository.record(id);
    const double u = draw();

    double factor = 0.0;
    auto branch = FairnessBranch::none;
    if (auto it = previous_outcomes.find(id); it != previous_outcomes.end())
    {
      if (it->second == RoundOutcome::lost)
      {
        if (u < prob_w(rec.consecutive_losses, params))
        {
          factor = fun_w(rec.losses, eval_fun(rec, market_mean_prices), rec.consecutive_losses, params);
          branch = FairnessBranch::reward;
        }
      }
      else if (u < prob_l(rec.consecutive_losses, params))
      {
        factor = fun_l(rec.wins, eval_fun(rec, market_mean_prices), rec.consecutive_losses, params);
        branch = FairnessBranch::penalty;
      }
    }
    outcome.factors[id] = factor;
    outcome.applied_branch[id] = branch;
  }
  return outcome;
}

}  // namespace mdfcda
