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

#ifndef MDFCDA_FAIRNESS_HPP
#define MDFCDA_FAIRNESS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>

#include "mdfcda/model.hpp"
#include "mdfcda/repository.hpp"

namespace mdfcda {

enum class FairnessBranch
{
  none,
  reward,
  penalty
};

struct FairnessOutcome
{
  std::map<ConsumerId, double> factors;
  std::map<ConsumerId, FairnessBranch> applied_branch;

  /// Factor for a consumer, 0 when none was assigned.
  double factor(ConsumerId id) const;
  FairnessBranch branch(ConsumerId id) const;
};

/// Quality score of a consumer's most recent bid: mean over types of
/// (offered unit price / market mean unit price), clamped to [0.1, 10].
/// Returns 1 for a consumer with no price history.
double eval_fun(const ParticipantRecord& record, std::span<const double> market_mean_prices);

/// Reward for a consumer who lost the previous round:
/// (cl + 1) * (alpha1 * losses + alpha2 * eval).
double fun_w(std::int64_t losses, double eval, std::int64_t consecutive_losses, const FairnessParams& params);

/// Penalty for a consumer who won the previous round:
/// -(beta1 * wins + beta2 / eval) / (cl + 1).
double fun_l(std::int64_t wins, double eval, std::int64_t consecutive_losses, const FairnessParams& params);

/// Chance that a previous loser is rewarded; min(1, (cl + 1) / (ml + 1)).
double prob_w(std::int64_t consecutive_losses, const FairnessParams& params);

/// Chance that a previous winner is penalised; 1 / (cl + 1).
double prob_l(std::int64_t consecutive_losses, const FairnessParams& params);

/// Source of Uniform[0, 1) draws.
using UniformDraw = std::function<double()>;

UniformDraw uniform_draw(std::mt19937_64& rng);

/// Fairness factors for one round.
///
/// Participants are visited in ascending id order and each consumes exactly
/// one uniform draw, whichever branch applies. Consumers without a previous
/// outcome get factor 0.
FairnessOutcome compute_fairness_factors(const Repository& repository, std::span<const ConsumerId> participants,
                                         const std::map<ConsumerId, RoundOutcome>& previous_outcomes,
                                         std::span<const double> market_mean_prices, const FairnessParams& params,
                                         const UniformDraw& draw);

}  // namespace mdfcda

#endif  // MDFCDA_FAIRNESS_HPP
