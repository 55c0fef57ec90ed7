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

#ifndef MDFCDA_ROUND_RESULT_HPP
#define MDFCDA_ROUND_RESULT_HPP

#include <cstdint>
#include <vector>

#include "mdfcda/fairness.hpp"
#include "mdfcda/pricing.hpp"
#include "mdfcda/wdp_solver.hpp"

namespace mdfcda {

/// Everything one auction round produced.
///
/// `instance` holds the extended bids actually auctioned (only consumers
/// still in the market); consumer-indexed vectors follow its order.
struct RoundResult
{
  std::int64_t round_index = 0;
  WdpInstance instance;
  FairnessOutcome fairness;
  WdpSolution solution;
  Settlement settlement;

  Money total_utility;
  double total_satisfaction = 0.0;
  double utilization_percent = 0.0;
  double win_percent = 0.0;
  std::vector<ConsumerId> drops_this_round;

  const Allocation& allocation() const { return solution.allocation; }
  std::vector<ConsumerId> participants() const;
};

}  // namespace mdfcda

#endif  // MDFCDA_ROUND_RESULT_HPP
