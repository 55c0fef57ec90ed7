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

#ifndef MDFCDA_SRC_SEARCH_COMMON_HPP
#define MDFCDA_SRC_SEARCH_COMMON_HPP

#include <optional>
#include <span>
#include <vector>

#include "cost_model.hpp"

namespace mdfcda::detail {

struct SearchResult
{
  std::vector<std::uint8_t> winners;
  double objective = 0.0;
};

/// Objective of a winner set, or nullopt if it cannot be served.
std::optional<double> evaluate_set(const WdpInstance& instance, const CostModel& model,
                                   std::span<const std::uint8_t> winners);

/// Sum of positive potentials; no winner set can do better.
double root_bound(const CostModel& model);

SearchResult greedy_with_local_search(const WdpInstance& instance, const CostModel& model);

/// Winner set plus its min-cost transfers. Throws std::logic_error if infeasible.
Allocation materialize(const WdpInstance& instance, std::vector<std::uint8_t> winners);

}  // namespace mdfcda::detail

#endif  // MDFCDA_SRC_SEARCH_COMMON_HPP
