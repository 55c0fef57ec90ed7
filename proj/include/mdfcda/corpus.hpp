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

#ifndef MDFCDA_CORPUS_HPP
#define MDFCDA_CORPUS_HPP

#include <cstdint>
#include <random>

#include "mdfcda/wdp_solver.hpp"

namespace mdfcda {

/// Bounds for the small random instances used to cross-check solvers.
struct MicroInstanceLimits
{
  std::size_t max_consumers = 4;
  std::size_t max_providers = 2;
  std::size_t max_types = 2;
  std::int32_t max_quantity = 2;
  std::int64_t min_price = 1;   // whole currency units
  std::int64_t max_price = 20;
  std::int64_t min_factor = -10;
  std::int64_t max_factor = 10;
};

/// 1..max_consumers consumers, 1..max_providers providers, 1..max_types
/// types; quantities in [0, max_quantity] (each consumer asks for at least
/// one unit), integer prices and integer fairness factors.
WdpInstance random_micro_instance(std::mt19937_64& rng, const MicroInstanceLimits& limits = {});

}  // namespace mdfcda

#endif  // MDFCDA_CORPUS_HPP
