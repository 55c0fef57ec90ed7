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

#ifndef MDFCDA_CONFIG_HPP
#define MDFCDA_CONFIG_HPP

#include <filesystem>

#include <json.hpp>

#include "mdfcda/engine.hpp"
#include "mdfcda/scenario.hpp"

namespace mdfcda {

struct ExperimentConfig
{
  ScenarioConfig scenario;
  EngineConfig engine;
  std::filesystem::path output_dir = "out";

  void validate() const;
};

// Experiment files are JSON objects; every key is optional and falls back to
// the default:
//
//   {
//     "scenario": { "consumers": 300, "providers": 5, "resource_types": 4, "runs": 10,
//                   "provider_quantity_range": [30, 100], "consumer_quantity_range": [1, 3],
//                   "provider_price_range": [50, 200], "consumer_price_range": [100, 250],
//                   "price_drift": 0.1, "regenerate_providers": true },
//     "engine":   { "fairness_enabled": true,
//                   "fairness": { "alpha1": 9, "alpha2": 7, "beta1": 4, "beta2": 28, "max_losses": 6 },
//                   "solver": "heuristic", "time_limit_ms": 10000, "node_limit": 5000000,
//                   "rounds": 100, "seed": 1 },
//     "output_dir": "out"
//   }
//
// Prices may be numbers or decimal strings. Unknown keys are rejected.

nlohmann::json config_to_json(const ScenarioConfig& scenario, const EngineConfig& engine);
nlohmann::json config_to_json(const ExperimentConfig& config);

/// Applies the keys present in `doc` on top of `base`.
ExperimentConfig merge_config(ExperimentConfig base, const nlohmann::json& doc);

ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace mdfcda

#endif  // MDFCDA_CONFIG_HPP
