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

#include "mdfcda/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mdfcda {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const char* section, std::initializer_list<const char*> known)
{
  if (!obj.is_object())
    throw std::invalid_argument(std::string("config section '") + section + "' must be an object");
  const std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key))
      throw std::invalid_argument(std::string("unknown config key '") + section + "." + key + "'");
}

Money money_from(const json& v)
{
  if (v.is_string())
    return Money::parse(v.get<std::string>());
  return Money::from_double(v.get<double>());
}

template <typename T>
Interval<T> interval_from(const json& v, const char* key)
{
  if (!v.is_array() || v.size() != 2)
    throw std::invalid_argument(std::string("config key '") + key + "' must be a [lo, hi] pair");
  if constexpr (std::is_same_v<T, Money>)
    return {money_from(v[0]), money_from(v[1])};
  else
    return {v[0].get<T>(), v[1].get<T>()};
}

template <typename T>
void read(const json& obj, const char* key, T& target)
{
  if (!obj.contains(key))
    return;
  const auto& v = obj.at(key);
  if constexpr (std::is_unsigned_v<T> && !std::is_same_v<T, bool>)
    if (!v.is_number_unsigned())
      throw std::invalid_argument(std::string("config key '") + key + "' must be a non-negative integer");
  target = v.get<T>();
}

}  // namespace

void ExperimentConfig::validate() const
{
  scenario.validate();
  engine.validate();
  if (output_dir.empty())
    throw std::invalid_argument("output_dir must not be empty");
}

json config_to_json(const ScenarioConfig& s, const EngineConfig& e)
{
  return json{
      {"scenario",
       {{"consumers", s.shape.consumers},
        {"providers", s.shape.providers},
        {"resource_types", s.shape.resource_types},
        {"runs", s.runs},
        {"provider_quantity_range", {s.provider_quantity_range.lo, s.provider_quantity_range.hi}},
        {"consumer_quantity_range", {s.consumer_quantity_range.lo, s.consumer_quantity_range.hi}},
        {"provider_price_range", {s.provider_price_range.lo.to_double(), s.provider_price_range.hi.to_double()}},
        {"consumer_price_range", {s.consumer_price_range.lo.to_double(), s.consumer_price_range.hi.to_double()}},
        {"price_drift", s.price_drift},
        {"regenerate_providers", s.regenerate_providers}}},
      {"engine",
       {{"fairness_enabled", e.fairness_enabled},
        {"fairness",
         {{"alpha1", e.fairness_params.alpha1},
          {"alpha2", e.fairness_params.alpha2},
          {"beta1", e.fairness_params.beta1},
          {"beta2", e.fairness_params.beta2},
          {"max_losses", e.fairness_params.max_losses}}},
        {"solver", to_string(e.solver_mode)},
        {"time_limit_ms", e.solver_limits.time_budget.count()},
        {"node_limit", e.solver_limits.node_budget},
        {"rounds", e.rounds},
        {"seed", e.master_seed}}},
  };
}

json config_to_json(const ExperimentConfig& config)
{
  auto doc = config_to_json(config.scenario, config.engine);
  doc["output_dir"] = config.output_dir.string();
  return doc;
}

ExperimentConfig merge_config(ExperimentConfig base, const json& doc)
{
  try
  {
    reject_unknown(doc, "<root>", {"scenario", "engine", "output_dir"});
    if (doc.contains("scenario"))
    {
      const auto& s = doc.at("scenario");
      reject_unknown(s, "scenario",
                     {"consumers", "providers", "resource_types", "runs", "provider_quantity_range",
                      "consumer_quantity_range", "provider_price_range", "consumer_price_range", "price_drift",
                      "regenerate_providers"});
      auto& sc = base.scenario;
      read(s, "consumers", sc.shape.consumers);
      read(s, "providers", sc.shape.providers);
      read(s, "resource_types", sc.shape.resource_types);
      read(s, "runs", sc.runs);
      if (s.contains("provider_quantity_range"))
        sc.provider_quantity_range = interval_from<std::int32_t>(s.at("provider_quantity_range"), "provider_quantity_range");
      if (s.contains("consumer_quantity_range"))
        sc.consumer_quantity_range = interval_from<std::int32_t>(s.at("consumer_quantity_range"), "consumer_quantity_range");
      if (s.contains("provider_price_range"))
        sc.provider_price_range = interval_from<Money>(s.at("provider_price_range"), "provider_price_range");
      if (s.contains("consumer_price_range"))
        sc.consumer_price_range = interval_from<Money>(s.at("consumer_price_range"), "consumer_price_range");
      read(s, "price_drift", sc.price_drift);
      read(s, "regenerate_providers", sc.regenerate_providers);
    }
    if (doc.contains("engine"))
    {
      const auto& e = doc.at("engine");
      reject_unknown(e, "engine",
                     {"fairness_enabled", "fairness", "solver", "time_limit_ms", "node_limit", "rounds", "seed"});
      auto& en = base.engine;
      read(e, "fairness_enabled", en.fairness_enabled);
      if (e.contains("fairness"))
      {
        const auto& f = e.at("fairness");
        reject_unknown(f, "engine.fairness", {"alpha1", "alpha2", "beta1", "beta2", "max_losses"});
        read(f, "alpha1", en.fairness_params.alpha1);
        read(f, "alpha2", en.fairness_params.alpha2);
        read(f, "beta1", en.fairness_params.beta1);
        read(f, "beta2", en.fairness_params.beta2);
        read(f, "max_losses", en.fairness_params.max_losses);
      }
      if (e.contains("solver"))
        en.solver_mode = parse_solver_mode(e.at("solver").get<std::string>());
      if (e.contains("time_limit_ms"))
        en.solver_limits.time_budget = std::chrono::milliseconds(e.at("time_limit_ms").get<std::int64_t>());
      read(e, "node_limit", en.solver_limits.node_budget);
      read(e, "rounds", en.rounds);
      read(e, "seed", en.master_seed);
    }
    if (doc.contains("output_dir"))
      base.output_dir = doc.at("output_dir").get<std::string>();
  }
  catch (const json::exception& e)
  {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  return base;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  json doc;
  try
  {
    doc = json::parse(buf.str());
  }
  catch (const json::parse_error& e)
  {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return merge_config(ExperimentConfig{}, doc);
}

}  // namespace mdfcda
