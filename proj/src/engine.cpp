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

#include "mdfcda/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mdfcda/config.hpp"

namespace mdfcda {

std::vector<ConsumerId> RoundResult::participants() const
{
  std::vector<ConsumerId> ids;
  ids.reserve(instance.consumers().size());
  for (const auto& c : instance.consumers())
    ids.push_back(c.bid().id());
  return ids;
}

std::string to_string(SolverMode mode)
{
  switch (mode)
  {
  case SolverMode::exact: return "exact";
  case SolverMode::heuristic: return "heuristic";
  case SolverMode::oracle: return "oracle";
  }
  return "unknown";
}

SolverMode parse_solver_mode(const std::string& text)
{
  if (text == "exact")
    return SolverMode::exact;
  if (text == "heuristic")
    return SolverMode::heuristic;
  if (text == "oracle")
    return SolverMode::oracle;
  throw std::invalid_argument("unknown solver '" + text + "' (expected exact, heuristic or oracle)");
}

void EngineConfig::validate() const
{
  fairness_params.validate();
  if (rounds < 1)
    throw std::invalid_argument("rounds must be at least 1");
  if (solver_limits.time_budget.count() <= 0 || solver_limits.node_budget == 0)
    throw std::invalid_argument("solver limits must be positive");
}

WdpSolution solve(const WdpInstance& instance, SolverMode mode, const SolverLimits& limits)
{
  switch (mode)
  {
  case SolverMode::exact: return solve_exact(instance, limits);
  case SolverMode::heuristic: return solve_heuristic(instance);
  case SolverMode::oracle: return solve_oracle(instance);
  }
  throw std::invalid_argument("unknown solver mode");
}

RoundResult run_round(const Repository& repo, std::span<const ConsumerBid> consumer_bids,
                      std::span<const ProviderBid> provider_bids, const EngineConfig& config,
                      std::mt19937_64& fairness_rng)
{
  if (provider_bids.empty())
    throw std::invalid_argument("a round needs at least one provider bid");
  const std::size_t types = provider_bids.front().resource_types();

  std::vector<ConsumerBid> bids(consumer_bids.begin(), consumer_bids.end());
  std::sort(bids.begin(), bids.end(), [](const auto& a, const auto& b) { return a.id() < b.id(); });
  std::vector<ConsumerId> participants;
  for (const auto& b : bids)
  {
    if (repo.is_dropped(b.id()))
      throw std::invalid_argument("consumer " + to_string(b.id()) + " has dropped out and cannot bid");
    participants.push_back(b.id());
  }

  FairnessOutcome fairness;
  if (config.fairness_enabled)
    fairness = compute_fairness_factors(repo, participants, repo.previous_outcomes, repo.market_mean_prices,
                                        config.fairness_params, uniform_draw(fairness_rng));

  std::vector<ExtendedConsumerBid> extended;
  extended.reserve(bids.size());
  for (auto& b : bids)
  {
    const double ff = fairness.factor(b.id());
    extended.emplace_back(std::move(b), ff);
  }
  std::vector<ProviderBid> providers(provider_bids.begin(), provider_bids.end());
  std::sort(providers.begin(), providers.end(), [](const auto& a, const auto& b) { return a.id() < b.id(); });

  WdpInstance instance(types, std::move(extended), std::move(providers));
  auto solution = solve(instance, config.solver_mode, config.solver_limits);
  auto settlement = settle(instance, solution.allocation);

  RoundResult result{repo.round_counter + 1, std::move(instance), std::move(fairness), std::move(solution),
                     std::move(settlement), Money{}, 0.0, 0.0, 0.0, {}};
  result.total_utility = result.solution.total_utility;
  result.total_satisfaction = result.solution.total_satisfaction;

  std::int64_t offered = 0;
  for (const auto& p : provider_bids)
    for (auto q : p.quantities())
      offered += q;
  // A round with no supply or no bidders reports 0% rather than failing the run.
  result.utilization_percent = offered > 0 ? utilization_percent(result, provider_bids) : 0.0;
  result.win_percent = participants.empty() ? 0.0 : win_percent(result, participants);

  for (std::size_t n = 0; n < participants.size(); ++n)
  {
    if (result.allocation().winners[n])
      continue;
    const auto it = repo.records.find(participants[n]);
    const std::int64_t streak = it == repo.records.end() ? 0 : it->second.consecutive_losses;
    if (streak + 1 > config.fairness_params.max_losses)
      result.drops_this_round.push_back(participants[n]);
  }
  return result;
}

Repository update_repository(const Repository& repo, const RoundResult& result, const FairnessParams& params)
{
  if (result.round_index != repo.round_counter + 1)
    throw std::invalid_argument("round " + std::to_string(result.round_index) +
                                " does not follow repository round " + std::to_string(repo.round_counter));

  Repository next = repo;
  next.round_counter = result.round_index;
  next.previous_outcomes.clear();

  const auto& instance = result.instance;
  const std::size_t types = instance.shape().resource_types;
  std::vector<double> price_sums(types, 0.0);

  for (std::size_t n = 0; n < instance.consumers().size(); ++n)
  {
    const auto& bid = instance.consumer(n);
    auto& rec = next.records[bid.id()];
    if (rec.dropped_at_round)
      throw std::invalid_argument("consumer " + to_string(bid.id()) + " bid after dropping out");
    if (result.allocation().winners[n])
    {
      ++rec.wins;
      rec.consecutive_losses = 0;
      next.previous_outcomes[bid.id()] = RoundOutcome::won;
    }
    else
    {
      ++rec.losses;
      ++rec.consecutive_losses;
      next.previous_outcomes[bid.id()] = RoundOutcome::lost;
      if (rec.consecutive_losses > params.max_losses)
        rec.dropped_at_round = result.round_index;
    }
    rec.price_history.push_back(bid.unit_prices());
    for (std::size_t l = 0; l < types; ++l)
      price_sums[l] += bid.unit_prices()[l].to_double();
  }

  if (!instance.consumers().empty())
  {
    next.market_mean_prices.resize(types);
    for (std::size_t l = 0; l < types; ++l)
      next.market_mean_prices[l] = price_sums[l] / static_cast<double>(instance.consumers().size());
  }
  return next;
}

std::mt19937_64 make_stream(std::uint64_t master_seed, std::int64_t run, Stream stream)
{
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(run), static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

namespace {

struct RunOutput
{
  std::vector<RoundRow> rows;
  RunRow summary;
  Repository repository;
};

RunOutput simulate_run(const ScenarioConfig& scenario, const EngineConfig& engine, std::int64_t run,
                       const SimulationOptions& options)
{
  auto provider_rng = make_stream(engine.master_seed, run, Stream::providers);
  auto consumer_rng = make_stream(engine.master_seed, run, Stream::consumers);
  auto fairness_rng = make_stream(engine.master_seed, run, Stream::fairness);

  RunOutput out;
  Repository& repo = out.repository;
  for (std::size_t n = 0; n < scenario.shape.consumers; ++n)
    repo.register_consumer(ConsumerId{static_cast<std::uint32_t>(n)});

  std::vector<ProviderBid> providers;
  std::vector<std::vector<Money>> previous_prices;
  for (std::int64_t round = 1; round <= engine.rounds; ++round)
  {
    if (round == 1 || scenario.regenerate_providers)
      providers = generate_provider_bids(scenario, provider_rng);
    auto everyone = generate_consumer_bids(scenario, consumer_rng, round, previous_prices);
    previous_prices.clear();
    std::vector<ConsumerBid> active;
    for (auto& bid : everyone)
    {
      previous_prices.push_back(bid.unit_prices());
      if (!repo.is_dropped(bid.id()))
        active.push_back(std::move(bid));
    }

    const auto result = run_round(repo, active, providers, engine, fairness_rng);
    if (options.on_round)
      options.on_round(run, result);
    repo = update_repository(repo, result, engine.fairness_params);
    out.rows.push_back(make_round_row(run, result, static_cast<std::int64_t>(repo.drop_count())));
  }
  out.summary = aggregate(run, out.rows, repo);
  return out;
}

}  // namespace

SimulationReport run_simulation(const ScenarioConfig& scenario, const EngineConfig& engine,
                                const SimulationOptions& options)
{
  scenario.validate();
  engine.validate();

  const auto runs = static_cast<std::size_t>(scenario.runs);
  std::vector<RunOutput> outputs(runs);

  const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(runs)));
  if (workers == 1)
  {
    for (std::size_t k = 0; k < runs; ++k)
      outputs[k] = simulate_run(scenario, engine, static_cast<std::int64_t>(k + 1), options);
  }
  else
  {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (std::size_t k = next++; k < runs; k = next++)
        {
          try
          {
            outputs[k] = simulate_run(scenario, engine, static_cast<std::int64_t>(k + 1), options);
          }
          catch (...)
          {
            std::lock_guard lock(failure_mutex);
            if (!failure)
              failure = std::current_exception();
          }
        }
      });
    for (auto& t : pool)
      t.join();
    if (failure)
      std::rethrow_exception(failure);
  }

  SimulationReport report;
  report.config_echo = config_to_json(scenario, engine);
  for (auto& out : outputs)
  {
    report.per_round.insert(report.per_round.end(), out.rows.begin(), out.rows.end());
    report.per_run.push_back(out.summary);
    report.repositories.push_back(std::move(out.repository));
  }
  return report;
}

}  // namespace mdfcda
