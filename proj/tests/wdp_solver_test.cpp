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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "mdfcda/corpus.hpp"
#include "mdfcda/instance_io.hpp"
#include "mdfcda/wdp_solver.hpp"
#include "test_support.hpp"

namespace mdfcda {
namespace {

using testing::ext;
using testing::provider;

using Bits = std::vector<std::uint8_t>;

WdpInstance single_trade(double ff = 0.0)
{
  return WdpInstance(1, {ext(0, {10}, {1}, ff)}, {provider(0, {5}, {1})});
}

// Two consumers, one unit of supply at 5: A bids 10, B bids 8.
WdpInstance competition(double ff_b)
{
  return WdpInstance(1, {ext(0, {10}, {1}), ext(1, {8}, {1}, ff_b)}, {provider(0, {5}, {1})});
}

Allocation allocate(const WdpInstance& inst, Bits winners)
{
  auto y = min_cost_allocation(inst, winners);
  EXPECT_TRUE(y.has_value());
  return Allocation{std::move(winners), *y};
}

TEST(Compatible, Examples)
{
  EXPECT_TRUE(compatible(Money::from_units(10), Money::from_units(5)));
  EXPECT_TRUE(compatible(Money::from_units(5), Money::from_units(5)));
  EXPECT_FALSE(compatible(Money::from_units(4), Money::from_units(5)));
}

TEST(WdpInstance, Construction)
{
  const auto inst = WdpInstance(2, {ext(0, {10, 20}, {1, 2}), ext(4, {1, 1}, {0, 1})}, {provider(0, {1, 1}, {1, 1})});
  EXPECT_EQ(inst.budgets(), (std::vector<Money>{Money::from_units(50), Money::from_units(1)}));
  EXPECT_EQ(inst.shape(), (MarketShape{2, 1, 2}));
  EXPECT_THROW(WdpInstance(1, {ext(1, {1}, {1}), ext(0, {1}, {1})}, {provider(0, {1}, {1})}), std::invalid_argument);
  EXPECT_THROW(WdpInstance(1, {ext(0, {1}, {1})}, {}), std::invalid_argument);
  EXPECT_THROW(WdpInstance(2, {ext(0, {1}, {1})}, {provider(0, {1, 1}, {1, 1})}), std::invalid_argument);
}

TEST(ObjectiveValue, Examples)
{
  const auto inst = single_trade();
  const auto empty = objective_value(inst, Allocation::empty(inst.shape()));
  EXPECT_EQ(empty.objective, 0.0);
  EXPECT_EQ(empty.total_utility, Money{});
  EXPECT_EQ(empty.total_satisfaction, 0.0);

  const auto full = objective_value(inst, allocate(inst, {1}));
  EXPECT_EQ(full.objective, 5.0);
  EXPECT_EQ(full.total_utility, Money::from_units(5));
  EXPECT_EQ(full.total_satisfaction, 0.0);

  const auto boosted = single_trade(3.0);
  const auto b = objective_value(boosted, allocate(boosted, {1}));
  EXPECT_EQ(b.objective, 8.0);
  EXPECT_EQ(b.total_utility, Money::from_units(5));
  EXPECT_EQ(b.total_satisfaction, 3.0);
}

TEST(ObjectiveValue, RejectsInfeasible)
{
  const auto inst = single_trade();
  Allocation bad = Allocation::empty(inst.shape());
  bad.winners[0] = 1;
  try
  {
    objective_value(inst, bad);
    FAIL();
  }
  catch (const std::invalid_argument& e)
  {
    EXPECT_NE(std::string(e.what()).find("demand"), std::string::npos);
  }
}

TEST(MinCostAllocation, Examples)
{
  const auto inst = WdpInstance(1, {ext(0, {10}, {2})}, {provider(0, {5}, {1}), provider(1, {7}, {5})});
  const auto none = min_cost_allocation(inst, Bits{0});
  ASSERT_TRUE(none);
  EXPECT_EQ(none->total_units(), 0);

  const auto y = min_cost_allocation(inst, Bits{1});
  ASSERT_TRUE(y);
  EXPECT_EQ(y->at(0, 0, 0), 1);
  EXPECT_EQ(y->at(0, 0, 1), 1);
  EXPECT_EQ(transfer_cost(inst, *y), Money::from_units(12));

  const auto priced_out = WdpInstance(1, {ext(0, {6}, {1})}, {provider(0, {7}, {5})});
  EXPECT_FALSE(min_cost_allocation(priced_out, Bits{1}));
}

TEST(MinCostAllocation, ThresholdOrderMatters)
{
  // A rich consumer must not take the only cheap unit a poor one can afford.
  const auto inst =
      WdpInstance(1, {ext(0, {20}, {1}), ext(1, {6}, {1})}, {provider(0, {5}, {1}), provider(1, {15}, {1})});
  const auto y = min_cost_allocation(inst, Bits{1, 1});
  ASSERT_TRUE(y);
  EXPECT_EQ(y->at(1, 0, 0), 1);
  EXPECT_EQ(y->at(0, 0, 1), 1);
  EXPECT_EQ(transfer_cost(inst, *y), Money::from_units(20));
}

TEST(MinCostAllocation, MatchesExhaustiveTransferEnumeration)
{
  std::mt19937_64 rng(2024);
  MicroInstanceLimits limits;
  limits.max_providers = 3;
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial)
  {
    const auto inst = random_micro_instance(rng, limits);
    const std::size_t n = inst.shape().consumers;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    {
      Bits w(n);
      for (std::size_t i = 0; i < n; ++i)
        w[i] = (mask >> i) & 1;
      const auto got = min_cost_allocation(inst, w);
      const auto want = testing::brute_min_cost(inst, w);
      ASSERT_EQ(got.has_value(), want.has_value()) << dump_instance(inst);
      if (!got)
        continue;
      ++feasible;
      EXPECT_EQ(transfer_cost(inst, *got), *want) << dump_instance(inst);
      EXPECT_TRUE(validate_solution(inst, Allocation{w, *got}).empty());
    }
  }
  EXPECT_GT(feasible, 300);
}

TEST(SolveExact, Examples)
{
  const auto one = solve_exact(single_trade());
  EXPECT_EQ(one.allocation.winners, Bits{1});
  EXPECT_EQ(one.objective, 5.0);
  EXPECT_EQ(one.optimality, Optimality::proved_optimal);
  EXPECT_EQ(one.gap_bound, 0.0);

  const auto priced_out = WdpInstance(1, {ext(0, {4}, {1})}, {provider(0, {5}, {3})});
  const auto none = solve_exact(priced_out);
  EXPECT_EQ(none.allocation.winners, Bits{0});
  EXPECT_EQ(none.objective, 0.0);

  const auto ab = solve_exact(competition(5.0));
  EXPECT_EQ(ab.allocation.winners, (Bits{0, 1}));
  EXPECT_EQ(ab.objective, 8.0);
  EXPECT_EQ(ab.total_utility, Money::from_units(3));
  EXPECT_EQ(ab.total_satisfaction, 5.0);
}

TEST(SolveExact, RejectsNonPositiveLimits)
{
  EXPECT_THROW(solve_exact(single_trade(), SolverLimits{std::chrono::milliseconds(0), 10}), std::invalid_argument);
  EXPECT_THROW(solve_exact(single_trade(), SolverLimits{std::chrono::milliseconds(10), 0}), std::invalid_argument);
}

TEST(SolveExact, NegativeFactorCanPriceAConsumerOut)
{
  const auto inst = single_trade(-6.0);
  const auto s = solve_exact(inst);
  EXPECT_EQ(s.allocation.winners, Bits{0});
  EXPECT_EQ(s.objective, 0.0);
}

TEST(SolveExact, TieGoesToLexicographicallySmallestWinnerVector)
{
  // A alone: 10 - 5 = 5. B alone: 8 - 5 + 2 = 5.
  const auto s = solve_exact(competition(2.0));
  EXPECT_EQ(s.allocation.winners, (Bits{0, 1}));
  EXPECT_EQ(solve_oracle(competition(2.0)).allocation.winners, (Bits{0, 1}));
}

TEST(SolveExact, FairnessThresholdFlipsWinner)
{
  // B overtakes A exactly when its factor exceeds 2.
  for (double ff = 0.0; ff <= 10.0; ff += 0.25)
  {
    const auto s = solve_exact(competition(ff));
    if (ff < 2.0)
      EXPECT_EQ(s.allocation.winners, (Bits{1, 0})) << ff;
    else
      EXPECT_EQ(s.allocation.winners, (Bits{0, 1})) << ff;
  }
}

TEST(SolveExact, BudgetExhaustionReportsValidGap)
{
  std::mt19937_64 rng(77);
  MicroInstanceLimits limits;
  limits.max_consumers = 12;
  limits.max_providers = 3;
  limits.max_quantity = 3;
  int truncated = 0;
  for (int trial = 0; trial < 40; ++trial)
  {
    const auto inst = random_micro_instance(rng, limits);
    const auto truth = solve_oracle(inst);
    const auto s = solve_exact(inst, SolverLimits{std::chrono::milliseconds(10'000), 2});
    EXPECT_TRUE(validate_solution(inst, s.allocation).empty());
    EXPECT_LE(s.objective, truth.objective + 1e-9);
    if (s.optimality == Optimality::heuristic)
    {
      ++truncated;
      EXPECT_GE(s.gap_bound, 0.0);
      EXPECT_GE(s.objective + s.gap_bound, truth.objective - 1e-9) << dump_instance(inst);
    }
    else
    {
      EXPECT_EQ(s.objective, truth.objective);
    }
  }
  EXPECT_GT(truncated, 0);
}

TEST(SolveOracle, Examples)
{
  EXPECT_EQ(solve_oracle(single_trade()).objective, 5.0);
  EXPECT_EQ(solve_oracle(single_trade()).optimality, Optimality::oracle);
  EXPECT_EQ(solve_oracle(WdpInstance(1, {ext(0, {4}, {1})}, {provider(0, {5}, {3})})).objective, 0.0);
  EXPECT_EQ(solve_oracle(competition(5.0)).objective, 8.0);

  const auto empty = WdpInstance(2, {}, {provider(0, {1, 1}, {1, 1})});
  EXPECT_EQ(solve_oracle(empty).objective, 0.0);
  EXPECT_EQ(solve_exact(empty).objective, 0.0);
  EXPECT_TRUE(solve_heuristic(empty).allocation.winners.empty());
}

TEST(SolveOracle, RefusesLargeInstances)
{
  std::vector<ExtendedConsumerBid> bids;
  for (std::uint32_t i = 0; i <= kOracleMaxConsumers; ++i)
    bids.push_back(ext(i, {10}, {1}));
  EXPECT_THROW(solve_oracle(WdpInstance(1, bids, {provider(0, {5}, {1})})), std::invalid_argument);
}

TEST(SolveHeuristic, Examples)
{
  const auto ab = solve_heuristic(competition(5.0));
  EXPECT_EQ(ab.allocation.winners, (Bits{0, 1}));
  EXPECT_EQ(ab.optimality, Optimality::heuristic);

  // Plenty of supply: everyone who can trade is admitted.
  const auto roomy = WdpInstance(2, {ext(0, {10, 10}, {1, 2}), ext(1, {12, 9}, {2, 0}), ext(2, {20, 30}, {1, 1})},
                                 {provider(0, {5, 8}, {10, 10})});
  const auto h = solve_heuristic(roomy);
  EXPECT_EQ(h.allocation.winners, (Bits{1, 1, 1}));
  EXPECT_EQ(h.objective, solve_oracle(roomy).objective);
}

TEST(Solvers, AgreeWithIndependentBruteForce)
{
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial)
  {
    const auto inst = random_micro_instance(rng);
    const auto truth = testing::brute_optimum(inst);
    const auto exact = solve_exact(inst);
    const auto oracle = solve_oracle(inst);
    const auto heur = solve_heuristic(inst);
    ASSERT_EQ(exact.objective, truth.objective) << dump_instance(inst);
    EXPECT_EQ(oracle.objective, truth.objective);
    EXPECT_EQ(exact.allocation.winners, oracle.allocation.winners);
    EXPECT_LE(heur.objective, exact.objective);
    EXPECT_GE(heur.objective + heur.gap_bound, exact.objective - 1e-9);

    for (const auto* s : {&exact, &oracle, &heur})
    {
      EXPECT_TRUE(validate_solution(inst, s->allocation).empty());
      const auto v = objective_value(inst, s->allocation);
      EXPECT_EQ(v.objective, s->objective);
      EXPECT_EQ(v.total_utility, s->total_utility);
      EXPECT_EQ(s->objective, s->total_utility.to_double() + s->total_satisfaction);

      Money value;
      double ff = 0.0;
      for (std::size_t n = 0; n < inst.shape().consumers; ++n)
        if (s->allocation.winners[n])
          value += inst.budgets()[n], ff += inst.fairness_factor(n);
      const auto cost = min_cost_allocation(inst, s->allocation.winners);
      ASSERT_TRUE(cost);
      EXPECT_EQ(s->total_utility, value - transfer_cost(inst, *cost));
    }
  }
}

TEST(Solvers, ExactMatchesOracleOnMidSizeInstances)
{
  std::mt19937_64 rng(31);
  MicroInstanceLimits limits;
  limits.max_consumers = 10;
  limits.max_providers = 3;
  limits.max_types = 3;
  limits.max_quantity = 3;
  for (int trial = 0; trial < 60; ++trial)
  {
    const auto inst = random_micro_instance(rng, limits);
    const auto exact = solve_exact(inst);
    const auto oracle = solve_oracle(inst);
    EXPECT_EQ(exact.objective, oracle.objective) << dump_instance(inst);
    EXPECT_EQ(exact.allocation.winners, oracle.allocation.winners);
    EXPECT_EQ(exact.optimality, Optimality::proved_optimal);
  }
}

TEST(ValidateSolution, Examples)
{
  const auto inst = single_trade();
  EXPECT_TRUE(validate_solution(inst, solve_exact(inst).allocation).empty());

  Allocation no_units = Allocation::empty(inst.shape());
  no_units.winners[0] = 1;
  const auto v = validate_solution(inst, no_units);
  auto has = [](const std::vector<std::string>& list, const std::string& key) {
    return std::any_of(list.begin(), list.end(), [&](const auto& s) { return s.find(key) != std::string::npos; });
  };
  EXPECT_TRUE(has(v, "linkage (x <= sum y)"));
  EXPECT_TRUE(has(v, "demand"));

  const auto two = WdpInstance(1, {ext(0, {10}, {1}), ext(1, {10}, {1})}, {provider(0, {5}, {1})});
  Allocation over{{1, 1}, Transfers(2, 1, 1)};
  over.transfers.at(0, 0, 0) = 1;
  over.transfers.at(1, 0, 0) = 1;
  const auto s = validate_solution(two, over);
  EXPECT_TRUE(has(s, "supply"));
  EXPECT_EQ(s.size(), 1u);
}

TEST(ValidateSolution, ReportsEachFamily)
{
  const auto inst = WdpInstance(1, {ext(0, {4}, {1})}, {provider(0, {5}, {3})});
  Allocation a{{0}, Transfers(1, 1, 1)};
  a.transfers.at(0, 0, 0) = 1;
  const auto v = validate_solution(inst, a);
  auto count = [&](const std::string& key) {
    return std::count_if(v.begin(), v.end(), [&](const auto& s) { return s.rfind(key, 0) == 0; });
  };
  EXPECT_EQ(count("linkage (x >= sum y / sum Q')"), 1);
  EXPECT_EQ(count("compatibility"), 1);
  EXPECT_EQ(count("demand"), 1);

  Allocation weird{{2}, Transfers(1, 1, 1)};
  EXPECT_EQ(validate_solution(inst, weird).front().rfind("binary", 0), 0u);
  Allocation wrong_shape{{0, 0}, Transfers(2, 1, 1)};
  EXPECT_EQ(validate_solution(inst, wrong_shape).size(), 1u);
}

TEST(InstanceIo, RoundTrip)
{
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial)
  {
    const auto inst = random_micro_instance(rng);
    const auto text = dump_instance(inst);
    const auto back = load_instance(text);
    EXPECT_EQ(back, inst);
    EXPECT_EQ(dump_instance(back), text);
  }
  const auto odd = WdpInstance(1, {ext(3, {10.01}, {2}, -0.1)}, {provider(7, {5.5}, {1})});
  EXPECT_EQ(load_instance(dump_instance(odd)), odd);
}

TEST(InstanceIo, Format)
{
  const auto inst = WdpInstance(2, {ext(3, {10, 0}, {2, 0}, -2.5)}, {provider(0, {5, 7}, {1, 5})});
  EXPECT_EQ(dump_instance(inst),
            "mdfcda-instance 1\ntypes 2\nprovider 0 5.000 1 7.000 5\nconsumer 3 -2.5 10.000 2 0.000 0\n");
  EXPECT_EQ(load_instance("# comment\nmdfcda-instance 1\ntypes 2\nprovider 0 5 1 7 5\nconsumer 3 -2.5 10 2 0 0\n"),
            inst);
  EXPECT_THROW(load_instance("types 1\n"), std::invalid_argument);
  EXPECT_THROW(load_instance("mdfcda-instance 1\ntypes 1\nprovider 0 5\n"), std::invalid_argument);
  EXPECT_THROW(load_instance(""), std::invalid_argument);
}

}  // namespace
}  // namespace mdfcda
