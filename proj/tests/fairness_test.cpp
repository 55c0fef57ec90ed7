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

#include "mdfcda/fairness.hpp"
#include "test_support.hpp"

namespace mdfcda {
namespace {

const FairnessParams kParams;

ParticipantRecord with_prices(std::vector<Money> last)
{
  ParticipantRecord r;
  r.price_history.push_back(std::move(last));
  return r;
}

TEST(EvalFun, Examples)
{
  const std::vector<double> means{120.0, 80.0};
  EXPECT_DOUBLE_EQ(eval_fun(with_prices(testing::units({120, 80})), means), 1.0);
  EXPECT_DOUBLE_EQ(eval_fun(with_prices(testing::units({240, 160})), means), 2.0);
  EXPECT_DOUBLE_EQ(eval_fun(ParticipantRecord{}, means), 1.0);
}

TEST(EvalFun, UsesMostRecentEntryAndClamps)
{
  auto r = with_prices(testing::units({1000, 1000}));
  r.price_history.push_back(testing::units({60, 40}));
  const std::vector<double> means{120.0, 80.0};
  EXPECT_DOUBLE_EQ(eval_fun(r, means), 0.5);
  EXPECT_DOUBLE_EQ(eval_fun(with_prices(testing::units({0, 0})), means), 0.1);
  EXPECT_DOUBLE_EQ(eval_fun(with_prices(testing::units({5000, 5000})), means), 10.0);
}

TEST(EvalFun, RejectsNonPositiveMarketMean)
{
  const std::vector<double> bad{120.0, 0.0};
  EXPECT_THROW(eval_fun(with_prices(testing::units({1, 1})), bad), std::invalid_argument);
}

TEST(FunW, Examples)
{
  EXPECT_DOUBLE_EQ(fun_w(0, 1.0, 0, kParams), 7.0);
  EXPECT_DOUBLE_EQ(fun_w(2, 2.0, 1, kParams), 64.0);
  EXPECT_NEAR(fun_w(0, 1e-12, 0, kParams), 0.0, 1e-10);
}

TEST(FunL, Examples)
{
  EXPECT_DOUBLE_EQ(fun_l(1, 1.0, 0, kParams), -32.0);
  EXPECT_DOUBLE_EQ(fun_l(0, 28.0, 0, kParams), -1.0);
  EXPECT_DOUBLE_EQ(fun_l(2, 2.0, 1, kParams), -11.0);
  EXPECT_THROW(fun_l(1, 0.0, 0, kParams), std::invalid_argument);
}

TEST(ProbW, Examples)
{
  EXPECT_DOUBLE_EQ(prob_w(6, kParams), 1.0);
  EXPECT_DOUBLE_EQ(prob_w(0, kParams), 1.0 / 7.0);
  EXPECT_DOUBLE_EQ(prob_w(3, kParams), 4.0 / 7.0);
  EXPECT_DOUBLE_EQ(prob_w(40, kParams), 1.0);
}

TEST(ProbL, Examples)
{
  EXPECT_DOUBLE_EQ(prob_l(0, kParams), 1.0);
  EXPECT_DOUBLE_EQ(prob_l(1, kParams), 0.5);
  EXPECT_DOUBLE_EQ(prob_l(3, kParams), 0.25);
}

TEST(FairnessProperties, MonotoneInStreak)
{
  for (std::int64_t l = 0; l <= 10; ++l)
    for (double e : {0.1, 0.5, 1.0, 3.0, 10.0})
      for (std::int64_t cl = 0; cl <= 10; ++cl)
      {
        EXPECT_GT(fun_w(l, e, cl + 1, kParams), fun_w(l, e, cl, kParams));
        EXPECT_GE(fun_w(l, e, cl, kParams), 0.0);
        EXPECT_LT(std::abs(fun_l(l, e, cl + 1, kParams)), std::abs(fun_l(l, e, cl, kParams)));
        EXPECT_LT(fun_l(l, e, cl, kParams), 0.0);
      }
  for (std::int64_t cl = 0; cl < 20; ++cl)
  {
    EXPECT_LE(prob_w(cl, kParams), prob_w(cl + 1, kParams));
    EXPECT_GE(prob_l(cl, kParams), prob_l(cl + 1, kParams));
  }
}

struct Market
{
  Repository repo;
  std::vector<ConsumerId> ids;
  std::vector<double> means{100.0};
};

Market two_consumer_market()
{
  Market m;
  for (std::uint32_t i = 0; i < 2; ++i)
  {
    m.ids.push_back(ConsumerId{i});
    m.repo.register_consumer(ConsumerId{i});
  }
  return m;
}

UniformDraw constant(double u, int* calls = nullptr)
{
  return [u, calls]() {
    if (calls)
      ++*calls;
    return u;
  };
}

TEST(ComputeFairnessFactors, FirstRoundHasNoFactors)
{
  auto m = two_consumer_market();
  int calls = 0;
  const auto out = compute_fairness_factors(m.repo, m.ids, {}, m.means, kParams, constant(0.0, &calls));
  for (auto id : m.ids)
  {
    EXPECT_EQ(out.factor(id), 0.0);
    EXPECT_EQ(out.branch(id), FairnessBranch::none);
  }
  EXPECT_EQ(calls, 2);
}

TEST(ComputeFairnessFactors, SaturatedLoserAlwaysRewarded)
{
  auto m = two_consumer_market();
  auto& r = m.repo.records[ConsumerId{0}];
  r.losses = 6;
  r.consecutive_losses = 6;
  const std::map<ConsumerId, RoundOutcome> prev{{ConsumerId{0}, RoundOutcome::lost}};
  const auto out = compute_fairness_factors(m.repo, m.ids, prev, m.means, kParams, constant(0.99));
  EXPECT_EQ(out.branch(ConsumerId{0}), FairnessBranch::reward);
  EXPECT_DOUBLE_EQ(out.factor(ConsumerId{0}), 427.0);  // 7 * (9*6 + 7*1)
  EXPECT_EQ(out.branch(ConsumerId{1}), FairnessBranch::none);
}

TEST(ComputeFairnessFactors, FreshWinnerPenalised)
{
  auto m = two_consumer_market();
  m.repo.records[ConsumerId{1}].wins = 1;
  const std::map<ConsumerId, RoundOutcome> prev{{ConsumerId{1}, RoundOutcome::won}};
  const auto out = compute_fairness_factors(m.repo, m.ids, prev, m.means, kParams, constant(0.3));
  EXPECT_EQ(out.branch(ConsumerId{1}), FairnessBranch::penalty);
  EXPECT_DOUBLE_EQ(out.factor(ConsumerId{1}), -32.0);
}

TEST(ComputeFairnessFactors, LoserBelowProbabilityGetsNothing)
{
  auto m = two_consumer_market();
  auto& r = m.repo.records[ConsumerId{0}];
  r.losses = 1;
  r.consecutive_losses = 1;
  const std::map<ConsumerId, RoundOutcome> prev{{ConsumerId{0}, RoundOutcome::lost}};
  // prob_w(1) = 2/7
  EXPECT_EQ(compute_fairness_factors(m.repo, m.ids, prev, m.means, kParams, constant(0.29)).branch(ConsumerId{0}),
            FairnessBranch::none);
  EXPECT_EQ(compute_fairness_factors(m.repo, m.ids, prev, m.means, kParams, constant(0.28)).factor(ConsumerId{0}),
            2.0 * (9.0 + 7.0));
}

TEST(ComputeFairnessFactors, DrawOrderFollowsAscendingIds)
{
  Repository repo;
  for (std::uint32_t i : {5u, 1u, 3u})
    repo.register_consumer(ConsumerId{i});
  std::map<ConsumerId, RoundOutcome> prev;
  for (std::uint32_t i : {5u, 1u, 3u})
  {
    repo.records[ConsumerId{i}].losses = 1;
    repo.records[ConsumerId{i}].consecutive_losses = 1;
    prev[ConsumerId{i}] = RoundOutcome::lost;
  }
  // Draws 0.0, 0.9, 0.0 go to ids 1, 3, 5 regardless of input order.
  std::vector<double> seq{0.0, 0.9, 0.0};
  std::size_t k = 0;
  const std::vector<ConsumerId> participants{ConsumerId{5}, ConsumerId{1}, ConsumerId{3}};
  const std::vector<double> means{100.0};
  const auto out = compute_fairness_factors(repo, participants, prev, means, kParams, [&]() { return seq[k++]; });
  EXPECT_EQ(out.branch(ConsumerId{1}), FairnessBranch::reward);
  EXPECT_EQ(out.branch(ConsumerId{3}), FairnessBranch::none);
  EXPECT_EQ(out.branch(ConsumerId{5}), FairnessBranch::reward);
  EXPECT_EQ(k, 3u);
}

TEST(ComputeFairnessFactors, MissingRecordIsAnError)
{
  Repository repo;
  const std::vector<ConsumerId> ids{ConsumerId{7}};
  const std::vector<double> means{100.0};
  try
  {
    compute_fairness_factors(repo, ids, {}, means, kParams, constant(0.5));
    FAIL();
  }
  catch (const std::out_of_range& e)
  {
    EXPECT_NE(std::string(e.what()).find("c7"), std::string::npos);
  }
}

TEST(ComputeFairnessFactors, SignsAndPurityOverRandomHistories)
{
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 200; ++trial)
  {
    Repository repo;
    std::vector<ConsumerId> ids;
    std::map<ConsumerId, RoundOutcome> prev;
    std::uniform_int_distribution<int> count(0, 12), coin(0, 2), cents(5000, 25000);
    for (std::uint32_t i = 0; i < 6; ++i)
    {
      const ConsumerId id{i};
      ids.push_back(id);
      auto& r = repo.records[id];
      r.wins = count(gen);
      r.losses = count(gen);
      r.consecutive_losses = std::min<std::int64_t>(r.losses, count(gen) % 7);
      r.price_history.push_back({Money::from_cents(cents(gen)), Money::from_cents(cents(gen))});
      const int c = coin(gen);
      if (c == 1)
        prev[id] = RoundOutcome::won;
      else if (c == 2)
        prev[id] = RoundOutcome::lost;
    }
    const std::vector<double> means{150.0, 120.0};
    const std::uint64_t seed = gen();
    std::mt19937_64 a(seed), b(seed);
    const auto x = compute_fairness_factors(repo, ids, prev, means, kParams, uniform_draw(a));
    const auto y = compute_fairness_factors(repo, ids, prev, means, kParams, uniform_draw(b));
    EXPECT_EQ(x.factors, y.factors);
    EXPECT_EQ(x.applied_branch, y.applied_branch);
    for (auto id : ids)
    {
      if (x.branch(id) == FairnessBranch::reward)
        EXPECT_GT(x.factor(id), 0.0);
      if (x.branch(id) == FairnessBranch::penalty)
        EXPECT_LT(x.factor(id), 0.0);
      if (x.branch(id) == FairnessBranch::none)
        EXPECT_EQ(x.factor(id), 0.0);
      const auto& r = repo.record(id);
      if (prev.count(id) && prev.at(id) == RoundOutcome::lost && r.consecutive_losses >= kParams.max_losses)
        EXPECT_EQ(x.branch(id), FairnessBranch::reward);
    }
  }
}

}  // namespace
}  // namespace mdfcda
