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

#include "mdfcda/commands.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>

#include "mdfcda/corpus.hpp"
#include "mdfcda/instance_io.hpp"

namespace mdfcda::cli {

namespace {

void print_run_summaries(const SimulationReport& report, std::ostream& out, const std::string& label)
{
  for (const auto& r : report.per_run)
  {
    out << label << "run " << r.run << ": drops=" << r.drops
        << " mean_drop_round=" << (r.mean_drop_round ? format_real(*r.mean_drop_round) : std::string("n/a"))
        << " total_utility=" << r.total_utility.to_string()
        << " mean_utilization=" << format_real(r.mean_utilization) << '\n';
  }
}

// Validation failures are configuration errors; everything after is runtime.
template <typename Body>
int guarded(const ExperimentConfig& config, std::ostream& err, Body&& body)
{
  try
  {
    config.validate();
  }
  catch (const std::exception& e)
  {
    err << "error: invalid configuration: " << e.what() << '\n';
    return kUsageError;
  }
  try
  {
    return body();
  }
  catch (const std::exception& e)
  {
    err << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
}

std::string comparison_csv(const SimulationReport& fair, const SimulationReport& base)
{
  std::string csv = std::string(kComparisonHeader) + "\n";
  for (std::size_t k = 0; k < fair.per_run.size(); ++k)
  {
    const auto& f = fair.per_run[k];
    const auto& b = base.per_run[k];
    std::string drop_round;
    if (f.mean_drop_round && b.mean_drop_round)
      drop_round = format_real(*f.mean_drop_round - *b.mean_drop_round);
    csv += std::to_string(f.run) + "," + std::to_string(b.drops - f.drops) + "," + drop_round + "," +
           (f.total_utility - b.total_utility).to_string() + "," +
           format_real(f.mean_utilization - b.mean_utilization) + "," +
           format_real(f.mean_win_percent - b.mean_win_percent) + "\n";
  }
  return csv;
}

}  // namespace

int cmd_run(const ExperimentConfig& config, unsigned jobs, std::ostream& out, std::ostream& err)
{
  return guarded(config, err, [&]() {
    SimulationOptions options;
    options.jobs = jobs;
    const auto report = run_simulation(config.scenario, config.engine, options);
    emit(report, config.output_dir);
    print_run_summaries(report, out, "");
    out << "wrote " << config.output_dir.string() << '\n';
    return static_cast<int>(kSuccess);
  });
}

int cmd_compare(const ExperimentConfig& config, unsigned jobs, std::ostream& out, std::ostream& err)
{
  return guarded(config, err, [&]() {
    SimulationOptions options;
    options.jobs = jobs;
    auto fair_engine = config.engine;
    fair_engine.fairness_enabled = true;
    auto base_engine = config.engine;
    base_engine.fairness_enabled = false;

    const auto fair = run_simulation(config.scenario, fair_engine, options);
    const auto base = run_simulation(config.scenario, base_engine, options);

    emit(fair, config.output_dir / "mdfcda");
    emit(base, config.output_dir / "baseline");
    const auto path = config.output_dir / "comparison.csv";
    std::ofstream csv(path, std::ios::binary);
    csv << comparison_csv(fair, base);
    csv.close();
    if (!csv)
      throw std::runtime_error("failed writing " + path.string());

    print_run_summaries(fair, out, "mdfcda   ");
    print_run_summaries(base, out, "baseline ");
    int higher = 0, lower = 0, equal = 0;
    for (std::size_t k = 0; k < fair.per_run.size(); ++k)
    {
      const auto d = fair.per_run[k].total_utility - base.per_run[k].total_utility;
      (d > Money{} ? higher : d < Money{} ? lower : equal)++;
    }
    out << "total utility mdfcda vs baseline: higher=" << higher << " lower=" << lower << " equal=" << equal << '\n';
    out << "wrote " << config.output_dir.string() << '\n';
    return static_cast<int>(kSuccess);
  });
}

int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err, const SolverUnderTest& solver)
{
  if (options.corpus_size < 1)
  {
    err << "error: corpus size must be at least 1\n";
    return kUsageError;
  }
  const SolverUnderTest under_test =
      solver ? solver : SolverUnderTest([](const WdpInstance& i) { return solve_exact(i); });

  try
  {
    std::mt19937_64 rng(options.seed);
    std::int64_t passed = 0, failed = 0;
    for (std::int64_t i = 0; i < options.corpus_size; ++i)
    {
      const auto instance = random_micro_instance(rng);
      const auto got = under_test(instance);
      const auto want = solve_oracle(instance);
      const auto violations = validate_solution(instance, got.allocation);
      if (got.objective == want.objective && violations.empty())
      {
        ++passed;
        continue;
      }
      if (failed++ == 0)
      {
        err << "mismatch on instance " << i << ": solver objective " << format_real(got.objective)
            << ", oracle objective " << format_real(want.objective) << ", " << violations.size()
            << " constraint violation(s)\n"
            << dump_instance(instance);
      }
    }
    out << "validated " << options.corpus_size << " instances: " << passed << " passed, " << failed << " failed\n";
    return failed == 0 ? kSuccess : kValidationMismatch;
  }
  catch (const std::exception& e)
  {
    err << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Fairness-aware combinatorial double auction simulator"};
  app.name("mdfcda");
  app.require_subcommand(1);

  struct
  {
    std::string config_path;
    std::uint64_t seed = 0;
    std::int64_t rounds = 0, runs = 0;
    std::size_t consumers = 0, providers = 0, types = 0;
    bool no_fairness = false;
    std::string solver;
    std::int64_t time_limit_ms = 0;
    std::string out_dir;
    unsigned jobs = 1;
  } flags;

  struct SimOptions
  {
    CLI::Option *config, *seed, *rounds, *runs, *consumers, *providers, *types, *solver, *time_limit, *out;
  };
  auto add_sim_flags = [&](CLI::App* sub) {
    SimOptions o{};
    o.config = sub->add_option("--config", flags.config_path, "JSON experiment file");
    o.seed = sub->add_option("--seed", flags.seed, "Master random seed");
    o.rounds = sub->add_option("--rounds", flags.rounds, "Auction rounds per run");
    o.runs = sub->add_option("--runs", flags.runs, "Independent runs");
    o.consumers = sub->add_option("--consumers", flags.consumers, "Number of consumers (N)");
    o.providers = sub->add_option("--providers", flags.providers, "Number of providers (M)");
    o.types = sub->add_option("--types", flags.types, "Number of resource types (L)");
    o.solver = sub->add_option("--solver", flags.solver, "exact, heuristic or oracle")
                   ->check(CLI::IsMember({"exact", "heuristic", "oracle"}));
    o.time_limit = sub->add_option("--time-limit-ms", flags.time_limit_ms, "Exact solver time budget per round");
    o.out = sub->add_option("--out", flags.out_dir, "Output directory");
    sub->add_option("--jobs", flags.jobs, "Worker threads across runs")->check(CLI::PositiveNumber);
    return o;
  };

  auto* run = app.add_subcommand("run", "Simulate and write per-round and per-run metrics");
  const auto run_opts = add_sim_flags(run);
  run->add_flag("--no-fairness", flags.no_fairness, "Run the baseline auction without fairness factors");

  auto* compare = app.add_subcommand("compare", "Fairness on vs off on shared bid streams");
  const auto compare_opts = add_sim_flags(compare);

  ValidateOptions validate_opts;
  auto* validate = app.add_subcommand("validate", "Cross-check the exact solver against the oracle");
  validate->add_option("--corpus", validate_opts.corpus_size, "Number of random micro instances");
  validate->add_option("--seed", validate_opts.seed, "Corpus seed");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e)
  {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  if (validate->parsed())
    return cmd_validate(validate_opts, out, err);

  const bool comparing = compare->parsed();
  const auto& o = comparing ? compare_opts : run_opts;
  ExperimentConfig config;
  try
  {
    if (*o.config)
      config = load_config(flags.config_path);
    if (*o.seed)
      config.engine.master_seed = flags.seed;
    if (*o.rounds)
      config.engine.rounds = flags.rounds;
    if (*o.runs)
      config.scenario.runs = flags.runs;
    if (*o.consumers)
      config.scenario.shape.consumers = flags.consumers;
    if (*o.providers)
      config.scenario.shape.providers = flags.providers;
    if (*o.types)
      config.scenario.shape.resource_types = flags.types;
    if (*o.solver)
      config.engine.solver_mode = parse_solver_mode(flags.solver);
    if (*o.time_limit)
      config.engine.solver_limits.time_budget = std::chrono::milliseconds(flags.time_limit_ms);
    if (*o.out)
      config.output_dir = flags.out_dir;
    if (flags.no_fairness)
      config.engine.fairness_enabled = false;
  }
  catch (const std::exception& e)
  {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return comparing ? cmd_compare(config, flags.jobs, out, err) : cmd_run(config, flags.jobs, out, err);
}

}  // namespace mdfcda::cli
