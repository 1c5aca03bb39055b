// Copyright 2026 The sppart Authors.
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

// Command-line front end: solve, partition, generate, oracle, evaluate,
// validate. Exit codes: 0 success, 2 parse error, 3 infeasible,
// 4 precondition or size guard, 5 invalid assignment, 6 i/o error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "render.hpp"
#include "sppart/sppart.hpp"

namespace {

namespace fs = std::filesystem;
using sppart::Algorithm;
using sppart::Error;
using sppart::ErrorCode;
using sppart::Instance;
using sppart::KeyValues;
using sppart::PartitionResult;
using sppart::Similarity;
using sppart::tools::Format;

struct InstanceOptions {
  std::string path;
  int k = 0;
  int agent_load = 0;
  int paper_load = 0;
  int remove_heavy = 0;

  void Register(CLI::App* cmd) {
    cmd->add_option("--instance", path, "instance manifest")->required();
    cmd->add_option("--k", k, "load k (one-to-one instances)");
    cmd->add_option("--agent-load", agent_load, "maximum agent load k_a (general)");
    cmd->add_option("--paper-load", paper_load, "paper load k_p (general)");
  }

  // Original instance with the requested loads applied.
  Instance Load() const {
    Instance inst = sppart::ReadInstance(path);
    if (inst.one_to_one()) {
      sppart::Require(agent_load == 0 && paper_load == 0,
                      "--agent-load/--paper-load apply to general instances; use --k");
      return k > 0 ? inst.WithK(k) : inst;
    }
    sppart::Require(k == 0, "--k applies to one-to-one instances; use "
                            "--agent-load/--paper-load");
    sppart::Loads loads = inst.loads();
    if (agent_load > 0) loads.agent = agent_load;
    if (paper_load > 0) loads.paper = paper_load;
    return inst.WithLoads(loads);
  }
};

void AppendLoads(KeyValues& kv, const Instance& inst) {
  kv.emplace_back("mode", inst.one_to_one() ? "one-to-one" : "general");
  kv.emplace_back("agents", std::to_string(inst.num_agents()));
  kv.emplace_back("papers", std::to_string(inst.num_papers()));
  if (inst.one_to_one()) {
    kv.emplace_back("k", std::to_string(inst.k()));
  } else {
    kv.emplace_back("agent_load", std::to_string(inst.loads().agent));
    kv.emplace_back("paper_load", std::to_string(inst.loads().paper));
  }
}

void Emit(const fs::path& dir, const KeyValues& kv, Format format, bool print,
          const std::string& stem = "report") {
  sppart::WriteFileAtomic(dir / (stem + ".txt"),
                          sppart::tools::Render(kv, Format::kText));
  if (format != Format::kText) {
    sppart::WriteFileAtomic(
        dir / (stem + "." + sppart::tools::FormatExtension(format)),
        sppart::tools::Render(kv, format));
  }
  if (print) std::cout << sppart::tools::Render(kv, format);
}

void WritePartitionFiles(const fs::path& dir, const Instance& original,
                         const sppart::Assignment& assignment,
                         const sppart::Partition& partition) {
  sppart::WriteFileAtomic(dir / "assignment.csv",
                          sppart::FormatAssignment(assignment, original.num_agents(),
                                                   original.num_papers()));
  sppart::WriteFileAtomic(dir / "partition.txt",
                          sppart::FormatLabels(partition.agent_subset));
  if (!partition.paper_subset.empty()) {
    sppart::WriteFileAtomic(dir / "paper_partition.txt",
                            sppart::FormatLabels(partition.paper_subset));
  }
}

KeyValues PartitionReport(const Instance& original, const PartitionResult& result) {
  const Instance working = sppart::WorkingInstance(original, result);
  KeyValues kv = {{"command", "partition"},
                  {"algorithm", sppart::AlgorithmName(result.algorithm)}};
  if (result.seed) kv.emplace_back("seed", std::to_string(*result.seed));
  AppendLoads(kv, original);
  kv.emplace_back("dummy_agents", std::to_string(result.num_dummies));
  const auto report = sppart::MakeReport(working, result.assignment, result.opt_value,
                                         &result.partition, original.num_papers());
  sppart::tools::AppendReport(kv, report);
  if (!result.partition.paper_subset.empty()) {
    std::vector<int> papers(result.partition.num_subsets, 0);
    for (int s : result.partition.paper_subset) ++papers[s];
    kv.emplace_back("paper_subset_sizes", sppart::tools::JoinInts(papers));
  }
  if (result.num_dummies > 0) {
    kv.emplace_back("padded_opt_similarity", result.working_opt.ToString());
  }
  if (result.best_split >= 0) {
    const auto& best = result.split_values[result.best_split];
    kv.emplace_back("split_colors", sppart::tools::JoinInts(best.colors));
    kv.emplace_back("split_value", best.value.ToString());
  }
  return kv;
}

void WriteResult(const fs::path& dir, const Instance& original,
                 const PartitionResult& result, const KeyValues& extra,
                 Format format, bool print) {
  WritePartitionFiles(dir, original, result.assignment, result.partition);
  KeyValues kv = PartitionReport(original, result);
  kv.insert(kv.end(), extra.begin(), extra.end());
  Emit(dir, kv, format, print);
}

int RunSolve(const InstanceOptions& opts, const std::string& out, Format format) {
  const Instance inst = opts.Load();
  const auto solution = sppart::SolveUnconstrained(inst);
  sppart::WriteFileAtomic(fs::path(out) / "assignment.csv",
                          sppart::FormatAssignment(solution.assignment,
                                                   inst.num_agents(), inst.num_papers()));
  KeyValues kv = {{"command", "solve"}};
  AppendLoads(kv, inst);
  sppart::tools::AppendReport(
      kv, sppart::MakeReport(inst, solution.assignment, solution.value, nullptr));
  Emit(out, kv, format, true);
  return 0;
}

Algorithm ParseAlgorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kRandom, Algorithm::kCycleBreaking,
                      Algorithm::kColoring, Algorithm::kMultiPartition,
                      Algorithm::kHeuristic}) {
    if (name == sppart::AlgorithmName(a)) return a;
  }
  if (name == "components") return Algorithm::kRandomComponents;
  sppart::Fail(ErrorCode::kPrecondition,
               "unknown algorithm '" + name +
                   "' (random, cycle, coloring, multi, general, components)");
}

std::string TrialDir(int t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "trial_%03d", t);
  return buf;
}

int RunPartition(const InstanceOptions& opts, const std::string& algo_name,
                 std::uint64_t seed, int trials, const std::string& out,
                 Format format) {
  const Algorithm algo = ParseAlgorithm(algo_name);
  const Instance original = opts.Load();
  const bool randomized =
      algo == Algorithm::kRandom || algo == Algorithm::kRandomComponents;
  sppart::Require(trials >= 1, "--trials must be at least 1");
  sppart::Require(randomized || trials == 1,
                  "--trials applies only to randomized algorithms");
  const bool general = algo == Algorithm::kHeuristic ||
                       algo == Algorithm::kRandomComponents;
  sppart::Require(general != original.one_to_one(),
                  general ? "algorithm '" + algo_name + "' needs a general instance"
                          : "algorithm '" + algo_name + "' needs a one-to-one instance");
  sppart::Require(opts.remove_heavy == 0 || general,
                  "--remove-heavy applies to general instances");

  Instance inst = original;
  KeyValues extra;
  if (opts.remove_heavy > 0) {
    inst = sppart::RemoveHeavyAuthors(original, opts.remove_heavy);
    extra.emplace_back("removed_reviewers",
                       std::to_string(original.num_agents() - inst.num_eligible()));
  }
  // Opt is always measured with every reviewer available.
  const Similarity opt = sppart::SolveUnconstrained(original).value;
  const int k = original.one_to_one() ? original.k() : 0;

  auto run_once = [&](std::uint64_t s) -> PartitionResult {
    switch (algo) {
      case Algorithm::kRandom:
        return sppart::RandomPartition(inst, k, s, opt);
      case Algorithm::kCycleBreaking:
        return sppart::CycleBreaking(inst, k);
      case Algorithm::kColoring:
        return sppart::ColoringPartition(inst, k);
      case Algorithm::kMultiPartition:
        return sppart::MultiPartition(inst, k);
      case Algorithm::kHeuristic: {
        auto h = sppart::HeuristicPartition(inst, inst.loads());
        h.result.opt_value = opt;
        return h.result;
      }
      case Algorithm::kRandomComponents:
        return sppart::RandomComponentPartition(inst, s, opt);
      case Algorithm::kOracle:
        break;
    }
    sppart::Fail(ErrorCode::kPrecondition, "unsupported algorithm");
  };

  if (trials == 1) {
    WriteResult(out, original, run_once(seed), extra, format, true);
    return 0;
  }
  std::vector<double> values, losses;
  int infeasible = 0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    try {
      const auto result = run_once(s);
      WriteResult(fs::path(out) / TrialDir(t), original, result, extra, format, false);
      values.push_back(result.value.ToDouble());
      losses.push_back(opt.micros() > 0
                           ? 1.0 - result.value.ToDouble() / opt.ToDouble()
                           : 0.0);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasible) throw;
      ++infeasible;
    }
  }
  sppart::Require(!values.empty(), "every trial was infeasible");
  const auto value_stats = sppart::Summarize(values);
  const auto loss_stats = sppart::Summarize(losses);
  KeyValues kv = {{"command", "partition"},
                  {"algorithm", algo_name},
                  {"first_seed", std::to_string(seed)},
                  {"trials", std::to_string(trials)},
                  {"feasible_trials", std::to_string(values.size())},
                  {"infeasible_trials", std::to_string(infeasible)}};
  AppendLoads(kv, original);
  kv.emplace_back("opt_similarity", opt.ToString());
  kv.emplace_back("mean_similarity", sppart::tools::Decimal(value_stats.mean));
  kv.emplace_back("stderr_similarity", sppart::tools::Decimal(value_stats.standard_error));
  kv.emplace_back("mean_loss", sppart::tools::Decimal(loss_stats.mean));
  kv.emplace_back("stderr_loss", sppart::tools::Decimal(loss_stats.standard_error));
  kv.insert(kv.end(), extra.begin(), extra.end());
  Emit(out, kv, format, true, "aggregate");
  return 0;
}

struct GenerateOptions {
  std::string family;
  int n = 0;
  int k = 1;
  std::uint64_t seed = 0;
  int agents = 0;
  int papers = 0;
  int agent_load = 0;
  int paper_load = 0;
  int max_authors = 1;
  std::string out;
};

int RunGenerate(const GenerateOptions& g) {
  std::optional<Instance> inst;
  KeyValues kv = {{"command", "generate"}, {"family", g.family}};
  if (g.family == "general") {
    sppart::Require(g.agents > 0 && g.papers > 0 && g.agent_load > 0 && g.paper_load > 0,
                    "family 'general' needs --agents, --papers, --agent-load, --paper-load");
    inst = sppart::GenRandomGeneral(g.agents, g.papers, {g.agent_load, g.paper_load},
                                    g.seed, g.max_authors);
    kv.emplace_back("seed", std::to_string(g.seed));
  } else {
    const auto family = sppart::ParseFamily(g.family);
    sppart::Require(g.n > 0, "--n is required for family '" + g.family + "'");
    inst = sppart::Generate({family, g.n, g.k, g.seed});
    if (family == sppart::Family::kUniform || family == sppart::Family::kBinary) {
      kv.emplace_back("seed", std::to_string(g.seed));
    }
  }
  const auto manifest = sppart::WriteInstance(*inst, g.out);
  AppendLoads(kv, *inst);
  kv.emplace_back("manifest", manifest.string());
  std::cout << sppart::tools::Render(kv, Format::kText);
  return 0;
}

int RunOracle(const InstanceOptions& opts, const std::string& out, Format format) {
  const Instance inst = opts.Load();
  sppart::Require(inst.one_to_one(), "oracle needs a one-to-one instance");
  const auto best = sppart::BruteForcePartitionOpt(inst, inst.k());
  const auto opt = sppart::SolveUnconstrained(inst).value;
  WritePartitionFiles(out, inst, best.assignment, best.partition);
  KeyValues kv = {{"command", "oracle"}, {"algorithm", "oracle"}};
  AppendLoads(kv, inst);
  sppart::tools::AppendReport(
      kv, sppart::MakeReport(inst, best.assignment, opt, &best.partition));
  kv.emplace_back("partitions_evaluated", std::to_string(best.partitions_evaluated));
  kv.emplace_back("partitions_infeasible", std::to_string(best.partitions_infeasible));
  Emit(out, kv, format, true);
  return 0;
}

int RunEvaluate(const std::string& partition_path, const std::string& paper_partition_path,
                const std::string& outcomes_path, const std::string& out, Format format) {
  std::vector<int> paper_labels;
  if (!paper_partition_path.empty()) {
    paper_labels = sppart::ParseLabels(sppart::ReadFile(paper_partition_path),
                                       fs::path(paper_partition_path).filename().string());
  }
  const auto partition = sppart::PartitionFromLabels(
      sppart::ParseLabels(sppart::ReadFile(partition_path),
                          fs::path(partition_path).filename().string()),
      paper_labels);
  const auto outcomes = sppart::ParseOutcomes(
      sppart::ReadFile(outcomes_path), fs::path(outcomes_path).filename().string());

  KeyValues kv = {{"command", "evaluate"},
                  {"subsets", std::to_string(partition.num_subsets)}};
  const auto counts = sppart::SubsetOutcomeCounts(partition, outcomes);
  const auto scores = sppart::SubsetScores(partition, outcomes);
  for (int s = 0; s < partition.num_subsets; ++s) {
    const std::string prefix = "subset_" + std::to_string(s) + "_";
    int total = 0;
    std::string histogram;
    for (const auto& [decision, count] : counts[s]) {
      if (!histogram.empty()) histogram += ';';
      histogram += decision + ':' + std::to_string(count);
      total += count;
    }
    std::vector<double> values;
    for (auto v : scores[s]) values.push_back(static_cast<double>(v) / sppart::kScale);
    const auto summary = sppart::Summarize(values);
    kv.emplace_back(prefix + "papers", std::to_string(total));
    kv.emplace_back(prefix + "decisions", histogram);
    kv.emplace_back(prefix + "scored", std::to_string(values.size()));
    kv.emplace_back(prefix + "mean_score", sppart::tools::Decimal(summary.mean));
  }
  const auto ks = sppart::KsMulti(scores);
  kv.emplace_back("ks_subset_a", std::to_string(ks.subset_a));
  kv.emplace_back("ks_subset_b", std::to_string(ks.subset_b));
  kv.emplace_back("ks_d", ks.result.d.ToString());
  kv.emplace_back("ks_d_decimal", sppart::tools::Decimal(ks.result.d.ToDouble()));
  kv.emplace_back("ks_p", sppart::tools::Decimal(ks.result.p));
  kv.emplace_back("ks_size_a", std::to_string(ks.result.size_a));
  kv.emplace_back("ks_size_b", std::to_string(ks.result.size_b));
  if (out.empty()) {
    std::cout << sppart::tools::Render(kv, format);
  } else {
    Emit(out, kv, format, true, "evaluation");
  }
  return 0;
}

int RunValidate(const InstanceOptions& opts, const std::string& assignment_path,
                const std::string& partition_path, const std::string& paper_partition_path,
                Format format) {
  Instance inst = opts.Load();
  if (opts.remove_heavy > 0) inst = sppart::RemoveHeavyAuthors(inst, opts.remove_heavy);
  const auto assignment = sppart::ParseAssignment(
      sppart::ReadFile(assignment_path), fs::path(assignment_path).filename().string());
  std::optional<sppart::Partition> partition;
  int padded = inst.num_agents();
  if (!partition_path.empty()) {
    std::vector<int> paper_labels;
    if (!paper_partition_path.empty()) {
      paper_labels = sppart::ParseLabels(sppart::ReadFile(paper_partition_path),
                                         fs::path(paper_partition_path).filename().string());
    }
    partition = sppart::PartitionFromLabels(
        sppart::ParseLabels(sppart::ReadFile(partition_path),
                            fs::path(partition_path).filename().string()),
        paper_labels);
    padded = std::max(padded, static_cast<int>(partition->agent_subset.size()));
  }
  if (inst.one_to_one()) {
    for (const auto& pair : assignment.pairs) {
      padded = std::max({padded, pair.agent + 1, pair.paper + 1});
    }
    if (padded > inst.num_agents()) {
      inst = sppart::PadWithDummies(inst, padded - inst.num_agents());
    }
  }
  const auto verdict = sppart::Validate(inst, assignment, partition ? &*partition : nullptr);
  KeyValues kv = {{"command", "validate"},
                  {"violations", std::to_string(verdict.violations.size())}};
  for (std::size_t i = 0; i < verdict.violations.size(); ++i) {
    const auto& v = verdict.violations[i];
    kv.emplace_back("violation_" + std::to_string(i + 1),
                    std::string(sppart::ViolationKindName(v.kind)) + ": " + v.detail);
  }
  if (verdict.ok()) {
    kv.emplace_back("total_similarity", sppart::TotalSimilarity(inst, assignment).ToString());
  }
  std::cout << sppart::tools::Render(kv, format);
  return verdict.ok() ? 0 : static_cast<int>(ErrorCode::kInvalidAssignment);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strategyproof reviewer assignment via partitioning"};
  app.require_subcommand(1);
  std::function<int()> action;
  std::string format_name = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "report format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
  };
  auto format = [&] { return sppart::tools::ParseFormat(format_name); };

  InstanceOptions solve_opts;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "unconstrained maximum-similarity assignment");
  solve_opts.Register(solve);
  solve->add_option("--out", solve_out, "output directory")->required();
  add_format(solve);
  solve->callback([&] { action = [&] { return RunSolve(solve_opts, solve_out, format()); }; });

  InstanceOptions part_opts;
  std::string algo, part_out;
  std::uint64_t seed = 0;
  int trials = 1;
  auto* partition = app.add_subcommand("partition", "strategyproof partitioning algorithms");
  part_opts.Register(partition);
  partition->add_option("--algo", algo, "random, cycle, coloring, multi, general, components")
      ->required();
  partition->add_option("--seed", seed, "seed of the first trial");
  partition->add_option("--trials", trials, "number of seeded trials (randomized algorithms)");
  partition->add_option("--remove-heavy", part_opts.remove_heavy,
                        "drop reviewers authoring more than this many papers");
  partition->add_option("--out", part_out, "output directory")->required();
  add_format(partition);
  partition->callback([&] {
    action = [&] { return RunPartition(part_opts, algo, seed, trials, part_out, format()); };
  });

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "write a generated instance");
  generate->add_option("--family", gen.family, "theorem2, theorem6, uniform, binary, general")
      ->required();
  generate->add_option("--n", gen.n, "agents (one-to-one families)");
  generate->add_option("--k", gen.k, "load k");
  generate->add_option("--seed", gen.seed, "random seed");
  generate->add_option("--agents", gen.agents, "agents (general family)");
  generate->add_option("--papers", gen.papers, "papers (general family)");
  generate->add_option("--agent-load", gen.agent_load, "k_a (general family)");
  generate->add_option("--paper-load", gen.paper_load, "k_p (general family)");
  generate->add_option("--max-authors", gen.max_authors, "authors per paper (general family)");
  generate->add_option("--out", gen.out, "output directory")->required();
  generate->callback([&] { action = [&] { return RunGenerate(gen); }; });

  InstanceOptions oracle_opts;
  std::string oracle_out;
  auto* oracle = app.add_subcommand("oracle", "exhaustive best balanced bipartition (n <= 14)");
  oracle_opts.Register(oracle);
  oracle->add_option("--out", oracle_out, "output directory")->required();
  add_format(oracle);
  oracle->callback([&] { action = [&] { return RunOracle(oracle_opts, oracle_out, format()); }; });

  std::string eval_partition, eval_paper_partition, eval_outcomes, eval_out;
  auto* evaluate = app.add_subcommand("evaluate", "per-subset outcomes and KS test");
  evaluate->add_option("--partition", eval_partition, "agent partition file")->required();
  evaluate->add_option("--paper-partition", eval_paper_partition,
                       "submission partition file (general mode)");
  evaluate->add_option("--outcomes", eval_outcomes, "paper,decision,score file")->required();
  evaluate->add_option("--out", eval_out, "output directory (optional)");
  add_format(evaluate);
  evaluate->callback([&] {
    action = [&] {
      return RunEvaluate(eval_partition, eval_paper_partition, eval_outcomes, eval_out,
                         format());
    };
  });

  InstanceOptions val_opts;
  std::string val_assignment, val_partition, val_paper_partition;
  auto* validate = app.add_subcommand("validate", "re-check result files against an instance");
  val_opts.Register(validate);
  validate->add_option("--assignment", val_assignment, "assignment.csv")->required();
  validate->add_option("--partition", val_partition, "partition.txt");
  validate->add_option("--paper-partition", val_paper_partition, "paper_partition.txt");
  validate->add_option("--remove-heavy", val_opts.remove_heavy,
                       "heavy-author threshold used when partitioning");
  add_format(validate);
  validate->callback([&] {
    action = [&] {
      return RunValidate(val_opts, val_assignment, val_partition, val_paper_partition,
                         format());
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorCode::kParse);
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "sppart: " << sppart::ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "sppart: i/o error: " << e.what() << '\n';
    return static_cast<int>(ErrorCode::kIo);
  } catch (const std::exception& e) {
    std::cerr << "sppart: internal error: " << e.what() << '\n';
    return 1;
  }
}
