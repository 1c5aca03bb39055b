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

#ifndef SPPART_GENERAL_AUTHORSHIP_HPP_
#define SPPART_GENERAL_AUTHORSHIP_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sppart/core.hpp"
#include "sppart/error.hpp"
#include "sppart/hungarian.hpp"
#include "sppart/partition_algos.hpp"
#include "sppart/random.hpp"
#include "sppart/similarity.hpp"
#include "sppart/solver.hpp"
#include "sppart/stats.hpp"

namespace sppart {

// Bipartite authorship graph. Vertices 0..n-1 are agents, n..n+m-1 papers.
struct AuthorshipGraph {
  int num_agents = 0;
  int num_papers = 0;
  std::vector<std::pair<int, int>> edges;  // (agent, paper)

  // Agents outside the reviewer pool cannot review, so their authorship
  // does not tie components together.
  static AuthorshipGraph FromInstance(const Instance& instance) {
    AuthorshipGraph graph;
    graph.num_agents = instance.num_agents();
    graph.num_papers = instance.num_papers();
    for (const auto& [agent, paper] : instance.AuthorshipPairs()) {
      if (instance.eligible(agent)) graph.edges.emplace_back(agent, paper);
    }
    return graph;
  }
};

struct Component {
  std::vector<int> agents;
  std::vector<int> papers;
  friend bool operator==(const Component&, const Component&) = default;
};

// Maximal components, ordered by smallest vertex index; members sorted.
inline std::vector<Component> ConnectedComponents(const AuthorshipGraph& graph) {
  const int total = graph.num_agents + graph.num_papers;
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& [agent, paper] : graph.edges) {
    Require(agent >= 0 && agent < graph.num_agents && paper >= 0 &&
                paper < graph.num_papers,
            "authorship edge out of range");
    const int a = find(agent);
    const int b = find(graph.num_agents + paper);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> index_of_root(total, -1);
  std::vector<Component> components;
  for (int v = 0; v < total; ++v) {
    const int root = find(v);
    if (index_of_root[root] < 0) {
      index_of_root[root] = static_cast<int>(components.size());
      components.emplace_back();
    }
    auto& comp = components[index_of_root[root]];
    if (v < graph.num_agents) {
      comp.agents.push_back(v);
    } else {
      comp.papers.push_back(v - graph.num_agents);
    }
  }
  return components;
}

// One-to-one stand-in for an arbitrary-authorship instance: fake agent i is
// component i, and similarity(i, j) sums the optimal-assignment similarity
// crossing components i and j in either direction. The diagonal is zero.
struct ContractedInstance {
  std::vector<Component> components;
  std::vector<int> component_of_agent;
  std::vector<int> component_of_paper;
  std::vector<int> weights;  // submissions per component
  std::vector<std::int64_t> similarity;  // row-major, micro-units
  Assignment optimum;
  Similarity opt_value;

  int size() const { return static_cast<int>(components.size()); }
  Similarity at(int i, int j) const {
    return Similarity::FromMicros(
        similarity[static_cast<std::size_t>(i) * size() + j]);
  }
};

inline ContractedInstance Contract(const Instance& instance, Loads loads) {
  Require(!instance.one_to_one(), "contraction needs general authorship");
  const Instance working = instance.WithLoads(loads);
  ContractedInstance out;
  out.components = ConnectedComponents(AuthorshipGraph::FromInstance(working));
  const int count = out.size();
  out.component_of_agent.assign(working.num_agents(), -1);
  out.component_of_paper.assign(working.num_papers(), -1);
  out.weights.assign(count, 0);
  for (int c = 0; c < count; ++c) {
    for (int a : out.components[c].agents) out.component_of_agent[a] = c;
    for (int p : out.components[c].papers) out.component_of_paper[p] = c;
    out.weights[c] = static_cast<int>(out.components[c].papers.size());
  }
  auto solution = SolveUnconstrained(working);
  out.optimum = std::move(solution.assignment);
  out.opt_value = solution.value;
  out.similarity.assign(static_cast<std::size_t>(count) * count, 0);
  for (const auto& pair : out.optimum.pairs) {
    const int i = out.component_of_agent[pair.agent];
    const int j = out.component_of_paper[pair.paper];
    if (i == j) continue;
    const auto s = working.similarity(pair.agent, pair.paper).micros();
    out.similarity[static_cast<std::size_t>(i) * count + j] += s;
    out.similarity[static_cast<std::size_t>(j) * count + i] += s;
  }
  return out;
}

struct HeuristicResult {
  PartitionResult result;
  ContractedInstance contracted;
  // Side (0 or 1) of each component.
  std::vector<int> component_side;
  // Submission-count gap between the two sides after each cycle merge,
  // with the larger local side's paper surplus for that cycle.
  std::vector<int> paper_gap_history;
  std::vector<int> local_surplus_history;
};

namespace detail {

inline void RequireNoGiantComponent(const std::vector<Component>& components,
                                    int num_papers) {
  for (std::size_t c = 0; c < components.size(); ++c) {
    const int papers = static_cast<int>(components[c].papers.size());
    if (2 * papers > num_papers) {
      std::string agents;
      for (std::size_t i = 0; i < components[c].agents.size() && i < 8; ++i) {
        agents += (i ? "," : "") + std::to_string(components[c].agents[i]);
      }
      if (components[c].agents.size() > 8) agents += ",...";
      Fail(ErrorCode::kPrecondition,
           "authorship component " + std::to_string(c) + " (agents " + agents +
               ") holds " + std::to_string(papers) + " of " +
               std::to_string(num_papers) +
               " submissions, more than half; no balanced partition exists "
               "(try removing heavy authors)");
    }
  }
}

inline Partition ComponentPartition(const ContractedInstance& contracted,
                                    const std::vector<int>& side) {
  Partition partition;
  partition.agent_subset.resize(contracted.component_of_agent.size());
  partition.paper_subset.resize(contracted.component_of_paper.size());
  for (std::size_t a = 0; a < partition.agent_subset.size(); ++a) {
    partition.agent_subset[a] = side[contracted.component_of_agent[a]];
  }
  for (std::size_t p = 0; p < partition.paper_subset.size(); ++p) {
    partition.paper_subset[p] = side[contracted.component_of_paper[p]];
  }
  return partition;
}

}  // namespace detail

// Cycle breaking on the contracted instance, with cycles discovered from
// the heaviest component down and each cycle's heavier half added to the
// lighter side, weight meaning submission count. The component partition
// is then expanded and solved with loads (k_a, k_p).
inline HeuristicResult HeuristicPartition(const Instance& instance,
                                          Loads loads) {
  Require(!instance.one_to_one(), "heuristic partition needs general authorship");
  HeuristicResult out;
  const Instance working = instance.WithLoads(loads);
  out.contracted = Contract(working, loads);
  const auto& contracted = out.contracted;
  detail::RequireNoGiantComponent(contracted.components, working.num_papers());

  const int count = contracted.size();
  const int padded = count + count % 2;
  auto sim = [&](int i, int j) -> std::int64_t {
    if (i >= count || j >= count) return 0;
    return contracted.similarity[static_cast<std::size_t>(i) * count + j];
  };
  std::int64_t max_sim = 0;
  for (auto s : contracted.similarity) max_sim = std::max(max_sim, s);
  const std::int64_t forbidden = (static_cast<std::int64_t>(padded) + 1) * (max_sim + 1);
  std::vector<std::int64_t> cost(static_cast<std::size_t>(padded) * padded);
  for (int i = 0; i < padded; ++i) {
    for (int j = 0; j < padded; ++j) {
      cost[static_cast<std::size_t>(i) * padded + j] =
          i == j ? forbidden : max_sim - sim(i, j);
    }
  }
  const std::vector<int> successor = MinCostPerfectMatching(cost, padded);

  auto weight = [&](int c) { return c < count ? contracted.weights[c] : 0; };
  std::vector<int> order(padded);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weight(a) > weight(b); });
  out.result.cycles = DecomposeCycles(successor, order, sim);

  std::vector<int> side(padded, -1);
  int papers_1 = 0, papers_2 = 0;
  const auto& cycles = out.result.cycles;
  for (std::size_t c = 0; c < cycles.cycles.size(); ++c) {
    auto [a, b] = SplitCycle(cycles.cycles[c], cycles.cut_position[c]);
    int weight_a = 0, weight_b = 0;
    for (int v : a) weight_a += weight(v);
    for (int v : b) weight_b += weight(v);
    if (weight_a < weight_b) {
      std::swap(a, b);
      std::swap(weight_a, weight_b);
    }
    const int lighter = papers_1 <= papers_2 ? 0 : 1;
    for (int v : a) side[v] = lighter;
    for (int v : b) side[v] = 1 - lighter;
    (lighter == 0 ? papers_1 : papers_2) += weight_a;
    (lighter == 0 ? papers_2 : papers_1) += weight_b;
    out.paper_gap_history.push_back(std::abs(papers_1 - papers_2));
    out.local_surplus_history.push_back(weight_a - weight_b);
  }
  side.resize(count);
  out.component_side = side;

  auto& result = out.result;
  result.algorithm = Algorithm::kHeuristic;
  result.partition = detail::ComponentPartition(contracted, side);
  auto solution = SolveRespecting(working, result.partition);
  result.assignment = std::move(solution.assignment);
  result.value = solution.value;
  result.opt_value = contracted.opt_value;
  result.working_opt = contracted.opt_value;
  return out;
}

// Takes agents with more than `threshold` authored submissions out of the
// reviewer pool; their submissions stay.
inline Instance RemoveHeavyAuthors(const Instance& instance, int threshold) {
  Require(threshold >= 1, "heavy-author threshold must be at least 1");
  std::vector<bool> eligible(instance.num_agents());
  for (int a = 0; a < instance.num_agents(); ++a) {
    eligible[a] = instance.eligible(a) &&
                  static_cast<int>(instance.papers_of(a).size()) <= threshold;
  }
  return instance.WithEligibility(std::move(eligible));
}

// Baseline: a uniformly random half of the components (rounded down) forms
// the first side.
inline PartitionResult RandomComponentPartition(const Instance& instance,
                                                std::uint64_t seed,
                                                std::optional<Similarity> opt = {}) {
  Require(!instance.one_to_one(), "component partition needs general authorship");
  const auto components = ConnectedComponents(AuthorshipGraph::FromInstance(instance));
  const int count = static_cast<int>(components.size());
  ContractedInstance shape;
  shape.component_of_agent.assign(instance.num_agents(), -1);
  shape.component_of_paper.assign(instance.num_papers(), -1);
  for (int c = 0; c < count; ++c) {
    for (int a : components[c].agents) shape.component_of_agent[a] = c;
    for (int p : components[c].papers) shape.component_of_paper[p] = c;
  }
  Rng rng(seed);
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  Shuffle(order, rng);
  std::vector<int> side(count, 1);
  for (int i = 0; i < count / 2; ++i) side[order[i]] = 0;

  PartitionResult result;
  result.algorithm = Algorithm::kRandomComponents;
  result.seed = seed;
  result.partition = detail::ComponentPartition(shape, side);
  auto solution = SolveRespecting(instance, result.partition);
  result.assignment = std::move(solution.assignment);
  result.value = solution.value;
  result.opt_value = opt ? *opt : SolveUnconstrained(instance).value;
  result.working_opt = result.opt_value;
  return result;
}

struct BaselineSummary {
  int trials = 0;
  int infeasible = 0;
  std::vector<Similarity> values;  // feasible trials, in seed order
  double mean = 0.0;
  double standard_error = 0.0;
};

// Trial t uses seed + t. Trials whose partition admits no feasible
// assignment are counted and left out of the mean.
inline BaselineSummary RandomComponentBaseline(const Instance& instance,
                                               std::uint64_t seed, int trials) {
  Require(trials >= 1, "need at least one trial");
  BaselineSummary summary;
  summary.trials = trials;
  const Similarity opt = SolveUnconstrained(instance).value;
  for (int t = 0; t < trials; ++t) {
    try {
      summary.values.push_back(
          RandomComponentPartition(instance, seed + t, opt).value);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasible) throw;
      ++summary.infeasible;
    }
  }
  std::vector<double> values;
  for (auto v : summary.values) values.push_back(v.ToDouble());
  const auto stats = Summarize(values);
  summary.mean = stats.mean;
  summary.standard_error = stats.standard_error;
  return summary;
}

}  // namespace sppart

#endif  // SPPART_GENERAL_AUTHORSHIP_HPP_
