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

#ifndef SPPART_PARTITION_ALGOS_HPP_
#define SPPART_PARTITION_ALGOS_HPP_

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sppart/core.hpp"
#include "sppart/equitable_coloring.hpp"
#include "sppart/error.hpp"
#include "sppart/random.hpp"
#include "sppart/similarity.hpp"
#include "sppart/solver.hpp"

namespace sppart {

enum class Algorithm {
  kRandom,
  kCycleBreaking,
  kColoring,
  kMultiPartition,
  kHeuristic,
  kRandomComponents,
  kOracle,
};

inline const char* AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kRandom:
      return "random";
    case Algorithm::kCycleBreaking:
      return "cycle";
    case Algorithm::kColoring:
      return "coloring";
    case Algorithm::kMultiPartition:
      return "multi";
    case Algorithm::kHeuristic:
      return "general";
    case Algorithm::kRandomComponents:
      return "random-components";
    case Algorithm::kOracle:
      return "oracle";
  }
  return "unknown";
}

// Review cycles of a load-1 assignment. cut_position[c] is the position y
// of the cheapest edge cycles[c][y] -> cycles[c][y+1] (cyclically).
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  std::vector<int> cut_position;
};

// `successor[i]` is the submission reviewed by agent i under a load-1
// assignment, which is a permutation without fixed points. Cycles are
// discovered by scanning `start_order`; `weight(i, j)` is the similarity of
// edge i -> j. Ties for the cheapest edge go to the lowest position.
template <typename WeightFn>
CycleDecomposition DecomposeCycles(const std::vector<int>& successor,
                                   const std::vector<int>& start_order,
                                   WeightFn weight) {
  const int n = static_cast<int>(successor.size());
  CycleDecomposition out;
  std::vector<char> seen(n, 0);
  for (int start : start_order) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v]; v = successor[v]) {
      seen[v] = 1;
      cycle.push_back(v);
    }
    Require(cycle.size() >= 2 && successor[cycle.back()] == start,
            "load-1 assignment is not a fixed-point-free permutation");
    const int len = static_cast<int>(cycle.size());
    int cut = 0;
    auto best = weight(cycle[0], cycle[1 % len]);
    for (int p = 1; p < len; ++p) {
      const auto w = weight(cycle[p], cycle[(p + 1) % len]);
      if (w < best) {
        best = w;
        cut = p;
      }
    }
    out.cycles.push_back(std::move(cycle));
    out.cut_position.push_back(cut);
  }
  return out;
}

inline CycleDecomposition DecomposeCycles(const Instance& instance,
                                          const Assignment& load_one) {
  const int n = instance.num_agents();
  std::vector<int> successor(n, -1);
  for (const auto& pair : load_one.pairs) successor[pair.agent] = pair.paper;
  for (int s : successor) Require(s >= 0, "assignment does not have load 1");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return DecomposeCycles(successor, order, [&](int i, int j) {
    return instance.similarity(i, j);
  });
}

// Splits a cycle by walking forward from just after its cheapest edge and
// alternating members into A (odd steps) and B (even steps). For odd
// lengths A gets the extra member and only the cheapest edge stays
// inside one side.
inline std::pair<std::vector<int>, std::vector<int>> SplitCycle(
    const std::vector<int>& cycle, int cut) {
  const int len = static_cast<int>(cycle.size());
  std::pair<std::vector<int>, std::vector<int>> sides;
  for (int i = 1; i <= len; ++i) {
    const int member = cycle[(cut + i) % len];
    (i % 2 == 1 ? sides.first : sides.second).push_back(member);
  }
  return sides;
}

// x_T for one color subset T of the coloring algorithm.
struct SplitValue {
  std::vector<int> colors;
  Similarity value;
};

struct PartitionResult {
  Algorithm algorithm = Algorithm::kRandom;
  std::optional<std::uint64_t> seed;
  // Zero-similarity agents appended to the input; they occupy the last
  // indices of `assignment` and `partition`.
  int num_dummies = 0;
  Assignment assignment;
  Partition partition;
  // Total similarity of `assignment`; dummy pairs contribute nothing.
  Similarity value;
  // Unconstrained optimum of the input instance and of the padded one.
  Similarity opt_value;
  Similarity working_opt;

  CycleDecomposition cycles;
  Coloring coloring;
  std::vector<SplitValue> split_values;
  int best_split = -1;
};

// The instance the assignment of `result` lives on.
inline Instance WorkingInstance(const Instance& instance,
                                const PartitionResult& result) {
  return result.num_dummies == 0 ? instance
                                 : PadWithDummies(instance, result.num_dummies);
}

namespace detail {

inline Instance OneToOneWithK(const Instance& instance, int k) {
  Require(instance.one_to_one(), "algorithm needs one-to-one authorship");
  Require(k >= 1, "load k must be positive");
  return instance.k() == k ? instance : instance.WithK(k);
}

inline void RequireEven(const Instance& instance, const char* algorithm) {
  Require(instance.num_agents() % 2 == 0,
          std::string(algorithm) + " needs an even number of agents, got " +
              std::to_string(instance.num_agents()));
}

}  // namespace detail

// Uniformly random balanced bipartition, then the best assignment
// respecting it. `opt` skips recomputing the unconstrained optimum.
inline PartitionResult RandomPartition(const Instance& instance, int k,
                                       std::uint64_t seed,
                                       std::optional<Similarity> opt = {}) {
  const Instance working = detail::OneToOneWithK(instance, k);
  detail::RequireEven(working, "random partition");
  const int n = working.num_agents();
  Require(k <= n / 2, "random partition needs k <= n/2");
  Rng rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Shuffle(order, rng);
  PartitionResult result;
  result.algorithm = Algorithm::kRandom;
  result.seed = seed;
  result.partition.agent_subset.assign(n, 1);
  for (int i = 0; i < n / 2; ++i) result.partition.agent_subset[order[i]] = 0;
  auto solution = SolveRespecting(working, result.partition);
  result.assignment = std::move(solution.assignment);
  result.value = solution.value;
  result.opt_value = opt ? *opt : SolveUnconstrained(working).value;
  result.working_opt = result.opt_value;
  return result;
}

// Splits every cycle of the optimal load-1 assignment at its cheapest edge
// and balances the sides greedily, then solves with load k.
inline PartitionResult CycleBreaking(const Instance& instance, int k) {
  const Instance working = detail::OneToOneWithK(instance, k);
  detail::RequireEven(working, "cycle breaking");
  const int n = working.num_agents();
  const Instance load_one = detail::OneToOneWithK(instance, 1);
  const auto matching = SolveK1Matching(AssignmentProblem(load_one));

  PartitionResult result;
  result.algorithm = Algorithm::kCycleBreaking;
  result.cycles = DecomposeCycles(working, matching.assignment);
  std::vector<int> subset(n, -1);
  int size_1 = 0, size_2 = 0;
  for (std::size_t c = 0; c < result.cycles.cycles.size(); ++c) {
    auto [a, b] = SplitCycle(result.cycles.cycles[c], result.cycles.cut_position[c]);
    const bool a_first = size_1 <= size_2;
    for (int v : a) subset[v] = a_first ? 0 : 1;
    for (int v : b) subset[v] = a_first ? 1 : 0;
    (a_first ? size_1 : size_2) += static_cast<int>(a.size());
    (a_first ? size_2 : size_1) += static_cast<int>(b.size());
  }
  result.partition.agent_subset = std::move(subset);
  auto solution = SolveRespecting(working, result.partition);
  result.assignment = std::move(solution.assignment);
  result.value = solution.value;
  result.opt_value = SolveUnconstrained(working).value;
  result.working_opt = result.opt_value;
  return result;
}

// x_T for every (k+1)-subset T of the 2k+2 colors, in lexicographic order.
// A pair of M* counts when reviewer and author fall on different sides.
inline std::vector<SplitValue> ColorSplitValues(const Instance& instance,
                                                const Assignment& optimum,
                                                const Coloring& coloring,
                                                int half) {
  const int r = coloring.num_colors;
  std::vector<SplitValue> out;
  std::vector<int> pick(half);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<char> in_t(r, 0);
    for (int c : pick) in_t[c] = 1;
    Similarity x;
    for (const auto& pair : optimum.pairs) {
      if (in_t[coloring.color[pair.agent]] != in_t[coloring.color[pair.paper]]) {
        x += instance.similarity(pair.agent, pair.paper);
      }
    }
    out.push_back({pick, x});
    int i = half - 1;
    while (i >= 0 && pick[i] == r - half + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < half; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Equitable (2k+2)-coloring of the optimal assignment graph, then the best
// split of the colors into two halves. Pads with zero-similarity dummy
// agents until 2k+2 divides n.
inline PartitionResult ColoringPartition(const Instance& instance, int k) {
  const Instance base = detail::OneToOneWithK(instance, k);
  const int r = 2 * k + 2;
  const int dummies = (r - base.num_agents() % r) % r;
  const Instance working = PadWithDummies(base, dummies);
  const auto optimum = SolveUnconstrained(working);

  PartitionResult result;
  result.algorithm = Algorithm::kColoring;
  result.num_dummies = dummies;
  result.coloring = EquitableColor(BuildDigraph(working, optimum.assignment), r);
  result.split_values =
      ColorSplitValues(working, optimum.assignment, result.coloring, k + 1);
  result.best_split = 0;
  for (int t = 1; t < static_cast<int>(result.split_values.size()); ++t) {
    if (result.split_values[result.best_split].value <
        result.split_values[t].value) {
      result.best_split = t;
    }
  }
  std::vector<char> in_t(r, 0);
  for (int c : result.split_values[result.best_split].colors) in_t[c] = 1;
  result.partition.agent_subset.resize(working.num_agents());
  for (int v = 0; v < working.num_agents(); ++v) {
    result.partition.agent_subset[v] = in_t[result.coloring.color[v]] ? 0 : 1;
  }
  auto solution = SolveRespecting(working, result.partition);
  result.assignment = std::move(solution.assignment);
  result.value = solution.value;
  result.working_opt = optimum.value;
  result.opt_value =
      dummies == 0 ? optimum.value : SolveUnconstrained(base).value;
  return result;
}

// The optimal assignment itself, with the classes of an equitable
// (2k+1)-coloring of its graph as 2k+1 subsets.
inline PartitionResult MultiPartition(const Instance& instance, int k) {
  const Instance working = detail::OneToOneWithK(instance, k);
  const auto optimum = SolveUnconstrained(working);
  const int r = 2 * k + 1;
  PartitionResult result;
  result.algorithm = Algorithm::kMultiPartition;
  result.coloring = EquitableColor(BuildDigraph(working, optimum.assignment), r);
  result.partition.num_subsets = r;
  result.partition.agent_subset = result.coloring.color;
  result.assignment = optimum.assignment;
  result.value = optimum.value;
  result.opt_value = optimum.value;
  result.working_opt = optimum.value;
  return result;
}

}  // namespace sppart

#endif  // SPPART_PARTITION_ALGOS_HPP_
