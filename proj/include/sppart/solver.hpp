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

#ifndef SPPART_SOLVER_HPP_
#define SPPART_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sppart/core.hpp"
#include "sppart/error.hpp"
#include "sppart/hungarian.hpp"
#include "sppart/min_cost_flow.hpp"
#include "sppart/similarity.hpp"

namespace sppart {

// The constrained maximum-similarity assignment problem: the loads of the
// instance, authorship conflicts, ineligible reviewers, extra forbidden
// pairs, and optionally a partition whose same-subset pairs are forbidden.
//
// Holds a reference to the instance, which must outlive the problem.
class AssignmentProblem {
 public:
  explicit AssignmentProblem(const Instance& instance)
      : instance_(&instance),
        extra_forbidden_(static_cast<std::size_t>(instance.num_agents()) *
                             instance.num_papers(),
                         false) {}

  AssignmentProblem& Forbid(int agent, int paper) {
    extra_forbidden_[Index(agent, paper)] = true;
    return *this;
  }

  AssignmentProblem& RespectPartition(Partition partition) {
    Require(static_cast<int>(partition.agent_subset.size()) ==
                instance_->num_agents(),
            "partition size does not match the instance");
    Require(instance_->one_to_one() ||
                static_cast<int>(partition.paper_subset.size()) ==
                    instance_->num_papers(),
            "general-mode partition must label every submission");
    partition_ = std::move(partition);
    return *this;
  }

  const Instance& instance() const { return *instance_; }
  Loads loads() const { return instance_->loads(); }
  const std::optional<Partition>& partition() const { return partition_; }

  bool Allowed(int agent, int paper) const {
    if (!instance_->eligible(agent)) return false;
    if (instance_->is_author(agent, paper)) return false;
    if (extra_forbidden_[Index(agent, paper)]) return false;
    if (partition_ &&
        partition_->agent_subset[agent] == partition_->PaperSubset(paper)) {
      return false;
    }
    return true;
  }

 private:
  std::size_t Index(int agent, int paper) const {
    return static_cast<std::size_t>(agent) * instance_->num_papers() + paper;
  }

  const Instance* instance_;
  std::vector<bool> extra_forbidden_;
  std::optional<Partition> partition_;
};

struct Solution {
  Assignment assignment;
  Similarity value;
};

namespace detail {

// Cheap necessary conditions, checked first so that an infeasible problem
// reports which capacity is short instead of a bare flow deficit.
inline void CheckCapacities(const AssignmentProblem& problem) {
  const Instance& inst = problem.instance();
  const Loads loads = problem.loads();
  for (int p = 0; p < inst.num_papers(); ++p) {
    int allowed = 0;
    for (int a = 0; a < inst.num_agents(); ++a) allowed += problem.Allowed(a, p);
    if (allowed < loads.paper) {
      Fail(ErrorCode::kInfeasible,
           "submission " + std::to_string(p) + " has " +
               std::to_string(allowed) + " admissible reviewers, needs " +
               std::to_string(loads.paper));
    }
  }
  const auto& partition = problem.partition();
  if (!partition) return;
  for (int s = 0; s < partition->num_subsets; ++s) {
    std::int64_t demand = 0;
    for (int p = 0; p < inst.num_papers(); ++p) {
      if (partition->PaperSubset(p) == s) demand += loads.paper;
    }
    std::int64_t supply = 0;
    for (int a = 0; a < inst.num_agents(); ++a) {
      if (partition->agent_subset[a] != s && inst.eligible(a)) {
        supply += loads.agent;
      }
    }
    if (supply < demand) {
      Fail(ErrorCode::kInfeasible,
           "subset " + std::to_string(s) + " needs " + std::to_string(demand) +
               " reviews but agents outside it supply only " +
               std::to_string(supply));
    }
  }
}

}  // namespace detail

// Exact maximum-similarity assignment by min-cost flow.
//
// Network: source -> agent (capacity k_a), agent -> submission (capacity 1,
// cost 1 - s), submission -> sink (capacity k_p). Every unit of flow crosses
// exactly one pair arc, so with the flow value pinned at m*k_p the shifted
// costs order solutions exactly as the negated similarity would, and all
// costs stay non-negative. In one-to-one mode n*k units saturate every
// agent arc, giving exact agent loads.
inline Solution SolveMaxSimilarity(const AssignmentProblem& problem) {
  detail::CheckCapacities(problem);
  const Instance& inst = problem.instance();
  const Loads loads = problem.loads();
  const int n = inst.num_agents();
  const int m = inst.num_papers();
  const int source = n + m;
  const int sink = n + m + 1;

  MinCostFlow<std::int64_t, std::int64_t> flow(n + m + 2);
  for (int a = 0; a < n; ++a) {
    if (inst.eligible(a)) flow.AddArc(source, a, loads.agent, 0);
  }
  struct PairArc {
    int arc;
    int agent;
    int paper;
  };
  std::vector<PairArc> pair_arcs;
  for (int a = 0; a < n; ++a) {
    for (int p = 0; p < m; ++p) {
      if (!problem.Allowed(a, p)) continue;
      const std::int64_t cost = kScale - inst.similarity(a, p).micros();
      pair_arcs.push_back({flow.AddArc(a, n + p, 1, cost), a, p});
    }
  }
  for (int p = 0; p < m; ++p) flow.AddArc(n + p, sink, loads.paper, 0);

  const std::int64_t required = static_cast<std::int64_t>(m) * loads.paper;
  const auto result = flow.Solve(source, sink, required);
  if (result.flow < required) {
    Fail(ErrorCode::kInfeasible,
         "only " + std::to_string(result.flow) + " of " +
             std::to_string(required) +
             " reviews can be placed under the load and conflict constraints");
  }

  Solution solution;
  std::vector<ReviewPair> pairs;
  pairs.reserve(required);
  for (const auto& pa : pair_arcs) {
    const auto units = flow.Flow(pa.arc);
    if (units == 1) {
      pairs.push_back({pa.agent, pa.paper});
      solution.value += inst.similarity(pa.agent, pa.paper);
    }
  }
  solution.assignment = Assignment::FromPairs(std::move(pairs));
  return solution;
}

// Load-1 one-to-one special case solved independently by the Hungarian
// method; serves as a cross-check of the flow solver.
inline Solution SolveK1Matching(const AssignmentProblem& problem) {
  const Instance& inst = problem.instance();
  Require(inst.one_to_one(), "k=1 matching needs one-to-one mode");
  Require(problem.loads().paper == 1, "k=1 matching needs loads of 1");
  const int n = inst.num_agents();
  // Any forbidden pair costs more than a full matching of allowed pairs.
  const std::int64_t forbidden_cost = (static_cast<std::int64_t>(n) + 1) * kScale;
  std::vector<std::int64_t> cost(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int p = 0; p < n; ++p) {
      cost[static_cast<std::size_t>(a) * n + p] =
          problem.Allowed(a, p) ? kScale - inst.similarity(a, p).micros()
                                : forbidden_cost;
    }
  }
  const auto match = MinCostPerfectMatching(cost, n);
  Solution solution;
  std::vector<ReviewPair> pairs;
  for (int a = 0; a < n; ++a) {
    if (!problem.Allowed(a, match[a])) {
      Fail(ErrorCode::kInfeasible,
           "no perfect matching avoids forbidden pairs (agent " +
               std::to_string(a) + " has no admissible submission left)");
    }
    pairs.push_back({a, match[a]});
    solution.value += inst.similarity(a, match[a]);
  }
  solution.assignment = Assignment::FromPairs(std::move(pairs));
  return solution;
}

// Unconstrained optimum of an instance (Opt_S).
inline Solution SolveUnconstrained(const Instance& instance) {
  return SolveMaxSimilarity(AssignmentProblem(instance));
}

// Optimum among assignments respecting `partition`.
inline Solution SolveRespecting(const Instance& instance,
                                const Partition& partition) {
  AssignmentProblem problem(instance);
  problem.RespectPartition(partition);
  return SolveMaxSimilarity(problem);
}

}  // namespace sppart

#endif  // SPPART_SOLVER_HPP_
