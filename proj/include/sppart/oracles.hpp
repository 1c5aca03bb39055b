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

#ifndef SPPART_ORACLES_HPP_
#define SPPART_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "sppart/core.hpp"
#include "sppart/error.hpp"
#include "sppart/similarity.hpp"
#include "sppart/solver.hpp"

namespace sppart {

inline constexpr int kMaxAssignmentOracleAgents = 8;
inline constexpr int kMaxAssignmentOracleLoad = 2;
inline constexpr int kMaxMaxMinOracleAgents = 10;
inline constexpr int kMaxPartitionOracleAgents = 14;

namespace detail {

// Exhaustive search over assignments, submission by submission: each
// submission picks k_p reviewers among agents with capacity left.
// Memoized on (submission, remaining capacity of every agent), which is
// exact because the best completion does not depend on earlier choices.
// `combine(paper_total, rest)` folds one submission into the objective:
// addition for total similarity, min for the max-min objective.
template <typename Combine>
class CapacityDp {
 public:
  static constexpr std::int64_t kInfeasible = std::numeric_limits<std::int64_t>::min();

  CapacityDp(const Instance& instance, const Partition* partition,
             Combine combine, std::int64_t empty_value)
      : instance_(instance),
        partition_(partition),
        combine_(combine),
        empty_value_(empty_value),
        base_(instance.loads().agent + 1) {
    const int n = instance.num_agents();
    place_.resize(n);
    std::uint64_t place = 1;
    for (int a = 0; a < n; ++a) {
      place_[a] = place;
      place *= base_;
    }
    states_ = place;
    memo_.assign(static_cast<std::size_t>(instance.num_papers()) * states_,
                 kUnknown);
    start_ = 0;
    for (int a = 0; a < n; ++a) {
      if (instance.eligible(a)) start_ += place_[a] * instance.loads().agent;
    }
  }

  std::int64_t Solve() { return Best(0, start_); }

 private:
  static constexpr std::int64_t kUnknown = kInfeasible + 1;

  bool Allowed(int agent, int paper) const {
    if (!instance_.eligible(agent) || instance_.is_author(agent, paper)) {
      return false;
    }
    return partition_ == nullptr ||
           partition_->agent_subset[agent] != partition_->PaperSubset(paper);
  }

  int Capacity(std::uint64_t state, int agent) const {
    return static_cast<int>(state / place_[agent] % base_);
  }

  std::int64_t Best(int paper, std::uint64_t state) {
    if (paper == instance_.num_papers()) return empty_value_;
    auto& slot = memo_[static_cast<std::size_t>(paper) * states_ + state];
    if (slot != kUnknown) return slot;
    std::vector<int> candidates;
    for (int a = 0; a < instance_.num_agents(); ++a) {
      if (Capacity(state, a) > 0 && Allowed(a, paper)) candidates.push_back(a);
    }
    std::int64_t best = kInfeasible;
    const int need = instance_.loads().paper;
    std::vector<int> pick;
    auto choose = [&](auto&& self, std::size_t from, std::int64_t total,
                      std::uint64_t next) -> void {
      if (static_cast<int>(pick.size()) == need) {
        const std::int64_t rest = Best(paper + 1, next);
        if (rest != kInfeasible) best = std::max(best, combine_(total, rest));
        return;
      }
      for (std::size_t i = from; i < candidates.size(); ++i) {
        const int a = candidates[i];
        pick.push_back(a);
        self(self, i + 1, total + instance_.similarity(a, paper).micros(),
             next - place_[a]);
        pick.pop_back();
      }
    };
    choose(choose, 0, 0, state);
    slot = best;
    return best;
  }

  const Instance& instance_;
  const Partition* partition_;
  Combine combine_;
  std::int64_t empty_value_;
  std::uint64_t base_;
  std::vector<std::uint64_t> place_;
  std::uint64_t states_ = 1;
  std::uint64_t start_ = 0;
  std::vector<std::int64_t> memo_;
};

inline void GuardSize(bool ok, const std::string& what) {
  if (!ok) Fail(ErrorCode::kPrecondition, what);
}

}  // namespace detail

// Exact optimum of the unconstrained assignment problem by exhaustive
// search; independent of the flow solver.
inline Similarity BruteForceAssignmentOpt(const Instance& instance) {
  detail::GuardSize(instance.num_agents() <= kMaxAssignmentOracleAgents &&
                        instance.num_papers() <= kMaxAssignmentOracleAgents &&
                        instance.loads().agent <= kMaxAssignmentOracleLoad &&
                        instance.loads().paper <= kMaxAssignmentOracleLoad,
                    "assignment oracle is limited to 8 agents and loads <= 2");
  detail::CapacityDp dp(
      instance, nullptr,
      [](std::int64_t a, std::int64_t b) { return a + b; }, 0);
  const auto best = dp.Solve();
  if (best == dp.kInfeasible) {
    Fail(ErrorCode::kInfeasible, "no feasible assignment exists");
  }
  return Similarity::FromMicros(best);
}

// Exact best max-min value (smallest per-submission similarity total),
// optionally among assignments respecting `partition`.
inline Similarity MaxMinOpt(const Instance& instance,
                            const Partition* partition = nullptr) {
  detail::GuardSize(instance.num_agents() <= kMaxMaxMinOracleAgents &&
                        instance.num_papers() <= kMaxMaxMinOracleAgents &&
                        instance.loads().agent <= kMaxAssignmentOracleLoad &&
                        instance.loads().paper <= kMaxAssignmentOracleLoad,
                    "max-min oracle is limited to 10 agents and loads <= 2");
  detail::CapacityDp dp(
      instance, partition,
      [](std::int64_t a, std::int64_t b) { return std::min(a, b); },
      std::numeric_limits<std::int64_t>::max());
  const auto best = dp.Solve();
  if (best == dp.kInfeasible) {
    Fail(ErrorCode::kInfeasible, "no feasible assignment exists");
  }
  return Similarity::FromMicros(best);
}

struct PartitionOracleResult {
  Partition partition;
  Assignment assignment;
  Similarity value;
  int partitions_evaluated = 0;
  int partitions_infeasible = 0;
};

namespace detail {

// Calls visit(partition) for every balanced bipartition with agent 0 in
// the first subset, in increasing bitmask order of the first subset.
template <typename Visit>
void ForEachBalancedBipartition(int n, Visit visit) {
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    if (std::popcount(mask) != n / 2) continue;
    Partition partition;
    partition.agent_subset.resize(n);
    for (int a = 0; a < n; ++a) partition.agent_subset[a] = (mask >> a & 1) ? 0 : 1;
    visit(partition);
  }
}

inline void GuardPartitionOracle(const Instance& instance) {
  Require(instance.one_to_one(), "partition oracle needs one-to-one mode");
  GuardSize(instance.num_agents() <= kMaxPartitionOracleAgents,
            "exhaustive partition search is limited to n <= 14 agents (" +
                std::to_string(instance.num_agents()) +
                " given); finding the optimal partition is NP-hard");
  Require(instance.num_agents() % 2 == 0,
          "balanced bipartitions need an even number of agents");
}

}  // namespace detail

// Instance-wise optimal strategyproof-via-partitioning assignment: the best
// constrained optimum over all balanced bipartitions. Ties keep the first
// partition found.
inline PartitionOracleResult BruteForcePartitionOpt(const Instance& instance,
                                                    int k) {
  const Instance working = instance.k() == k ? instance : instance.WithK(k);
  detail::GuardPartitionOracle(working);
  PartitionOracleResult best;
  bool found = false;
  detail::ForEachBalancedBipartition(working.num_agents(), [&](const Partition& p) {
    ++best.partitions_evaluated;
    try {
      auto solution = SolveRespecting(working, p);
      if (!found || best.value < solution.value) {
        found = true;
        best.partition = p;
        best.assignment = std::move(solution.assignment);
        best.value = solution.value;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasible) throw;
      ++best.partitions_infeasible;
    }
  });
  if (!found) Fail(ErrorCode::kInfeasible, "no balanced bipartition is feasible");
  return best;
}

// Largest max-min value achievable under any balanced bipartition.
inline Similarity BruteForcePartitionMaxMin(const Instance& instance) {
  detail::GuardPartitionOracle(instance);
  bool found = false;
  Similarity best;
  detail::ForEachBalancedBipartition(instance.num_agents(), [&](const Partition& p) {
    try {
      const Similarity v = MaxMinOpt(instance, &p);
      if (!found || best < v) best = v;
      found = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasible) throw;
    }
  });
  if (!found) Fail(ErrorCode::kInfeasible, "no balanced bipartition is feasible");
  return best;
}

}  // namespace sppart

#endif  // SPPART_ORACLES_HPP_
