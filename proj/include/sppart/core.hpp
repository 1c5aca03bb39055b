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

#ifndef SPPART_CORE_HPP_
#define SPPART_CORE_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sppart/error.hpp"
#include "sppart/similarity.hpp"

namespace sppart {

struct Loads {
  int agent = 1;  // k_a: reviews per agent (exact in one-to-one mode)
  int paper = 1;  // k_p: reviewers per submission
};

// Agents, submissions, the similarity matrix and the authorship relation.
//
// In one-to-one mode there are as many submissions as agents, agent i
// authors submission i, and both loads equal k. In general mode authorship
// is an arbitrary relation in which every submission has at least one
// author, and an agent reviews at most k_a submissions.
//
// Instances are immutable once built; the factories validate every
// invariant and throw on violation.
class Instance {
 public:
  static Instance OneToOne(int n, int k, std::vector<Similarity> similarity) {
    Instance inst;
    inst.one_to_one_ = true;
    inst.num_agents_ = n;
    inst.num_papers_ = n;
    inst.loads_ = {k, k};
    inst.similarity_ = std::move(similarity);
    inst.papers_of_.resize(n);
    inst.authors_of_.resize(n);
    for (int i = 0; i < n; ++i) {
      inst.papers_of_[i] = {i};
      inst.authors_of_[i] = {i};
    }
    inst.eligible_.assign(n, true);
    inst.Check();
    return inst;
  }

  static Instance General(int num_agents, int num_papers,
                          std::vector<Similarity> similarity,
                          const std::vector<std::pair<int, int>>& authorship,
                          Loads loads) {
    Instance inst;
    inst.one_to_one_ = false;
    inst.num_agents_ = num_agents;
    inst.num_papers_ = num_papers;
    inst.loads_ = loads;
    inst.similarity_ = std::move(similarity);
    inst.papers_of_.resize(std::max(num_agents, 0));
    inst.authors_of_.resize(std::max(num_papers, 0));
    for (const auto& [agent, paper] : authorship) {
      Require(agent >= 0 && agent < num_agents && paper >= 0 &&
                  paper < num_papers,
              "authorship pair (" + std::to_string(agent) + "," +
                  std::to_string(paper) + ") out of range");
      inst.papers_of_[agent].push_back(paper);
      inst.authors_of_[paper].push_back(agent);
    }
    for (auto& v : inst.papers_of_) Dedup(v);
    for (auto& v : inst.authors_of_) Dedup(v);
    inst.eligible_.assign(std::max(num_agents, 0), true);
    inst.Check();
    return inst;
  }

  int num_agents() const { return num_agents_; }
  int num_papers() const { return num_papers_; }
  bool one_to_one() const { return one_to_one_; }
  Loads loads() const { return loads_; }
  // Common load in one-to-one mode.
  int k() const { return loads_.paper; }

  Similarity similarity(int agent, int paper) const {
    return similarity_[static_cast<std::size_t>(agent) * num_papers_ + paper];
  }
  const std::vector<Similarity>& similarities() const { return similarity_; }

  const std::vector<int>& papers_of(int agent) const {
    return papers_of_[agent];
  }
  const std::vector<int>& authors_of(int paper) const {
    return authors_of_[paper];
  }
  bool is_author(int agent, int paper) const {
    if (one_to_one_) return agent == paper;
    const auto& p = papers_of_[agent];
    return std::binary_search(p.begin(), p.end(), paper);
  }
  // Agents removed from the reviewer pool keep their authorship but may not
  // be assigned reviews.
  bool eligible(int agent) const { return eligible_[agent]; }
  int num_eligible() const {
    return static_cast<int>(std::count(eligible_.begin(), eligible_.end(), true));
  }

  std::vector<std::pair<int, int>> AuthorshipPairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < num_agents_; ++a) {
      for (int p : papers_of_[a]) out.emplace_back(a, p);
    }
    return out;
  }

  // Same instance with different loads. One-to-one instances take a single
  // k; both fields must then agree.
  Instance WithLoads(Loads loads) const {
    Instance copy = *this;
    copy.loads_ = loads;
    copy.Check();
    return copy;
  }
  Instance WithK(int k) const { return WithLoads({k, k}); }

  Instance WithEligibility(std::vector<bool> eligible) const {
    Require(static_cast<int>(eligible.size()) == num_agents_,
            "eligibility vector has wrong length");
    Instance copy = *this;
    copy.eligible_ = std::move(eligible);
    copy.Check();
    return copy;
  }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance() = default;

  static void Dedup(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  void Check() const {
    Require(num_agents_ >= 1 && num_papers_ >= 1,
            "instance needs at least one agent and one submission");
    Require(similarity_.size() ==
                static_cast<std::size_t>(num_agents_) * num_papers_,
            "similarity matrix has " + std::to_string(similarity_.size()) +
                " entries, expected " +
                std::to_string(static_cast<std::int64_t>(num_agents_) *
                               num_papers_));
    for (std::size_t i = 0; i < similarity_.size(); ++i) {
      const auto s = similarity_[i].micros();
      Require(s >= 0 && s <= kScale,
              "similarity of agent " + std::to_string(i / num_papers_) +
                  ", submission " + std::to_string(i % num_papers_) +
                  " outside [0,1]");
    }
    Require(loads_.agent >= 1 && loads_.paper >= 1, "loads must be positive");
    if (one_to_one_) {
      Require(num_agents_ == num_papers_,
              "one-to-one mode needs as many agents as submissions");
      Require(loads_.agent == loads_.paper,
              "one-to-one mode needs k_a == k_p");
    } else {
      for (int p = 0; p < num_papers_; ++p) {
        Require(!authors_of_[p].empty(),
                "submission " + std::to_string(p) + " has no author");
      }
    }
    const std::int64_t supply =
        static_cast<std::int64_t>(num_eligible()) * loads_.agent;
    const std::int64_t demand =
        static_cast<std::int64_t>(num_papers_) * loads_.paper;
    if (supply < demand) {
      Fail(ErrorCode::kInfeasible,
           "review supply " + std::to_string(supply) + " (eligible agents x k_a)"
           " is below demand " + std::to_string(demand) +
           " (submissions x k_p)");
    }
  }

  bool one_to_one_ = true;
  int num_agents_ = 0;
  int num_papers_ = 0;
  Loads loads_;
  std::vector<Similarity> similarity_;
  std::vector<std::vector<int>> papers_of_;
  std::vector<std::vector<int>> authors_of_;
  std::vector<bool> eligible_;
};

// Extends a one-to-one instance with `count` dummy agents (and their dummy
// submissions) whose similarities are all zero. Dummy indices follow the
// real ones.
inline Instance PadWithDummies(const Instance& instance, int count) {
  Require(instance.one_to_one(), "dummy padding needs one-to-one mode");
  Require(count >= 0, "negative dummy count");
  if (count == 0) return instance;
  const int n = instance.num_agents();
  const int padded = n + count;
  std::vector<Similarity> sims(static_cast<std::size_t>(padded) * padded);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      sims[static_cast<std::size_t>(i) * padded + j] =
          instance.similarity(i, j);
    }
  }
  return Instance::OneToOne(padded, instance.k(), std::move(sims));
}

struct ReviewPair {
  int agent = 0;
  int paper = 0;
  friend auto operator<=>(const ReviewPair&, const ReviewPair&) = default;
};

// A set of (agent, submission) review pairs, kept sorted.
struct Assignment {
  std::vector<ReviewPair> pairs;

  static Assignment FromPairs(std::vector<ReviewPair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    return Assignment{std::move(pairs)};
  }

  std::size_t size() const { return pairs.size(); }
  bool Contains(int agent, int paper) const {
    return std::binary_search(pairs.begin(), pairs.end(),
                              ReviewPair{agent, paper});
  }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Partition of the agents into subsets, stored as one subset label per
// agent (-1 = not covered). A two-subset partition is a bipartition; the
// multi-partition algorithm produces 2k+1 subsets.
//
// In one-to-one mode a submission belongs to its author's subset and
// `paper_subset` stays empty. In general mode submissions carry their own
// labels, derived from the authorship component they sit in.
struct Partition {
  int num_subsets = 2;
  std::vector<int> agent_subset;
  std::vector<int> paper_subset;

  static Partition FromSubsets(int num_agents,
                               const std::vector<std::vector<int>>& subsets) {
    Partition p;
    p.num_subsets = static_cast<int>(subsets.size());
    p.agent_subset.assign(num_agents, -1);
    for (int s = 0; s < p.num_subsets; ++s) {
      for (int a : subsets[s]) {
        Require(a >= 0 && a < num_agents,
                "partition member " + std::to_string(a) + " out of range");
        Require(p.agent_subset[a] == -1,
                "agent " + std::to_string(a) + " listed in two subsets");
        p.agent_subset[a] = s;
      }
    }
    return p;
  }

  int PaperSubset(int paper) const {
    return paper_subset.empty() ? agent_subset[paper] : paper_subset[paper];
  }

  std::vector<std::vector<int>> Subsets() const {
    std::vector<std::vector<int>> out(num_subsets);
    for (int a = 0; a < static_cast<int>(agent_subset.size()); ++a) {
      const int s = agent_subset[a];
      if (s >= 0 && s < num_subsets) out[s].push_back(a);
    }
    return out;
  }

  std::vector<int> SubsetSizes() const {
    std::vector<int> sizes(num_subsets, 0);
    for (int s : agent_subset) {
      if (s >= 0 && s < num_subsets) ++sizes[s];
    }
    return sizes;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

namespace detail {

inline void CheckPairIndex(const Instance& instance, const ReviewPair& pair) {
  if (pair.agent < 0 || pair.agent >= instance.num_agents() ||
      pair.paper < 0 || pair.paper >= instance.num_papers()) {
    Fail(ErrorCode::kInvalidAssignment,
         "pair (" + std::to_string(pair.agent) + "," +
             std::to_string(pair.paper) + ") outside a " +
             std::to_string(instance.num_agents()) + "x" +
             std::to_string(instance.num_papers()) + " instance");
  }
}

}  // namespace detail

inline Similarity TotalSimilarity(const Instance& instance,
                                  const Assignment& assignment) {
  Similarity total;
  for (const auto& pair : assignment.pairs) {
    detail::CheckPairIndex(instance, pair);
    total += instance.similarity(pair.agent, pair.paper);
  }
  return total;
}

// Per-submission assigned similarity.
inline std::vector<Similarity> PaperSimilarities(const Instance& instance,
                                                 const Assignment& assignment) {
  std::vector<Similarity> per_paper(instance.num_papers());
  for (const auto& pair : assignment.pairs) {
    detail::CheckPairIndex(instance, pair);
    per_paper[pair.paper] += instance.similarity(pair.agent, pair.paper);
  }
  return per_paper;
}

// Minimum over submissions of the similarity assigned to it. Only the first
// `paper_count` submissions are considered when given (used to skip dummy
// submissions added by padding).
inline Similarity MaxMinValue(const Instance& instance,
                              const Assignment& assignment,
                              std::optional<int> paper_count = std::nullopt) {
  const auto per_paper = PaperSimilarities(instance, assignment);
  const int limit = paper_count.value_or(instance.num_papers());
  Similarity lowest = Similarity::FromMicros(INT64_MAX);
  for (int p = 0; p < limit; ++p) lowest = std::min(lowest, per_paper[p]);
  return lowest;
}

enum class ViolationKind {
  kIndexOutOfRange,
  kDuplicatePair,
  kSelfReview,
  kIneligibleReviewer,
  kPaperLoad,
  kAgentLoad,
  kPartitionCoverage,
  kPartitionBalance,
  kAuthorshipSplit,
  kSameSubset,
};

inline const char* ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kIndexOutOfRange:
      return "index-out-of-range";
    case ViolationKind::kDuplicatePair:
      return "duplicate-pair";
    case ViolationKind::kSelfReview:
      return "self-review";
    case ViolationKind::kIneligibleReviewer:
      return "ineligible-reviewer";
    case ViolationKind::kPaperLoad:
      return "paper-load";
    case ViolationKind::kAgentLoad:
      return "agent-load";
    case ViolationKind::kPartitionCoverage:
      return "partition-coverage";
    case ViolationKind::kPartitionBalance:
      return "partition-balance";
    case ViolationKind::kAuthorshipSplit:
      return "authorship-split";
    case ViolationKind::kSameSubset:
      return "same-subset";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct Verdict {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  int Count(ViolationKind kind) const {
    return static_cast<int>(
        std::count_if(violations.begin(), violations.end(),
                      [&](const Violation& v) { return v.kind == kind; }));
  }
};

// Lists every violated constraint: load counts, self-review, duplicate
// pairs, and, when a partition is supplied, its coverage/balance and every
// review pair whose agent and submission fall in the same subset.
inline Verdict Validate(const Instance& instance, const Assignment& assignment,
                        const Partition* partition = nullptr) {
  Verdict verdict;
  auto add = [&](ViolationKind kind, std::string detail) {
    verdict.violations.push_back({kind, std::move(detail)});
  };
  auto pair_text = [](const ReviewPair& p) {
    return "(" + std::to_string(p.agent) + "," + std::to_string(p.paper) + ")";
  };

  const int n = instance.num_agents();
  const int m = instance.num_papers();
  const Loads loads = instance.loads();

  bool partition_usable = false;
  if (partition != nullptr) {
    partition_usable = true;
    if (static_cast<int>(partition->agent_subset.size()) != n) {
      add(ViolationKind::kPartitionCoverage,
          "partition labels " + std::to_string(partition->agent_subset.size()) +
              " agents, instance has " + std::to_string(n));
      partition_usable = false;
    } else {
      for (int a = 0; a < n; ++a) {
        const int s = partition->agent_subset[a];
        if (s < 0 || s >= partition->num_subsets) {
          add(ViolationKind::kPartitionCoverage,
              "agent " + std::to_string(a) + " is not in any subset");
          partition_usable = false;
        }
      }
    }
    if (!instance.one_to_one()) {
      if (static_cast<int>(partition->paper_subset.size()) != m) {
        add(ViolationKind::kPartitionCoverage,
            "general-mode partition must label all " + std::to_string(m) +
                " submissions");
        partition_usable = false;
      } else {
        for (int p = 0; p < m; ++p) {
          const int s = partition->paper_subset[p];
          if (s < 0 || s >= partition->num_subsets) {
            add(ViolationKind::kPartitionCoverage,
                "submission " + std::to_string(p) + " is not in any subset");
            partition_usable = false;
          }
        }
      }
    }
    if (partition_usable && instance.one_to_one()) {
      const auto sizes = partition->SubsetSizes();
      const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
      const bool balanced = partition->num_subsets == 2 ? *lo == *hi
                                                        : *hi - *lo <= 1;
      if (!balanced) {
        add(ViolationKind::kPartitionBalance,
            "subset sizes range from " + std::to_string(*lo) + " to " +
                std::to_string(*hi));
      }
    }
    if (partition_usable && !instance.one_to_one()) {
      for (int a = 0; a < n; ++a) {
        if (!instance.eligible(a)) continue;
        for (int p : instance.papers_of(a)) {
          if (partition->paper_subset[p] != partition->agent_subset[a]) {
            add(ViolationKind::kAuthorshipSplit,
                "reviewer " + std::to_string(a) + " and their submission " +
                    std::to_string(p) + " are in different subsets");
          }
        }
      }
    }
  }

  std::vector<int> agent_count(n, 0);
  std::vector<int> paper_count(m, 0);
  std::vector<ReviewPair> sorted = assignment.pairs;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& pair = sorted[i];
    if (pair.agent < 0 || pair.agent >= n || pair.paper < 0 ||
        pair.paper >= m) {
      add(ViolationKind::kIndexOutOfRange, pair_text(pair));
      continue;
    }
    if (i > 0 && sorted[i - 1] == pair) {
      add(ViolationKind::kDuplicatePair, pair_text(pair));
    }
    ++agent_count[pair.agent];
    ++paper_count[pair.paper];
    if (instance.is_author(pair.agent, pair.paper)) {
      add(ViolationKind::kSelfReview, pair_text(pair));
    }
    if (!instance.eligible(pair.agent)) {
      add(ViolationKind::kIneligibleReviewer, pair_text(pair));
    }
    if (partition_usable && partition->agent_subset[pair.agent] ==
                                partition->PaperSubset(pair.paper)) {
      add(ViolationKind::kSameSubset, pair_text(pair));
    }
  }
  for (int p = 0; p < m; ++p) {
    if (paper_count[p] != loads.paper) {
      add(ViolationKind::kPaperLoad,
          "submission " + std::to_string(p) + " has " +
              std::to_string(paper_count[p]) + " reviewers, needs " +
              std::to_string(loads.paper));
    }
  }
  for (int a = 0; a < n; ++a) {
    const bool bad = instance.one_to_one() ? agent_count[a] != loads.agent
                                           : agent_count[a] > loads.agent;
    if (bad) {
      add(ViolationKind::kAgentLoad,
          "agent " + std::to_string(a) + " has " +
              std::to_string(agent_count[a]) + " reviews, load " +
              std::to_string(loads.agent));
    }
  }
  return verdict;
}

// Quality summary of one assignment.
struct Report {
  Similarity total_similarity;
  Similarity opt_similarity;
  Fraction loss_fraction;
  Similarity maxmin_value;
  std::vector<int> subset_sizes;
};

// `real_papers` restricts the max-min value to non-dummy submissions.
inline Report MakeReport(const Instance& instance, const Assignment& assignment,
                         Similarity opt, const Partition* partition,
                         std::optional<int> real_papers = std::nullopt) {
  Report r;
  r.total_similarity = TotalSimilarity(instance, assignment);
  r.opt_similarity = opt;
  r.loss_fraction =
      opt.micros() > 0
          ? Fraction::Of(opt.micros() - r.total_similarity.micros(),
                         opt.micros())
          : Fraction{0, 1};
  r.maxmin_value = MaxMinValue(instance, assignment, real_papers);
  if (partition != nullptr) r.subset_sizes = partition->SubsetSizes();
  return r;
}

}  // namespace sppart

#endif  // SPPART_CORE_HPP_
