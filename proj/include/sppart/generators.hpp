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

#ifndef SPPART_GENERATORS_HPP_
#define SPPART_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sppart/core.hpp"
#include "sppart/error.hpp"
#include "sppart/random.hpp"
#include "sppart/similarity.hpp"

namespace sppart {

enum class Family { kTheorem2, kTheorem6, kUniform, kBinary };

inline const char* FamilyName(Family family) {
  switch (family) {
    case Family::kTheorem2:
      return "theorem2";
    case Family::kTheorem6:
      return "theorem6";
    case Family::kUniform:
      return "uniform";
    case Family::kBinary:
      return "binary";
  }
  return "unknown";
}

inline Family ParseFamily(const std::string& name) {
  for (Family f : {Family::kTheorem2, Family::kTheorem6, Family::kUniform,
                   Family::kBinary}) {
    if (name == FamilyName(f)) return f;
  }
  if (name == "uniform-random") return Family::kUniform;
  if (name == "binary-random") return Family::kBinary;
  Fail(ErrorCode::kPrecondition, "unknown generator family '" + name + "'");
}

// Worst case for any partition: groups of 2k+1 agents, agent i of a group
// with similarity 1 to the next k submissions of its group (cyclically).
// Agents left over after the last full group have zero rows and columns.
inline Instance GenTheorem2(int n, int k) {
  Require(k >= 1, "k must be positive");
  Require(n >= 2 * k + 1, "theorem2 family needs n >= 2k+1");
  const int group = 2 * k + 1;
  std::vector<Similarity> sims(static_cast<std::size_t>(n) * n);
  for (int base = 0; base + group <= n; base += group) {
    for (int i = 0; i < group; ++i) {
      for (int j = 1; j <= k; ++j) {
        const int paper = base + (i + j) % group;
        sims[static_cast<std::size_t>(base + i) * n + paper] = Similarity::FromInt(1);
      }
    }
  }
  return Instance::OneToOne(n, k, std::move(sims));
}

// Two similarity-1 directed cycles of odd length (3 and n-3); zeros
// elsewhere. Every bipartition leaves some submission with similarity 0.
inline Instance GenTheorem6(int n, int k = 1) {
  Require(n >= 6 && n % 2 == 0, "theorem6 family needs even n >= 6");
  Require(k >= 1 && k < n, "k must lie in [1, n-1]");
  std::vector<Similarity> sims(static_cast<std::size_t>(n) * n);
  auto ring = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const int next = i + 1 < end ? i + 1 : begin;
      sims[static_cast<std::size_t>(i) * n + next] = Similarity::FromInt(1);
    }
  };
  ring(0, 3);
  ring(3, n);
  return Instance::OneToOne(n, k, std::move(sims));
}

// i.i.d. similarities on the 10^-6 grid of [0,1], or Bernoulli(1/2).
inline std::vector<Similarity> RandomSimilarities(std::size_t count,
                                                  Family family, Rng& rng) {
  Require(family == Family::kUniform || family == Family::kBinary,
          "random similarities need the uniform or binary family");
  std::vector<Similarity> sims(count);
  for (auto& s : sims) {
    s = family == Family::kUniform
            ? Similarity::FromMicros(static_cast<std::int64_t>(UniformBelow(rng, kScale + 1)))
            : Similarity::FromInt(static_cast<std::int64_t>(UniformBelow(rng, 2)));
  }
  return sims;
}

inline Instance GenRandom(int n, int k, std::uint64_t seed,
                          Family family = Family::kUniform) {
  Require(n >= 2, "random family needs n >= 2");
  Rng rng(seed);
  return Instance::OneToOne(
      n, k, RandomSimilarities(static_cast<std::size_t>(n) * n, family, rng));
}

// Random arbitrary authorship: every submission draws 1 to `max_authors`
// distinct authors uniformly; similarities are uniform.
inline Instance GenRandomGeneral(int num_agents, int num_papers, Loads loads,
                                 std::uint64_t seed, int max_authors = 1) {
  Require(num_agents >= 1 && num_papers >= 1, "need agents and submissions");
  Require(max_authors >= 1, "max_authors must be positive");
  Rng rng(seed);
  auto sims = RandomSimilarities(
      static_cast<std::size_t>(num_agents) * num_papers, Family::kUniform, rng);
  std::vector<std::pair<int, int>> authorship;
  for (int p = 0; p < num_papers; ++p) {
    const int want = 1 + static_cast<int>(UniformBelow(
                             rng, static_cast<std::uint64_t>(
                                      std::min(max_authors, num_agents))));
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < want) {
      const int a = static_cast<int>(UniformBelow(rng, num_agents));
      if (std::find(chosen.begin(), chosen.end(), a) == chosen.end()) {
        chosen.push_back(a);
        authorship.emplace_back(a, p);
      }
    }
  }
  return Instance::General(num_agents, num_papers, std::move(sims), authorship,
                           loads);
}

struct GeneratorSpec {
  Family family = Family::kUniform;
  int n = 0;
  int k = 1;
  std::uint64_t seed = 0;
};

inline Instance Generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::kTheorem2:
      return GenTheorem2(spec.n, spec.k);
    case Family::kTheorem6:
      return GenTheorem6(spec.n, spec.k);
    case Family::kUniform:
    case Family::kBinary:
      return GenRandom(spec.n, spec.k, spec.seed, spec.family);
  }
  Fail(ErrorCode::kPrecondition, "unknown generator family");
}

}  // namespace sppart

#endif  // SPPART_GENERATORS_HPP_
