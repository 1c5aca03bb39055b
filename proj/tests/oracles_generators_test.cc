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

#include <gtest/gtest.h>

#include <functional>

#include "sppart/generators.hpp"
#include "sppart/oracles.hpp"
#include "sppart/partition_algos.hpp"
#include "test_util.hpp"

namespace sppart {
namespace {

using testing::S;

int CountOnes(const Instance& inst) {
  int ones = 0;
  for (auto s : inst.similarities()) {
    EXPECT_TRUE(s == Similarity() || s == Similarity::FromInt(1));
    ones += s == Similarity::FromInt(1);
  }
  return ones;
}

void ExpectErrorCode(ErrorCode code, const std::function<void()>& body) {
  try {
    body();
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(GenTheorem2Test, TwoThreeCycles) {
  const auto inst = GenTheorem2(6, 1);
  EXPECT_EQ(CountOnes(inst), 6);
  for (int i = 0; i < 6; ++i) {
    const int next = (i / 3) * 3 + (i % 3 + 1) % 3;
    EXPECT_EQ(inst.similarity(i, next), Similarity::FromInt(1));
  }
  EXPECT_EQ(SolveUnconstrained(inst).value, Similarity::FromInt(6));
}

TEST(GenTheorem2Test, SingleGroupLoadTwo) {
  const auto inst = GenTheorem2(5, 2);
  EXPECT_EQ(CountOnes(inst), 10);
  EXPECT_EQ(SolveUnconstrained(inst).value, Similarity::FromInt(10));
  // Padded by one zero agent for an even count: the best bipartition keeps
  // k(k+1) = 6 of the group's unit pairs.
  EXPECT_EQ(BruteForcePartitionOpt(PadWithDummies(inst, 1), 2).value,
            Similarity::FromInt(6));
}

TEST(GenTheorem2Test, LeftoverAgentBreaksOneCycle) {
  const auto inst = GenTheorem2(7, 1);
  EXPECT_EQ(CountOnes(inst), 6);
  for (int j = 0; j < 7; ++j) {
    EXPECT_EQ(inst.similarity(6, j), Similarity());
    EXPECT_EQ(inst.similarity(j, 6), Similarity());
  }
  EXPECT_EQ(SolveUnconstrained(inst).value, Similarity::FromInt(5));
  EXPECT_EQ(BruteForceAssignmentOpt(inst), Similarity::FromInt(5));
}

TEST(GenTheorem2Test, OptimumFormulaOnCompleteGroups) {
  for (int k = 1; k <= 3; ++k) {
    for (int groups = 1; groups <= 3; ++groups) {
      const int n = (2 * k + 1) * groups;
      EXPECT_EQ(SolveUnconstrained(GenTheorem2(n, k)).value,
                Similarity::FromInt(k * (2 * k + 1) * groups))
          << k << " " << groups;
    }
  }
}

TEST(GenTheorem2Test, PartitionOracleMeetsBoundPerGroup) {
  for (int k = 1; k <= 2; ++k) {
    const int n = 2 * k + 1;
    const auto inst = PadWithDummies(GenTheorem2(n, k), 1);
    EXPECT_EQ(BruteForcePartitionOpt(inst, k).value, Similarity::FromInt(k * (k + 1)));
  }
  EXPECT_EQ(BruteForcePartitionOpt(GenTheorem2(6, 1), 1).value, Similarity::FromInt(4));
}

TEST(GenTheorem2Test, TooFewAgents) {
  ExpectErrorCode(ErrorCode::kPrecondition, [] { GenTheorem2(4, 2); });
}

TEST(GenTheorem6Test, TwoThreeCycles) {
  const auto inst = GenTheorem6(6);
  EXPECT_EQ(CountOnes(inst), 6);
  EXPECT_EQ(MaxMinOpt(inst), Similarity::FromInt(1));
  EXPECT_EQ(BruteForcePartitionMaxMin(inst), Similarity());
}

TEST(GenTheorem6Test, EightAgentsSplitThreeAndFive) {
  const auto inst = GenTheorem6(8);
  EXPECT_EQ(CountOnes(inst), 8);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(inst.similarity(i, (i + 1) % 3), Similarity::FromInt(1));
  for (int i = 3; i < 8; ++i) {
    EXPECT_EQ(inst.similarity(i, i == 7 ? 3 : i + 1), Similarity::FromInt(1));
  }
  EXPECT_EQ(MaxMinOpt(inst), Similarity::FromInt(1));
  EXPECT_EQ(BruteForcePartitionMaxMin(inst), Similarity());
}

TEST(GenTheorem6Test, OddOrSmallRejected) {
  ExpectErrorCode(ErrorCode::kPrecondition, [] { GenTheorem6(7); });
  ExpectErrorCode(ErrorCode::kPrecondition, [] { GenTheorem6(4); });
}

TEST(GenRandomTest, DeterministicPerSeed) {
  EXPECT_EQ(GenRandom(10, 2, 17).similarities(), GenRandom(10, 2, 17).similarities());
  EXPECT_NE(GenRandom(10, 2, 17).similarities(), GenRandom(10, 2, 18).similarities());
}

TEST(GenRandomTest, UniformRange) {
  const auto inst = GenRandom(12, 1, 3);
  for (auto s : inst.similarities()) {
    EXPECT_GE(s, Similarity());
    EXPECT_LE(s, Similarity::FromInt(1));
  }
}

TEST(GenRandomTest, BinaryFamily) {
  const auto inst = GenRandom(10, 1, 4, Family::kBinary);
  const int ones = CountOnes(inst);
  EXPECT_GT(ones, 20);
  EXPECT_LT(ones, 80);
}

TEST(GenRandomTest, BothSolversAgree) {
  const auto inst = GenRandom(6, 1, 0);
  const AssignmentProblem problem(inst);
  EXPECT_EQ(SolveMaxSimilarity(problem).value, SolveK1Matching(problem).value);
  EXPECT_EQ(SolveMaxSimilarity(problem).value.micros(), 4328839);
}

TEST(GenRandomGeneralTest, FeasibleAndDeterministic) {
  const auto a = GenRandomGeneral(10, 8, {3, 2}, 5);
  const auto b = GenRandomGeneral(10, 8, {3, 2}, 5);
  EXPECT_EQ(a.similarities(), b.similarities());
  EXPECT_EQ(a.AuthorshipPairs(), b.AuthorshipPairs());
  for (int p = 0; p < a.num_papers(); ++p) EXPECT_FALSE(a.authors_of(p).empty());
  EXPECT_NO_THROW(SolveUnconstrained(a));
}

TEST(GenerateTest, DispatchesFamilies) {
  EXPECT_EQ(Generate({Family::kTheorem2, 6, 1, 0}).similarities(),
            GenTheorem2(6, 1).similarities());
  EXPECT_EQ(Generate({Family::kUniform, 8, 2, 3}).similarities(),
            GenRandom(8, 2, 3).similarities());
  EXPECT_EQ(ParseFamily("binary-random"), Family::kBinary);
  EXPECT_EQ(ParseFamily("theorem6"), Family::kTheorem6);
  ExpectErrorCode(ErrorCode::kPrecondition, [] { ParseFamily("nope"); });
}

TEST(AssignmentOracleTest, Examples) {
  EXPECT_EQ(BruteForceAssignmentOpt(
                testing::EdgeInstance(3, 1, {{{0, 1}, "1"}, {{1, 2}, "1"}, {{2, 0}, "1"}})),
            Similarity::FromInt(3));
  EXPECT_EQ(BruteForceAssignmentOpt(testing::Uniform(4, 1, "0.5")), Similarity::FromInt(2));
  const auto inst = GenRandom(6, 2, 7);
  EXPECT_EQ(BruteForceAssignmentOpt(inst), SolveUnconstrained(inst).value);
  EXPECT_EQ(BruteForceAssignmentOpt(inst).micros(), 9219168);
}

TEST(AssignmentOracleTest, MatchesSolverOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int k = 1 + static_cast<int>(seed % 2);
    const int n = k + 2 + static_cast<int>(seed % (8 - k - 1));
    const auto inst = GenRandom(n, k, seed);
    EXPECT_EQ(BruteForceAssignmentOpt(inst), SolveUnconstrained(inst).value) << seed;
  }
}

TEST(AssignmentOracleTest, SizeGuards) {
  ExpectErrorCode(ErrorCode::kPrecondition, [] { BruteForceAssignmentOpt(GenRandom(9, 1, 0)); });
  ExpectErrorCode(ErrorCode::kPrecondition, [] { BruteForceAssignmentOpt(GenRandom(8, 3, 0)); });
}

TEST(MaxMinOracleTest, UniformAndPartitioned) {
  EXPECT_EQ(MaxMinOpt(testing::Uniform(4, 1, "0.3")), S("0.3"));
  const auto inst = GenTheorem6(6);
  const auto p = Partition::FromSubsets(6, {{0, 2, 4}, {1, 3, 5}});
  EXPECT_EQ(MaxMinOpt(inst, &p), Similarity());
}

TEST(PartitionOracleTest, TwoAgents) {
  const auto inst = testing::Uniform(2, 1, "0.4");
  const auto r = BruteForcePartitionOpt(inst, 1);
  EXPECT_EQ(r.value, S("0.8"));
  EXPECT_EQ(r.partitions_evaluated, 1);
}

TEST(PartitionOracleTest, CountsCanonicalBipartitions) {
  EXPECT_EQ(BruteForcePartitionOpt(GenRandom(6, 1, 1), 1).partitions_evaluated, 10);
  EXPECT_EQ(BruteForcePartitionOpt(GenRandom(8, 1, 1), 1).partitions_evaluated, 35);
}

TEST(PartitionOracleTest, RandomInstancesAgainstAlgorithms) {
  const auto r8k1 = GenRandom(8, 1, 2);
  const auto oracle1 = BruteForcePartitionOpt(r8k1, 1);
  EXPECT_EQ(oracle1.value.micros(), 6636753);
  EXPECT_TRUE(Validate(r8k1, oracle1.assignment, &oracle1.partition).ok());

  const auto r8k2 = GenRandom(8, 2, 6);
  const auto oracle2 = BruteForcePartitionOpt(r8k2, 2);
  EXPECT_EQ(oracle2.value.micros(), 11444874);
  EXPECT_GE(oracle2.value, ColoringPartition(r8k2, 2).value);
  EXPECT_LE(oracle2.value, MultiPartition(r8k2, 2).value);
}

TEST(PartitionOracleTest, SizeGuardMentionsHardness) {
  try {
    BruteForcePartitionOpt(GenRandom(16, 1, 0), 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
    EXPECT_NE(std::string(e.what()).find("NP-hard"), std::string::npos);
  }
}

}  // namespace
}  // namespace sppart
