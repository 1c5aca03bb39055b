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
#include "sppart/io.hpp"
#include "test_util.hpp"

namespace sppart {
namespace {

using testing::S;

std::string ParseMessage(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "no parse error";
  return "";
}

TEST(SimilarityCsvTest, ParsesRows) {
  const auto sims = ParseSimilarityCsv("0,0.5\n1,0.25\n", 2, 2, "m.csv");
  EXPECT_EQ(sims, (std::vector<Similarity>{S("0"), S("0.5"), S("1"), S("0.25")}));
}

TEST(SimilarityCsvTest, AcceptsCrlfAndBlankLines) {
  const auto sims = ParseSimilarityCsv("0.1,0.2\r\n\r\n0.3,0.4\r\n", 2, 2, "m.csv");
  EXPECT_EQ(sims.size(), 4u);
  EXPECT_EQ(sims[3], S("0.4"));
}

TEST(SimilarityCsvTest, ShortRowIsPositional) {
  const auto msg = ParseMessage([] { ParseSimilarityCsv("0,1,0\n1,0\n0,0,1\n", 3, 3, "m.csv"); });
  EXPECT_NE(msg.find("m.csv:2:4:"), std::string::npos) << msg;
}

TEST(SimilarityCsvTest, LongRowPointsAtExtraField) {
  const auto msg = ParseMessage([] { ParseSimilarityCsv("0,1,0.5\n", 1, 2, "m.csv"); });
  EXPECT_NE(msg.find("m.csv:1:5:"), std::string::npos) << msg;
}

TEST(SimilarityCsvTest, BadValuesArePositional) {
  EXPECT_NE(ParseMessage([] { ParseSimilarityCsv("0,1.5\n", 1, 2, "m.csv"); }).find("m.csv:1:3:"),
            std::string::npos);
  EXPECT_NE(ParseMessage([] { ParseSimilarityCsv("0,x\n", 1, 2, "m.csv"); }).find("m.csv:1:3:"),
            std::string::npos);
  EXPECT_NE(ParseMessage([] { ParseSimilarityCsv("-0.1\n", 1, 1, "m.csv"); }).find("m.csv:1:1:"),
            std::string::npos);
  EXPECT_NE(ParseMessage([] {
              ParseSimilarityCsv("0.1234567\n", 1, 1, "m.csv");
            }).find("6 fractional digits"),
            std::string::npos);
}

TEST(SimilarityCsvTest, RowCountChecked) {
  ParseMessage([] { ParseSimilarityCsv("0,1\n", 2, 2, "m.csv"); });
  ParseMessage([] { ParseSimilarityCsv("0\n1\n", 1, 1, "m.csv"); });
}

TEST(AuthorshipTest, ParsesAndChecksRange) {
  EXPECT_EQ(ParseAuthorship("0,1\n2,0\n", 3, 2, "a.csv"),
            (std::vector<std::pair<int, int>>{{0, 1}, {2, 0}}));
  const auto msg = ParseMessage([] { ParseAuthorship("0,1\n3,0\n", 3, 2, "a.csv"); });
  EXPECT_NE(msg.find("a.csv:2:1:"), std::string::npos) << msg;
  const auto msg2 = ParseMessage([] { ParseAuthorship("0,5\n", 3, 2, "a.csv"); });
  EXPECT_NE(msg2.find("a.csv:1:3:"), std::string::npos) << msg2;
}

TEST(KeyValuesTest, RoundTripAndErrors) {
  const KeyValues kv = {{"b", "2"}, {"a", "x y"}};
  EXPECT_EQ(ParseKeyValues(FormatKeyValues(kv), "k"), kv);
  EXPECT_EQ(ParseKeyValues("# comment\nz=1\n", "k"), (KeyValues{{"z", "1"}}));
  EXPECT_NE(ParseMessage([] { ParseKeyValues("a=1\nnovalue\n", "k"); }).find("k:2:1:"),
            std::string::npos);
  EXPECT_NE(ParseMessage([] { ParseKeyValues("a=1\na=2\n", "k"); }).find("duplicate"),
            std::string::npos);
}

TEST(InstanceFileTest, OneToOneRoundTripIsByteIdentical) {
  testing::TempDir dir("io_one_to_one");
  const auto inst = GenRandom(7, 2, 11);
  const auto manifest = WriteInstance(inst, dir.path / "a");
  const auto back = ReadInstance(manifest);
  EXPECT_EQ(back.similarities(), inst.similarities());
  EXPECT_EQ(back.k(), 2);
  EXPECT_TRUE(back.one_to_one());
  WriteInstance(back, dir.path / "b");
  for (const char* f : {"instance.txt", "similarity.csv"}) {
    EXPECT_EQ(ReadFile(dir.path / "a" / f), ReadFile(dir.path / "b" / f)) << f;
  }
  EXPECT_FALSE(fs::exists(dir.path / "a" / "authorship.csv"));
  EXPECT_FALSE(fs::exists(dir.path / "a" / "instance.txt.tmp"));
}

TEST(InstanceFileTest, GeneralRoundTripIsByteIdentical) {
  testing::TempDir dir("io_general");
  const auto inst = GenRandomGeneral(9, 7, {3, 2}, 4, 2);
  const auto back = ReadInstance(WriteInstance(inst, dir.path / "a"));
  EXPECT_EQ(back.similarities(), inst.similarities());
  EXPECT_EQ(back.AuthorshipPairs(), inst.AuthorshipPairs());
  EXPECT_EQ(back.loads().agent, 3);
  EXPECT_EQ(back.loads().paper, 2);
  WriteInstance(back, dir.path / "b");
  for (const char* f : {"instance.txt", "similarity.csv", "authorship.csv"}) {
    EXPECT_EQ(ReadFile(dir.path / "a" / f), ReadFile(dir.path / "b" / f)) << f;
  }
}

TEST(InstanceFileTest, ManifestErrorsArePositional) {
  testing::TempDir dir("io_manifest");
  WriteFileAtomic(dir.path / "similarity.csv", "0,1\n1,0\n");
  auto parse = [&](const std::string& text) {
    return ParseMessage([&] { ParseInstance(text, "instance.txt", dir.path); });
  };
  const std::string good =
      "mode=one-to-one\nagents=2\npapers=2\nagent_load=1\npaper_load=1\n"
      "similarity=similarity.csv\n";
  EXPECT_EQ(ParseInstance(good, "instance.txt", dir.path).num_agents(), 2);
  EXPECT_NE(parse("mode=one-to-one\nagents=two\npapers=2\nagent_load=1\npaper_load=1\n"
                  "similarity=similarity.csv\n")
                .find("instance.txt:2:8:"),
            std::string::npos);
  EXPECT_NE(parse(good + "colour=red\n").find("instance.txt:7:1:"), std::string::npos);
  EXPECT_NE(parse("mode=sideways\n").find("instance.txt:1:"), std::string::npos);
  EXPECT_NE(parse("mode=one-to-one\nagents=2\n").find("missing key"), std::string::npos);
}

TEST(InstanceFileTest, MalformedMatrixSurfacesMatrixPosition) {
  testing::TempDir dir("io_bad_matrix");
  WriteFileAtomic(dir.path / "similarity.csv", "0,1\n1\n");
  const std::string manifest =
      "mode=one-to-one\nagents=2\npapers=2\nagent_load=1\npaper_load=1\n"
      "similarity=similarity.csv\n";
  const auto msg = ParseMessage([&] { ParseInstance(manifest, "instance.txt", dir.path); });
  EXPECT_NE(msg.find("similarity.csv:2:2:"), std::string::npos) << msg;
}

TEST(InstanceFileTest, MissingFileIsIoError) {
  try {
    ReadInstance("/nonexistent/dir/instance.txt");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(AssignmentFileTest, RoundTripWithDummyFlags) {
  const auto asg = Assignment::FromPairs({{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  const auto text = FormatAssignment(asg, 3, 3);
  EXPECT_EQ(text, "agent,paper,dummy\n0,1,0\n1,0,0\n2,3,1\n3,2,1\n");
  EXPECT_EQ(ParseAssignment(text, "x"), asg);
  EXPECT_EQ(FormatAssignment(ParseAssignment(text, "x"), 3, 3), text);
}

TEST(AssignmentFileTest, Errors) {
  EXPECT_NE(ParseMessage([] { ParseAssignment("a,b\n", "x.csv"); }).find("x.csv:1:1:"),
            std::string::npos);
  EXPECT_NE(ParseMessage([] { ParseAssignment("agent,paper,dummy\n0,1\n", "x.csv"); })
                .find("x.csv:2:1:"),
            std::string::npos);
  EXPECT_NE(ParseMessage([] { ParseAssignment("agent,paper,dummy\n0,q,0\n", "x.csv"); })
                .find("x.csv:2:3:"),
            std::string::npos);
}

TEST(LabelFileTest, RoundTrip) {
  const std::vector<int> labels = {0, 1, 1, 0, 2};
  EXPECT_EQ(ParseLabels(FormatLabels(labels), "p"), labels);
  EXPECT_EQ(FormatLabels(ParseLabels("0\n1\n", "p")), "0\n1\n");
  EXPECT_NE(ParseMessage([] { ParseLabels("0\n\n1\n", "p"); }).find("p:2:1:"),
            std::string::npos);
  EXPECT_NE(ParseMessage([] { ParseLabels("0\n-1\n", "p"); }).find("p:2:1:"),
            std::string::npos);
}

TEST(LabelFileTest, PartitionFromLabels) {
  const auto p = PartitionFromLabels({0, 2, 1});
  EXPECT_EQ(p.num_subsets, 3);
  EXPECT_EQ(PartitionFromLabels({0, 0}).num_subsets, 2);
  const auto g = PartitionFromLabels({0, 1}, {1, 1, 0});
  EXPECT_EQ(g.PaperSubset(2), 0);
}

TEST(OutcomeFileTest, RoundTrip) {
  const std::string text = "paper,decision,score\n0,oral,7.5\n3,reject,-1\n";
  const auto table = ParseOutcomes(text, "o.csv");
  EXPECT_EQ(table.by_paper.at(0).decision, "oral");
  EXPECT_EQ(table.by_paper.at(3).score_micros, -kScale);
  EXPECT_EQ(FormatOutcomes(table), text);
}

TEST(OutcomeFileTest, Errors) {
  EXPECT_NE(ParseMessage([] { ParseOutcomes("paper,score\n", "o.csv"); }).find("o.csv:1:1:"),
            std::string::npos);
  EXPECT_NE(ParseMessage([] {
              ParseOutcomes("paper,decision,score\n0,a,1\n0,b,2\n", "o.csv");
            }).find("listed twice"),
            std::string::npos);
  EXPECT_NE(ParseMessage([] { ParseOutcomes("paper,decision,score\n0,,1\n", "o.csv"); })
                .find("o.csv:2:3:"),
            std::string::npos);
  EXPECT_NE(ParseMessage([] { ParseOutcomes("paper,decision,score\n0,a,x\n", "o.csv"); })
                .find("o.csv:2:5:"),
            std::string::npos);
}

TEST(ValidationRoundTripTest, ReReadVerdictMatches) {
  testing::TempDir dir("io_verdict");
  const auto inst = GenRandom(8, 2, 3);
  auto asg = SolveUnconstrained(inst).assignment;
  asg.pairs.pop_back();
  const auto p = Partition::FromSubsets(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  const auto before = Validate(inst, asg, &p);
  WriteFileAtomic(dir.path / "assignment.csv", FormatAssignment(asg, 8, 8));
  WriteFileAtomic(dir.path / "partition.txt", FormatLabels(p.agent_subset));
  const auto asg2 = ParseAssignment(ReadFile(dir.path / "assignment.csv"), "assignment.csv");
  const auto p2 = PartitionFromLabels(
      ParseLabels(ReadFile(dir.path / "partition.txt"), "partition.txt"));
  const auto after = Validate(inst, asg2, &p2);
  ASSERT_EQ(before.violations.size(), after.violations.size());
  for (std::size_t i = 0; i < before.violations.size(); ++i) {
    EXPECT_EQ(before.violations[i].kind, after.violations[i].kind);
    EXPECT_EQ(before.violations[i].detail, after.violations[i].detail);
  }
  EXPECT_FALSE(after.ok());
}

}  // namespace
}  // namespace sppart
