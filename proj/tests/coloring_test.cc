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

#include <set>

#include "sppart/equitable_coloring.hpp"
#include "sppart/generators.hpp"
#include "sppart/solver.hpp"
#include "test_util.hpp"

namespace sppart {
namespace {

std::vector<std::vector<int>> RandomBoundedGraph(int n, int max_degree, int attempts,
                                                 Rng& rng) {
  std::vector<std::set<int>> adj(n);
  for (int t = 0; t < attempts; ++t) {
    const int u = static_cast<int>(UniformBelow(rng, n));
    const int v = static_cast<int>(UniformBelow(rng, n));
    if (u == v || adj[u].count(v)) continue;
    if (static_cast<int>(adj[u].size()) < max_degree &&
        static_cast<int>(adj[v].size()) < max_degree) {
      adj[u].insert(v);
      adj[v].insert(u);
    }
  }
  std::vector<std::vector<int>> out(n);
  for (int i = 0; i < n; ++i) out[i].assign(adj[i].begin(), adj[i].end());
  return out;
}

// Exhaustive search for any proper equitable r-coloring.
bool EquitableColoringExists(const std::vector<std::vector<int>>& adj, int r) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n, -1), sizes(r, 0);
  const int hi = (n + r - 1) / r;
  const int lo = n / r;
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) {
      for (int s : sizes) {
        if (s < lo) return false;
      }
      return true;
    }
    for (int c = 0; c < r; ++c) {
      if (sizes[c] == hi) continue;
      bool ok = true;
      for (int u : adj[v]) ok = ok && color[u] != c;
      if (!ok) continue;
      color[v] = c;
      ++sizes[c];
      if (self(self, v + 1)) return true;
      --sizes[c];
      color[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

TEST(BuildDigraphTest, ThreeCycle) {
  const auto inst = testing::Uniform(3, 1, "0.5");
  const auto g = BuildDigraph(inst, Assignment::FromPairs({{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.MaxDegree(), 2);
}

TEST(BuildDigraphTest, LoadTwoDegrees) {
  const auto inst = GenRandom(6, 2, 1);
  const auto g = BuildDigraph(inst, SolveUnconstrained(inst).assignment);
  std::vector<int> in(6, 0), out(6, 0);
  for (const auto& [u, v] : g.edges) {
    ++out[u];
    ++in[v];
  }
  EXPECT_EQ(in, std::vector<int>(6, 2));
  EXPECT_EQ(out, std::vector<int>(6, 2));
  EXPECT_LE(g.MaxDegree(), 4);
}

TEST(BuildDigraphTest, TheoremTwoGivesTwoThreeCycles) {
  const auto inst = GenTheorem2(6, 1);
  const auto g = BuildDigraph(inst, SolveUnconstrained(inst).assignment);
  std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
  EXPECT_EQ(edges, (std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}));
}

TEST(BuildDigraphTest, RejectsGeneralModeAndBadLoads) {
  std::vector<Similarity> sims(4);
  const auto general = Instance::General(2, 2, sims, {{0, 0}, {1, 1}}, {1, 1});
  EXPECT_THROW(BuildDigraph(general, Assignment{}), Error);
  const auto inst = testing::Uniform(3, 1, "0.5");
  EXPECT_THROW(BuildDigraph(inst, Assignment::FromPairs({{0, 1}, {1, 0}})), Error);
}

TEST(BuildDigraphTest, AntiparallelEdgesCollapse) {
  AssignmentDigraph g;
  g.num_vertices = 2;
  g.edges = {{0, 1}, {1, 0}};
  EXPECT_EQ(g.UndirectedAdjacency()[0], std::vector<int>{1});
  EXPECT_EQ(g.MaxDegree(), 1);
  const auto c = EquitableColor(g, 2);
  EXPECT_NE(c.color[0], c.color[1]);
}

TEST(EquitableColorTest, Edgeless) {
  AssignmentDigraph g;
  g.num_vertices = 6;
  const auto c = EquitableColor(g, 3);
  EXPECT_EQ(c.ClassSizes(), (std::vector<int>{2, 2, 2}));
}

TEST(EquitableColorTest, ThreeCycleGetsThreeColors) {
  AssignmentDigraph g;
  g.num_vertices = 3;
  g.edges = {{0, 1}, {1, 2}, {2, 0}};
  const auto c = EquitableColor(g, 3);
  EXPECT_EQ(std::set<int>(c.color.begin(), c.color.end()).size(), 3u);
}

TEST(EquitableColorTest, RandomLoadTwoDigraph) {
  Rng rng(12);
  const auto inst = testing::Uniform(12, 2, "0.5");
  const auto g = BuildDigraph(inst, testing::RandomRegularAssignment(12, 2, rng));
  const auto c = EquitableColor(g, 5);
  EXPECT_TRUE(VerifyColoring(g, c).ok());
  for (int s : c.ClassSizes()) EXPECT_TRUE(s == 2 || s == 3);
}

TEST(EquitableColorTest, TooFewColorsIsPrecondition) {
  AssignmentDigraph g;
  g.num_vertices = 3;
  g.edges = {{0, 1}, {1, 2}, {2, 0}};
  try {
    EquitableColor(g, 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
}

TEST(EquitableColorTest, MoreColorsThanVertices) {
  AssignmentDigraph g;
  g.num_vertices = 2;
  g.edges = {{0, 1}, {1, 0}};
  const auto c = EquitableColor(g, 5);
  EXPECT_TRUE(VerifyColoring(g, c).ok());
  EXPECT_EQ(c.num_colors, 5);
}

TEST(VerifyColoringTest, AcceptsProperEquitable) {
  AssignmentDigraph g;
  g.num_vertices = 4;
  g.edges = {{0, 1}, {2, 3}};
  EXPECT_TRUE(VerifyColoring(g, Coloring{2, {0, 1, 0, 1}}).ok());
}

TEST(VerifyColoringTest, ReportsMonochromaticEdge) {
  AssignmentDigraph g;
  g.num_vertices = 4;
  g.edges = {{0, 1}};
  const auto v = VerifyColoring(g, Coloring{2, {0, 0, 1, 1}});
  EXPECT_EQ(v.properness.size(), 1u);
  EXPECT_TRUE(v.equitability.empty());
}

TEST(VerifyColoringTest, ReportsUnbalancedClasses) {
  AssignmentDigraph g;
  g.num_vertices = 6;
  const auto v = VerifyColoring(g, Coloring{3, {0, 0, 0, 0, 1, 2}});
  EXPECT_TRUE(v.properness.empty());
  EXPECT_EQ(v.equitability.size(), 1u);
}

TEST(EquitableColorPropertyTest, AssignmentDigraphsWithBothColorCounts) {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(UniformBelow(rng, 3));
    const int n = k + 1 + static_cast<int>(UniformBelow(rng, 60 - k));
    const auto inst = testing::Uniform(n, k, "0.5");
    const auto g = BuildDigraph(inst, testing::RandomRegularAssignment(n, k, rng));
    for (int r : {2 * k + 1, 2 * k + 2}) {
      const auto c = EquitableColor(g, r);
      const auto verdict = VerifyColoring(g, c);
      ASSERT_TRUE(verdict.ok()) << "trial " << trial << " n=" << n << " r=" << r;
    }
  }
}

TEST(EquitableColorPropertyTest, TightDegreeGraphs) {
  Rng rng(77);
  for (int trial = 0; trial < 3000; ++trial) {
    const int r = 2 + static_cast<int>(UniformBelow(rng, 9));
    const int n = 1 + static_cast<int>(UniformBelow(rng, 80));
    const auto adj = RandomBoundedGraph(n, r - 1, n * r * 4, rng);
    const auto c = EquitableColor(adj, r);
    ASSERT_TRUE(VerifyColoring(adj, c).ok()) << "trial " << trial;
  }
}

TEST(EquitableColorPropertyTest, DisjointCliques) {
  for (int r = 2; r <= 7; ++r) {
    for (int copies = 1; copies <= 4; ++copies) {
      std::vector<std::vector<int>> adj(r * copies);
      for (int b = 0; b < copies; ++b) {
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < r; ++j) {
            if (i != j) adj[b * r + i].push_back(b * r + j);
          }
        }
      }
      ASSERT_TRUE(VerifyColoring(adj, EquitableColor(adj, r)).ok()) << r << " " << copies;
    }
  }
}

TEST(EquitableColorPropertyTest, SmallGraphsAgreeWithExhaustiveSearch) {
  Rng rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const int r = 2 + static_cast<int>(UniformBelow(rng, 3));
    const int n = 1 + static_cast<int>(UniformBelow(rng, 9));
    const auto adj = RandomBoundedGraph(n, r - 1, n * r * 3, rng);
    ASSERT_TRUE(EquitableColoringExists(adj, r));
    ASSERT_TRUE(VerifyColoring(adj, EquitableColor(adj, r)).ok()) << "trial " << trial;
  }
}

TEST(EquitableColorPropertyTest, Deterministic) {
  Rng rng(3);
  const auto adj = RandomBoundedGraph(50, 5, 1000, rng);
  EXPECT_EQ(EquitableColor(adj, 6).color, EquitableColor(adj, 6).color);
}

}  // namespace
}  // namespace sppart
