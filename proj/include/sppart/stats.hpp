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

#ifndef SPPART_STATS_HPP_
#define SPPART_STATS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "sppart/core.hpp"
#include "sppart/error.hpp"
#include "sppart/similarity.hpp"

namespace sppart {

// Decision and mean review score of one submission. Scores use the same
// 10^-6 fixed-point grid as similarities but are not limited to [0,1].
struct Outcome {
  std::string decision;
  std::int64_t score_micros = 0;
};

struct OutcomeTable {
  std::map<int, Outcome> by_paper;
};

inline constexpr const char* kUnknownDecision = "unknown";

// Submissions of each subset: the author's subset in one-to-one mode,
// otherwise the submission's own label.
inline std::vector<std::vector<int>> PapersBySubset(const Partition& partition) {
  std::vector<std::vector<int>> out(partition.num_subsets);
  const std::size_t papers = partition.paper_subset.empty()
                                 ? partition.agent_subset.size()
                                 : partition.paper_subset.size();
  for (std::size_t p = 0; p < papers; ++p) {
    const int s = partition.PaperSubset(static_cast<int>(p));
    if (s >= 0 && s < partition.num_subsets) out[s].push_back(static_cast<int>(p));
  }
  return out;
}

// Per-subset decision histogram. Submissions missing from the table count
// under "unknown".
inline std::vector<std::map<std::string, int>> SubsetOutcomeCounts(
    const Partition& partition, const OutcomeTable& outcomes) {
  std::vector<std::map<std::string, int>> out(partition.num_subsets);
  const auto papers = PapersBySubset(partition);
  for (int s = 0; s < partition.num_subsets; ++s) {
    for (int p : papers[s]) {
      const auto it = outcomes.by_paper.find(p);
      ++out[s][it == outcomes.by_paper.end() ? kUnknownDecision
                                             : it->second.decision];
    }
  }
  return out;
}

// Scores of the submissions of each subset that appear in the table.
inline std::vector<std::vector<std::int64_t>> SubsetScores(
    const Partition& partition, const OutcomeTable& outcomes) {
  std::vector<std::vector<std::int64_t>> out(partition.num_subsets);
  const auto papers = PapersBySubset(partition);
  for (int s = 0; s < partition.num_subsets; ++s) {
    for (int p : papers[s]) {
      const auto it = outcomes.by_paper.find(p);
      if (it != outcomes.by_paper.end()) out[s].push_back(it->second.score_micros);
    }
  }
  return out;
}

// Survival function of the Kolmogorov distribution,
// Q(x) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 x^2). Below x = 1 the
// alternating series converges slowly, so the Jacobi-transformed form
// 1 - sqrt(2 pi)/x sum_{j>=1} exp(-(2j-1)^2 pi^2 / (8 x^2)) is used.
inline double KolmogorovSurvival(double x) {
  if (!(x > 0.0)) return 1.0;
  double q;
  if (x < 1.0) {
    const double c = std::numbers::pi * std::numbers::pi / (8.0 * x * x);
    double sum = 0.0;
    for (int j = 1; j < 100; ++j) {
      const double odd = 2.0 * j - 1.0;
      const double term = std::exp(-odd * odd * c);
      sum += term;
      if (term < 1e-300 || term < sum * 1e-17) break;
    }
    q = 1.0 - std::sqrt(2.0 * std::numbers::pi) / x * sum;
  } else {
    double sum = 0.0;
    for (int j = 1; j < 100; ++j) {
      const double term = std::exp(-2.0 * j * j * x * x);
      sum += (j % 2 == 1) ? term : -term;
      if (term < 1e-17 * std::abs(sum)) break;
    }
    q = 2.0 * sum;
  }
  return std::clamp(q, 0.0, 1.0);
}

struct KsResult {
  Fraction d;  // exact statistic
  double p = 1.0;
  int size_a = 0;
  int size_b = 0;
};

// Two-sample Kolmogorov-Smirnov test. D is the largest gap between the
// empirical CDFs, evaluated after every distinct value of the merged
// sample so ties step together. p is the asymptotic two-sided value at
// sqrt(n_a n_b / (n_a + n_b)) * D.
template <typename T>
KsResult KsTwoSample(std::vector<T> a, std::vector<T> b) {
  Require(!a.empty() && !b.empty(), "KS test needs two non-empty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const auto na = static_cast<std::int64_t>(a.size());
  const auto nb = static_cast<std::int64_t>(b.size());
  std::int64_t best = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    const T v = (j == b.size() || (i < a.size() && a[i] <= b[j])) ? a[i] : b[j];
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    const std::int64_t gap = static_cast<std::int64_t>(i) * nb -
                             static_cast<std::int64_t>(j) * na;
    best = std::max(best, gap < 0 ? -gap : gap);
  }
  KsResult result;
  result.d = Fraction::Of(best, na * nb);
  result.size_a = static_cast<int>(na);
  result.size_b = static_cast<int>(nb);
  const double scale = std::sqrt(static_cast<double>(na) * static_cast<double>(nb) /
                                 static_cast<double>(na + nb));
  result.p = KolmogorovSurvival(scale * result.d.ToDouble());
  return result;
}

struct KsMultiResult {
  KsResult result;
  int subset_a = -1;
  int subset_b = -1;
};

// Tests every pair of non-empty samples and reports the pair with the
// largest D (the first such pair on ties).
template <typename T>
KsMultiResult KsMulti(const std::vector<std::vector<T>>& samples) {
  int non_empty = 0;
  for (const auto& s : samples) non_empty += !s.empty();
  Require(non_empty >= 2, "KS comparison needs at least two non-empty subsets");
  KsMultiResult best;
  for (int x = 0; x < static_cast<int>(samples.size()); ++x) {
    for (int y = x + 1; y < static_cast<int>(samples.size()); ++y) {
      if (samples[x].empty() || samples[y].empty()) continue;
      auto r = KsTwoSample(samples[x], samples[y]);
      if (best.subset_a < 0 || best.result.d < r.d) {
        best = {r, x, y};
      }
    }
  }
  return best;
}

inline KsMultiResult KsMulti(const Partition& partition,
                             const OutcomeTable& outcomes) {
  return KsMulti(SubsetScores(partition, outcomes));
}

struct MeanAndError {
  double mean = 0.0;
  double standard_error = 0.0;
};

// Sample mean and standard error of the mean (n-1 denominator).
inline MeanAndError Summarize(const std::vector<double>& values) {
  MeanAndError out;
  if (values.empty()) return out;
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.standard_error = std::sqrt(ss / (n - 1) / n);
  }
  return out;
}

}  // namespace sppart

#endif  // SPPART_STATS_HPP_
