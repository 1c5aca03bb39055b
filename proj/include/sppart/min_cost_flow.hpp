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

#ifndef SPPART_MIN_COST_FLOW_HPP_
#define SPPART_MIN_COST_FLOW_HPP_

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

namespace sppart {

// Min-cost flow by successive shortest paths with node potentials.
//
// Arc costs must be non-negative, so the initial potentials are zero and
// every shortest-path phase runs Dijkstra on reduced costs. After each
// Dijkstra the flow is pushed along all zero-reduced-cost shortest paths at
// once (a Dinic blocking flow restricted to admissible arcs) before the
// potentials are recomputed. Exact for integer capacities and costs.
template <typename Cap, typename Cost>
class MinCostFlow {
 public:
  struct Result {
    Cap flow = 0;
    Cost cost = 0;
  };

  explicit MinCostFlow(int num_nodes) : out_(num_nodes) {}

  int num_nodes() const { return static_cast<int>(out_.size()); }

  // Returns the arc id; the paired residual arc is id ^ 1.
  int AddArc(int from, int to, Cap capacity, Cost cost) {
    assert(cost >= 0);
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, cost});
    arcs_.push_back({from, 0, -cost});
    out_[from].push_back(id);
    out_[to].push_back(id + 1);
    initial_cap_.push_back(capacity);
    initial_cap_.push_back(0);
    return id;
  }

  Cap Flow(int arc) const { return initial_cap_[arc] - arcs_[arc].residual; }

  // Sends up to `limit` units from source to sink at minimum cost.
  Result Solve(int source, int sink, Cap limit) {
    source_ = source;
    sink_ = sink;
    potential_.assign(out_.size(), 0);
    Result result;
    while (result.flow < limit && ShortestPaths()) {
      while (result.flow < limit && BuildLevels()) {
        next_arc_.assign(out_.size(), 0);
        while (result.flow < limit) {
          const Cap pushed = Push(source_, limit - result.flow);
          if (pushed == 0) break;
          result.flow += pushed;
        }
      }
    }
    for (std::size_t id = 0; id < arcs_.size(); id += 2) {
      result.cost += Flow(static_cast<int>(id)) * arcs_[id].cost;
    }
    return result;
  }

 private:
  struct Arc {
    int to;
    Cap residual;
    Cost cost;
  };

  static constexpr Cost kUnreached = std::numeric_limits<Cost>::max();

  int From(int arc) const { return arcs_[arc ^ 1].to; }

  Cost Reduced(int arc) const {
    return arcs_[arc].cost + potential_[From(arc)] - potential_[arcs_[arc].to];
  }

  // Dijkstra on reduced costs; folds distances into the potentials.
  bool ShortestPaths() {
    std::vector<Cost> dist(out_.size(), kUnreached);
    using Entry = std::pair<Cost, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[source_] = 0;
    heap.push({0, source_});
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (d != dist[v]) continue;
      for (int id : out_[v]) {
        if (arcs_[id].residual <= 0) continue;
        const Cost nd = d + Reduced(id);
        const int to = arcs_[id].to;
        if (nd < dist[to]) {
          dist[to] = nd;
          heap.push({nd, to});
        }
      }
    }
    if (dist[sink_] == kUnreached) return false;
    Cost farthest = 0;
    for (Cost d : dist) {
      if (d != kUnreached) farthest = std::max(farthest, d);
    }
    for (std::size_t v = 0; v < out_.size(); ++v) {
      potential_[v] += dist[v] == kUnreached ? farthest : dist[v];
    }
    return true;
  }

  bool Admissible(int arc) const {
    return arcs_[arc].residual > 0 && Reduced(arc) == 0;
  }

  bool BuildLevels() {
    level_.assign(out_.size(), -1);
    std::vector<int> queue = {source_};
    level_[source_] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int id : out_[v]) {
        const int to = arcs_[id].to;
        if (level_[to] < 0 && Admissible(id)) {
          level_[to] = level_[v] + 1;
          queue.push_back(to);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  Cap Push(int v, Cap budget) {
    if (v == sink_) return budget;
    for (auto& i = next_arc_[v]; i < out_[v].size(); ++i) {
      const int id = out_[v][i];
      const int to = arcs_[id].to;
      if (level_[to] != level_[v] + 1 || !Admissible(id)) continue;
      const Cap pushed = Push(to, std::min(budget, arcs_[id].residual));
      if (pushed > 0) {
        arcs_[id].residual -= pushed;
        arcs_[id ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<Cap> initial_cap_;
  std::vector<std::vector<int>> out_;
  std::vector<Cost> potential_;
  std::vector<int> level_;
  std::vector<std::size_t> next_arc_;
  int source_ = 0;
  int sink_ = 0;
};

}  // namespace sppart

#endif  // SPPART_MIN_COST_FLOW_HPP_
