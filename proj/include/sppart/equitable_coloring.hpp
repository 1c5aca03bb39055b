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

#ifndef SPPART_EQUITABLE_COLORING_HPP_
#define SPPART_EQUITABLE_COLORING_HPP_

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sppart/core.hpp"
#include "sppart/error.hpp"

namespace sppart {

// Directed graph of an assignment: vertex i stands for agent a_i (and its
// submission p_i); edge (i, j) means a_i reviews p_j.
struct AssignmentDigraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  // Underlying simple undirected graph; antiparallel edges collapse.
  std::vector<std::vector<int>> UndirectedAdjacency() const {
    std::vector<std::vector<int>> adj(num_vertices);
    for (const auto& [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& list : adj) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
  }

  int MaxDegree() const {
    int best = 0;
    for (const auto& list : UndirectedAdjacency()) {
      best = std::max(best, static_cast<int>(list.size()));
    }
    return best;
  }
};

struct Coloring {
  int num_colors = 0;
  std::vector<int> color;

  std::vector<int> ClassSizes() const {
    std::vector<int> sizes(num_colors, 0);
    for (int c : color) {
      if (c >= 0 && c < num_colors) ++sizes[c];
    }
    return sizes;
  }

  std::vector<std::vector<int>> Classes() const {
    std::vector<std::vector<int>> classes(num_colors);
    for (int v = 0; v < static_cast<int>(color.size()); ++v) {
      if (color[v] >= 0 && color[v] < num_colors) classes[color[v]].push_back(v);
    }
    return classes;
  }
};

inline AssignmentDigraph BuildDigraph(const Instance& instance,
                                      const Assignment& assignment) {
  Require(instance.one_to_one(), "assignment digraph needs one-to-one mode");
  const int n = instance.num_agents();
  const int k = instance.k();
  AssignmentDigraph graph;
  graph.num_vertices = n;
  std::vector<int> out_degree(n, 0), in_degree(n, 0);
  for (const auto& pair : assignment.pairs) {
    Require(pair.agent >= 0 && pair.agent < n && pair.paper >= 0 &&
                pair.paper < n && pair.agent != pair.paper,
            "assignment pair is out of range or a self-review");
    graph.edges.emplace_back(pair.agent, pair.paper);
    ++out_degree[pair.agent];
    ++in_degree[pair.paper];
  }
  for (int v = 0; v < n; ++v) {
    Require(out_degree[v] == k && in_degree[v] == k,
            "vertex " + std::to_string(v) +
                " does not have in- and out-degree k; assignment is not "
                "load-feasible");
  }
  return graph;
}

struct ColoringVerdict {
  std::vector<std::string> properness;
  std::vector<std::string> equitability;
  bool ok() const { return properness.empty() && equitability.empty(); }
};

// Independent checker: every edge bichromatic, every vertex colored in
// range, class sizes within one of each other.
inline ColoringVerdict VerifyColoring(
    const std::vector<std::vector<int>>& adjacency, const Coloring& coloring) {
  ColoringVerdict verdict;
  const int n = static_cast<int>(adjacency.size());
  if (static_cast<int>(coloring.color.size()) != n) {
    verdict.properness.push_back("coloring covers " +
                                 std::to_string(coloring.color.size()) +
                                 " vertices, graph has " + std::to_string(n));
    return verdict;
  }
  for (int v = 0; v < n; ++v) {
    if (coloring.color[v] < 0 || coloring.color[v] >= coloring.num_colors) {
      verdict.properness.push_back("vertex " + std::to_string(v) +
                                   " has no valid color");
    }
    for (int u : adjacency[v]) {
      if (u > v && coloring.color[u] == coloring.color[v]) {
        verdict.properness.push_back("edge {" + std::to_string(v) + "," +
                                     std::to_string(u) + "} is monochromatic");
      }
    }
  }
  const auto sizes = coloring.ClassSizes();
  if (!sizes.empty()) {
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    if (*hi - *lo > 1) {
      verdict.equitability.push_back("class sizes range from " +
                                     std::to_string(*lo) + " to " +
                                     std::to_string(*hi));
    }
  }
  return verdict;
}

inline ColoringVerdict VerifyColoring(const AssignmentDigraph& graph,
                                      const Coloring& coloring) {
  return VerifyColoring(graph.UndirectedAdjacency(), coloring);
}

namespace detail {

// Incremental equitable coloring in the style of Kierstead, Kostochka,
// Mydlarz and Szemeredi. The vertex count is first padded to a multiple of
// r with a disjoint clique, and an arbitrary equitable coloring of the
// edgeless graph is taken. Edges are then inserted vertex by vertex; a
// vertex that becomes conflicted moves to a class with none of its
// neighbors, which leaves one class short (V-) and one long (V+), and
// Balance() restores equal sizes.
//
// Bookkeeping: nbr_count_[v][c] is the number of neighbors of v in class c;
// witnesses_[X][Y] counts vertices of X with no neighbor in Y, i.e. vertices
// that could move from X to Y. X -> Y is an arc of the accessibility
// digraph iff witnesses_[X][Y] > 0.
class EquitableColorer {
 public:
  EquitableColorer(const std::vector<std::vector<int>>& adjacency, int r)
      : r_(r) {
    const int n = static_cast<int>(adjacency.size());
    const int padded = (n + r - 1) / r * r;
    n_ = padded;
    full_adj_ = adjacency;
    full_adj_.resize(padded);
    for (int u = n; u < padded; ++u) {
      for (int v = n; v < padded; ++v) {
        if (u != v) full_adj_[u].push_back(v);
      }
    }
    adj_.assign(n_, {});
    color_.resize(n_);
    members_.assign(r_, {});
    position_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      color_[v] = v % r_;
      position_[v] = static_cast<int>(members_[color_[v]].size());
      members_[color_[v]].push_back(v);
    }
    nbr_count_.assign(static_cast<std::size_t>(n_) * r_, 0);
    witnesses_.assign(static_cast<std::size_t>(r_) * r_, 0);
    for (int c = 0; c < r_; ++c) {
      for (int d = 0; d < r_; ++d) W(c, d) = static_cast<int>(members_[c].size());
    }
  }

  std::vector<int> Run(int original_vertices) {
    for (int u = 0; u < n_; ++u) {
      for (int v : full_adj_[u]) {
        if (v > u) AddEdge(u, v);
      }
      if (N(u, color_[u]) == 0) continue;
      int target = -1;
      for (int c = 0; c < r_ && target < 0; ++c) {
        if (N(u, c) == 0) target = c;
      }
      if (target < 0) {
        throw std::logic_error("equitable coloring: vertex degree exceeds r-1");
      }
      const int from = color_[u];
      Move(u, target);
      Balance(from, target);
    }
    return {color_.begin(), color_.begin() + original_vertices};
  }

 private:
  int& N(int v, int c) { return nbr_count_[static_cast<std::size_t>(v) * r_ + c]; }
  int& W(int x, int y) { return witnesses_[static_cast<std::size_t>(x) * r_ + y]; }
  bool Movable(int v, int c) { return N(v, c) == 0; }
  int Size(int c) const { return static_cast<int>(members_[c].size()); }

  void Bump(int v, int c, int delta) {
    const int before = N(v, c);
    N(v, c) = before + delta;
    if (before == 0 && delta > 0) --W(color_[v], c);
    if (before + delta == 0 && delta < 0) ++W(color_[v], c);
  }

  void AddEdge(int u, int v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    Bump(u, color_[v], +1);
    Bump(v, color_[u], +1);
  }

  void Move(int u, int to) {
    const int from = color_[u];
    for (int c = 0; c < r_; ++c) {
      if (N(u, c) == 0) {
        --W(from, c);
        ++W(to, c);
      }
    }
    auto& src = members_[from];
    const int pos = position_[u];
    src[pos] = src.back();
    position_[src[pos]] = pos;
    src.pop_back();
    position_[u] = static_cast<int>(members_[to].size());
    members_[to].push_back(u);
    color_[u] = to;
    for (int v : adj_[u]) {
      Bump(v, from, -1);
      Bump(v, to, +1);
    }
  }

  // Moves one vertex across each arc of `path` (a sequence of classes).
  void Shift(const std::vector<int>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const int from = path[i];
      const int to = path[i + 1];
      int witness = -1;
      for (int v : members_[from]) {
        if (Movable(v, to)) {
          witness = v;
          break;
        }
      }
      if (witness < 0) {
        throw std::logic_error("equitable coloring: accessibility arc vanished");
      }
      Move(witness, to);
    }
  }

  // Classes that can reach `root` along accessibility arcs, staying inside
  // `allowed` and avoiding `skip`. toward[c] is the next class on a
  // shortest path from c to root. Returned in BFS order.
  std::vector<int> ReachTo(int root, const std::vector<char>& allowed,
                           int skip, std::vector<int>& toward) {
    toward.assign(r_, -1);
    std::vector<int> order = {root};
    toward[root] = root;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int to = order[head];
      for (int c = 0; c < r_; ++c) {
        if (allowed[c] && c != skip && toward[c] < 0 && W(c, to) > 0) {
          toward[c] = to;
          order.push_back(c);
        }
      }
    }
    return order;
  }

  // Classes reachable from `root` inside `allowed`; back[c] is the previous
  // class on a shortest path root -> c.
  std::vector<int> ReachFrom(int root, const std::vector<char>& allowed,
                             std::vector<int>& back) {
    back.assign(r_, -1);
    std::vector<int> order = {root};
    back[root] = root;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int from = order[head];
      for (int c = 0; c < r_; ++c) {
        if (allowed[c] && back[c] < 0 && W(from, c) > 0) {
          back[c] = from;
          order.push_back(c);
        }
      }
    }
    return order;
  }

  static std::vector<int> PathTo(int start, int root,
                                 const std::vector<int>& toward) {
    std::vector<int> path = {start};
    while (path.back() != root) path.push_back(toward[path.back()]);
    return path;
  }

  static std::vector<int> PathFrom(int root, int end,
                                   const std::vector<int>& back) {
    std::vector<int> path = {end};
    while (path.back() != root) path.push_back(back[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
  }

  // Restores equal class sizes given one class of size s-1 (v_minus) and
  // one of size s+1 (v_plus); all other active classes have size s.
  void Balance(int v_minus, int v_plus) {
    std::vector<char> active(r_, 1);
    const int limit = 4 * r_ * r_ + 16;
    for (int round = 0; round < limit; ++round) {
      if (v_minus == v_plus) return;

      std::vector<int> toward;
      const std::vector<int> accessible = ReachTo(v_minus, active, -1, toward);
      std::vector<char> in_a(r_, 0);
      for (int c : accessible) in_a[c] = 1;
      if (in_a[v_plus]) {
        Shift(PathTo(v_plus, v_minus, toward));
        return;
      }
      std::vector<char> in_b(r_, 0);
      int b = 0;
      for (int c = 0; c < r_; ++c) {
        if (active[c] && !in_a[c]) {
          in_b[c] = 1;
          ++b;
        }
      }

      // Terminal classes: removing them leaves every other accessible class
      // able to reach v_minus. Scan in reverse BFS order.
      std::vector<int> terminal;
      std::vector<std::vector<int>> terminal_toward;
      for (auto it = accessible.rbegin(); it != accessible.rend(); ++it) {
        const int w = *it;
        if (w == v_minus && accessible.size() > 1) continue;
        std::vector<int> t;
        const auto reached = ReachTo(v_minus, in_a, w, t);
        const std::size_t expected = accessible.size() - (w == v_minus ? 0 : 1);
        if (w == v_minus || reached.size() == expected) {
          terminal.push_back(w);
          terminal_toward.push_back(std::move(t));
        }
      }

      // Case 1: a vertex z of a terminal class W can move to another
      // accessible class X, and has a solo neighbor y in B (y's only
      // neighbor in W). Move z to X, shift X -> v_minus avoiding W, move y
      // into W. The accessible classes are now balanced and the remaining
      // imbalance lives inside B with y's class as the new short class.
      bool progressed = false;
      for (std::size_t t = 0; t < terminal.size() && !progressed; ++t) {
        const int w_class = terminal[t];
        for (int z : members_[w_class]) {
          int x_class = -1;
          for (int c : accessible) {
            if (c != w_class && Movable(z, c)) {
              x_class = c;
              break;
            }
          }
          if (x_class < 0) continue;
          int y = -1;
          for (int u : adj_[z]) {
            if (in_b[color_[u]] && N(u, w_class) == 1) {
              y = u;
              break;
            }
          }
          if (y < 0) continue;
          const int y_class = color_[y];
          Move(z, x_class);
          Shift(PathTo(x_class, v_minus, terminal_toward[t]));
          if (!Movable(y, w_class)) {
            throw std::logic_error("equitable coloring: solo move blocked");
          }
          Move(y, w_class);
          active = in_b;
          v_minus = y_class;
          progressed = true;
          break;
        }
      }
      if (progressed) continue;

      // Case 2: no such vertex. Take the classes B' reachable from v_plus
      // and a maximal independent set I of G[B'] seeded with v_plus. Two
      // vertices z1, z2 of I share a solo neighbor w in a terminal class W.
      // Shift W -> v_minus, shift v_plus -> class(z1), put z1 into W and
      // move w out to a class of B. W is the new short class and z2 can
      // now enter it, so the accessible family grows.
      if (static_cast<int>(terminal.size()) < b) {
        throw std::logic_error(
            "equitable coloring: fewer terminal classes than B classes");
      }
      std::vector<char> in_terminal(r_, 0);
      for (int c : terminal) in_terminal[c] = 1;
      std::vector<int> back;
      const auto b_prime = ReachFrom(v_plus, in_b, back);
      std::vector<char> in_b_prime(r_, 0);
      for (int c : b_prime) in_b_prime[c] = 1;

      std::vector<int> independent;
      std::vector<char> blocked(n_, 0);
      auto offer = [&](int v) {
        if (blocked[v]) return;
        independent.push_back(v);
        blocked[v] = 1;
        for (int u : adj_[v]) blocked[u] = 1;
      };
      for (int v : members_[v_plus]) offer(v);
      for (int c : b_prime) {
        if (c == v_plus) continue;
        for (int v : members_[c]) offer(v);
      }

      std::vector<int> claimed_by(n_, -1);
      int z1 = -1, w = -1;
      for (int z : independent) {
        for (int u : adj_[z]) {
          if (!in_terminal[color_[u]] || N(z, color_[u]) != 1) continue;
          if (claimed_by[u] < 0) {
            claimed_by[u] = z;
          } else {
            z1 = claimed_by[u];
            w = u;
            break;
          }
        }
        if (w >= 0) break;
      }
      if (w < 0) {
        throw std::logic_error(
            "equitable coloring: no shared solo neighbor in case 2");
      }
      const int w_class = color_[w];
      const int z_class = color_[z1];
      Shift(PathTo(w_class, v_minus, toward));
      Shift(PathFrom(v_plus, z_class, back));
      if (color_[w] != w_class || !Movable(z1, w_class)) {
        throw std::logic_error("equitable coloring: case 2 swap blocked");
      }
      Move(z1, w_class);
      int w_plus = -1;
      for (int c : b_prime) {
        if (Movable(w, c)) {
          w_plus = c;
          break;
        }
      }
      const bool inside = w_plus >= 0;
      for (int c = 0; c < r_ && w_plus < 0; ++c) {
        if (in_b[c] && Movable(w, c)) w_plus = c;
      }
      if (w_plus < 0) {
        throw std::logic_error("equitable coloring: no class accepts w");
      }
      Move(w, w_plus);
      if (inside) {
        active = in_b_prime;
        active[w_class] = 1;
      }
      v_minus = w_class;
      v_plus = w_plus;
    }
    throw std::logic_error("equitable coloring: balancing did not converge");
  }

  int r_;
  int n_ = 0;
  std::vector<std::vector<int>> full_adj_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> color_;
  std::vector<std::vector<int>> members_;
  std::vector<int> position_;
  std::vector<int> nbr_count_;
  std::vector<int> witnesses_;
};

}  // namespace detail

// Equitable r-coloring of an undirected simple graph with maximum degree
// below r. Deterministic.
inline Coloring EquitableColor(const std::vector<std::vector<int>>& adjacency,
                               int r) {
  Require(r >= 1, "color count must be positive");
  int max_degree = 0;
  for (const auto& list : adjacency) {
    max_degree = std::max(max_degree, static_cast<int>(list.size()));
  }
  Require(r > max_degree,
          "equitable coloring needs more than max degree (" +
              std::to_string(max_degree) + ") colors, got " + std::to_string(r));
  Coloring coloring;
  coloring.num_colors = r;
  const int n = static_cast<int>(adjacency.size());
  if (n == 0) return coloring;
  detail::EquitableColorer colorer(adjacency, r);
  coloring.color = colorer.Run(n);
  return coloring;
}

inline Coloring EquitableColor(const AssignmentDigraph& graph, int r) {
  return EquitableColor(graph.UndirectedAdjacency(), r);
}

}  // namespace sppart

#endif  // SPPART_EQUITABLE_COLORING_HPP_
