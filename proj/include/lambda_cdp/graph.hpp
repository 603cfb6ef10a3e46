#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace lambda_cdp {

// Vertices are 1-indexed at every interface.
using Vertex = int;

// Sorted, duplicate-free set of vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : members_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) { normalize(); }

  static VertexSet range(Vertex first, Vertex last) {
    std::vector<Vertex> vs;
    for (Vertex v = first; v <= last; ++v) vs.push_back(v);
    return VertexSet(std::move(vs));
  }

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
  }

  VertexSet unite(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    return VertexSet(std::move(out));
  }

  VertexSet minus(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<Vertex> members_;
};

// True iff `blocks` are non-empty, pairwise disjoint and cover {1..n}.
inline bool is_partition(std::span<const VertexSet> blocks, int n) {
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::size_t covered = 0;
  for (const auto& b : blocks) {
    if (b.empty()) return false;
    for (Vertex v : b) {
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = 1;
      ++covered;
    }
  }
  return covered == static_cast<std::size_t>(n);
}

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph. Immutable after construction.
class Graph {
 public:
  // Throws PreconditionError on n < 1, out-of-range endpoints, loops or repeated edges.
  Graph(int n, std::span<const Edge> edges) : n_(n), adjacency_(n > 0 ? n : 0) {
    if (n < 1) throw PreconditionError("graph must have at least one vertex");
    for (auto [u, v] : edges) {
      if (u < 1 || u > n || v < 1 || v > n)
        throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} out of range");
      if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
      throw PreconditionError("duplicate edge {" + std::to_string(it->first) + "," +
                              std::to_string(it->second) + "}");
    for (auto [u, v] : edges_) {
      adjacency_[u - 1].push_back(v);
      adjacency_[v - 1].push_back(u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  // Lexicographically sorted, each pair stored with first < second.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v - 1); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool has_vertex(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  // Subgraph induced on `keep`, relabeled 1..|keep| in increasing label order.
  Graph induced(const VertexSet& keep) const {
    std::vector<int> relabel(static_cast<std::size_t>(n_) + 1, 0);
    int next = 0;
    for (Vertex v : keep) relabel.at(v) = ++next;
    std::vector<Edge> kept;
    for (auto [u, v] : edges_)
      if (relabel[u] && relabel[v]) kept.emplace_back(relabel[u], relabel[v]);
    return Graph(next, kept);
  }

  // Graph with vertex `v` deleted; remaining vertices keep their relative order.
  Graph without(Vertex v) const {
    std::vector<Vertex> keep;
    for (Vertex u = 1; u <= n_; ++u)
      if (u != v) keep.push_back(u);
    return induced(VertexSet(std::move(keep)));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Single-source-set BFS. Unreached vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> frontier;
  for (Vertex s : sources) {
    if (dist.at(s - 1) != 0) {
      dist[s - 1] = 0;
      frontier.push(s);
    }
  }
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w - 1] < 0) {
        dist[w - 1] = dist[u - 1] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  const Vertex start[] = {1};
  auto dist = bfs_distances(g, start);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError();
}

// d(v) = min over sources s of the shortest-path length d(v, s).
inline std::vector<int> multi_source_distances(const Graph& g, const VertexSet& sources) {
  if (sources.empty()) throw PreconditionError("source set is empty");
  for (Vertex s : sources)
    if (!g.has_vertex(s)) throw PreconditionError("source vertex " + std::to_string(s) + " out of range");
  require_connected(g);
  return bfs_distances(g, sources.members());
}

// Two-colorability by BFS. Requires nothing about connectivity.
inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex root = 1; root <= g.order(); ++root) {
    if (side[root - 1] >= 0) continue;
    side[root - 1] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (side[w - 1] < 0) {
          side[w - 1] = 1 - side[u - 1];
          q.push(w);
        } else if (side[w - 1] == side[u - 1]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u))
      if (s.contains(w)) return false;
  return true;
}

// Connected graph whose connectivity is destroyed by deleting `v`.
inline bool is_cut_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  if (g.order() <= 2) return false;
  return !is_connected(g.without(v));
}

// Identifies v2 of g2 with v1 of g1. g1 keeps its labels; the remaining vertices
// of g2 become n1+1 .. n1+n2-1 in their original order.
inline Graph coalesce(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  if (!g1.has_vertex(v1)) throw PreconditionError("vertex " + std::to_string(v1) + " not in first graph");
  if (!g2.has_vertex(v2)) throw PreconditionError("vertex " + std::to_string(v2) + " not in second graph");
  const int n1 = g1.order();
  auto relabel = [&](Vertex u) { return u == v2 ? v1 : (u < v2 ? n1 + u : n1 + u - 1); };
  std::vector<Edge> edges(g1.edges());
  for (auto [a, b] : g2.edges()) edges.emplace_back(relabel(a), relabel(b));
  return Graph(n1 + g2.order() - 1, edges);
}

inline Graph make_path(int n) {
  if (n < 1) throw PreconditionError("path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph make_cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return Graph(n, e);
}

inline Graph make_complete(int n) {
  if (n < 1) throw PreconditionError("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

// The 12-vertex cubic graph used as the running example: a hexagon 1..6,
// a triangle 10,11,12 and three bridging vertices 7,8,9.
inline Graph cubic_example_graph() {
  return Graph(12, {{1, 2},  {2, 3},  {3, 4},  {4, 5},   {5, 6},   {6, 1},
                    {1, 7},  {6, 7},  {2, 8},  {5, 8},   {3, 9},   {4, 9},
                    {7, 10}, {8, 11}, {9, 12}, {10, 11}, {11, 12}, {10, 12}});
}

}  // namespace lambda_cdp
