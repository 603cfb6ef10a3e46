#pragma once

// Test-only reference implementations. Each one reaches its answer by a route
// independent of the library code it is compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/rational.hpp>

#include "lambda_cdp/graph.hpp"

namespace lambda_cdp::testing {

using Rational = boost::rational<long long>;

// Kernel basis of an integer square matrix by exact Gauss-Jordan elimination.
inline std::vector<std::vector<Rational>> exact_kernel(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col] == Rational(0)) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == Rational(0)) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<Rational> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free];
    basis.push_back(v);
  }
  return basis;
}

// Kernel of A - lambda*I for an integer lambda.
inline std::vector<std::vector<Rational>> exact_eigenspace(const Graph& g, long long lambda) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = -lambda;
  for (auto [u, v] : g.edges()) m[u - 1][v - 1] = m[v - 1][u - 1] = 1;
  return exact_kernel(m);
}

inline VertexSet exact_core(const Graph& g, long long lambda) {
  std::vector<Vertex> core;
  const auto basis = exact_eigenspace(g, lambda);
  for (Vertex v = 1; v <= g.order(); ++v)
    if (std::any_of(basis.begin(), basis.end(), [&](const auto& b) { return b[v - 1] != Rational(0); })) core.push_back(v);
  return VertexSet(core);
}

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u - 1][v - 1] = d[v - 1][u - 1] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Orbits by trying every permutation. Only for n <= 8.
inline std::vector<VertexSet> brute_force_orbits(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::set<Vertex>> reach(n);
  for (int v = 0; v < n; ++v) reach[v].insert(v + 1);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!g.adjacent(perm[u - 1], perm[v - 1])) {
        ok = false;
        break;
      }
    if (ok)
      for (int v = 0; v < n; ++v) reach[v].insert(perm[v]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::set<VertexSet> orbits;
  for (const auto& r : reach) orbits.insert(VertexSet(std::vector<Vertex>(r.begin(), r.end())));
  return {orbits.begin(), orbits.end()};
}

// Canonical adjacency bitmask: minimum over all n! relabelings. n <= 7.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (auto [u, v] : g.edges()) {
      int a = perm[u - 1], b = perm[v - 1];
      if (a > b) std::swap(a, b);
      code |= std::uint64_t{1} << (a * n + b);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// One representative of every isomorphism class of connected graphs on n vertices.
// Built by attaching a new vertex to every non-empty subset of each (n-1)-vertex
// class; every connected graph has a non-cut vertex, so nothing is missed.
inline std::vector<Graph> connected_graphs(int n) {
  if (n == 1) return {Graph(1, std::span<const Edge>{})};
  std::vector<Graph> out;
  std::set<std::uint64_t> seen;
  for (const auto& base : connected_graphs(n - 1)) {
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::vector<Edge> e = base.edges();
      for (int v = 0; v < n - 1; ++v)
        if (mask & (1u << v)) e.emplace_back(v + 1, n);
      Graph g(n, e);
      if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

inline std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> all;
  for (int n = 1; n <= max_n; ++n) {
    auto gs = connected_graphs(n);
    all.insert(all.end(), gs.begin(), gs.end());
  }
  return all;
}

// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<Edge> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    int a = order[i], b = order[pick(rng)];
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  std::bernoulli_distribution coin(p);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (coin(rng)) edges.insert({a, b});
  std::vector<Edge> e(edges.begin(), edges.end());
  return Graph(n, e);
}

}  // namespace lambda_cdp::testing
