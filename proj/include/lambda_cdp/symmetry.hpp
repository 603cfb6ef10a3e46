#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cdp.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "spectral.hpp"

namespace lambda_cdp {

inline constexpr std::size_t default_automorphism_cap = 64;

struct OrbitPartition {
  std::vector<VertexSet> orbits;  // sorted by smallest member
  std::size_t generator_count = 0;

  // Index into `orbits` of the orbit holding v.
  std::size_t orbit_of(Vertex v) const {
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if (orbits[i].contains(v)) return i;
    throw PreconditionError("vertex " + std::to_string(v) + " not covered by orbit partition");
  }
};

namespace detail {

using Coloring = std::vector<int>;  // 0-indexed vertex -> colour id

// Refines one or more colourings of the same graph jointly to a common fixed point.
// Colour ids are assigned by sorted signature, so they are invariant under relabeling
// and comparable across the colourings.
inline void refine_jointly(const Graph& g, std::vector<Coloring*> colorings) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  auto count_colors = [&] {
    std::vector<int> all;
    for (auto* c : colorings) all.insert(all.end(), c->begin(), c->end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  };
  std::size_t classes = count_colors();
  for (;;) {
    using Signature = std::pair<int, std::vector<int>>;
    std::vector<std::vector<Signature>> sigs(colorings.size());
    std::map<Signature, int> ids;
    for (std::size_t c = 0; c < colorings.size(); ++c) {
      const Coloring& col = *colorings[c];
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v + 1))) nb.push_back(col[static_cast<std::size_t>(w - 1)]);
        std::sort(nb.begin(), nb.end());
        sigs[c].emplace_back(col[v], std::move(nb));
        ids.emplace(sigs[c].back(), 0);
      }
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t c = 0; c < colorings.size(); ++c)
      for (std::size_t v = 0; v < n; ++v) (*colorings[c])[v] = ids[sigs[c][v]];
    const std::size_t now = ids.size();
    if (now == classes) return;
    classes = now;
  }
}

inline Coloring degree_coloring(const Graph& g) {
  Coloring c(static_cast<std::size_t>(g.order()));
  for (Vertex v = 1; v <= g.order(); ++v) c[static_cast<std::size_t>(v - 1)] = g.degree(v);
  return c;
}

inline bool same_histogram(const Coloring& a, const Coloring& b) {
  auto sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

inline bool is_automorphism(const Graph& g, const std::vector<Vertex>& sigma) {
  for (auto [u, v] : g.edges())
    if (!g.adjacent(sigma[static_cast<std::size_t>(u - 1)], sigma[static_cast<std::size_t>(v - 1)])) return false;
  return true;
}

// Backtracking over colour-respecting bijections. `left` and `right` are two
// colourings of g; a returned sigma maps each vertex of left-colour c onto the
// vertex of right-colour c.
inline std::optional<std::vector<Vertex>> find_automorphism(const Graph& g, Coloring left, Coloring right) {
  refine_jointly(g, {&left, &right});
  if (!same_histogram(left, right)) return std::nullopt;
  const std::size_t n = left.size();

  std::map<int, std::vector<std::size_t>> left_cells, right_cells;
  for (std::size_t v = 0; v < n; ++v) {
    left_cells[left[v]].push_back(v);
    right_cells[right[v]].push_back(v);
  }
  auto open = std::find_if(left_cells.begin(), left_cells.end(), [](const auto& kv) { return kv.second.size() > 1; });
  if (open == left_cells.end()) {
    std::vector<Vertex> sigma(n);
    for (std::size_t v = 0; v < n; ++v) sigma[v] = static_cast<Vertex>(right_cells[left[v]].front() + 1);
    if (is_automorphism(g, sigma)) return sigma;
    return std::nullopt;
  }

  const int fresh = static_cast<int>(2 * n + 1);
  const std::size_t x = open->second.front();
  for (std::size_t y : right_cells[open->first]) {
    Coloring l = left, r = right;
    l[x] = fresh;
    r[y] = fresh;
    if (auto sigma = find_automorphism(g, std::move(l), std::move(r))) return sigma;
  }
  return std::nullopt;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// Stable colour-refinement classes starting from degrees. Orbits never straddle them.
inline std::vector<VertexSet> refinement_classes(const Graph& g) {
  auto col = detail::degree_coloring(g);
  detail::refine_jointly(g, {&col});
  std::map<int, std::vector<Vertex>> cells;
  for (std::size_t v = 0; v < col.size(); ++v) cells[col[v]].push_back(static_cast<Vertex>(v + 1));
  std::vector<VertexSet> out;
  for (auto& [c, vs] : cells) out.emplace_back(std::move(vs));
  std::sort(out.begin(), out.end());
  return out;
}

// Exact orbits of Aut(g). For each pair u < v in a common refinement class that is
// not yet known to share an orbit, search for an automorphism taking u to v; every
// automorphism found is folded into the union-find.
inline OrbitPartition automorphism_orbits(const Graph& g, std::size_t cap = default_automorphism_cap) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  if (n > cap) throw VertexCapError(n, cap);

  auto base = detail::degree_coloring(g);
  detail::refine_jointly(g, {&base});
  detail::UnionFind uf(n);
  OrbitPartition out;
  const int fresh = static_cast<int>(2 * n + 1);

  for (std::size_t u = 0; u < n; ++u) {
    if (uf.find(u) != u) continue;
    for (std::size_t v = u + 1; v < n; ++v) {
      if (base[v] != base[u] || uf.find(v) == uf.find(u)) continue;
      auto left = base, right = base;
      left[u] = fresh;
      right[v] = fresh;
      if (auto sigma = detail::find_automorphism(g, std::move(left), std::move(right))) {
        ++out.generator_count;
        for (std::size_t w = 0; w < n; ++w) uf.unite(w, static_cast<std::size_t>((*sigma)[w] - 1));
      }
    }
  }

  std::map<std::size_t, std::vector<Vertex>> groups;
  for (std::size_t v = 0; v < n; ++v) groups[uf.find(v)].push_back(static_cast<Vertex>(v + 1));
  for (auto& [root, vs] : groups) out.orbits.emplace_back(std::move(vs));
  std::sort(out.orbits.begin(), out.orbits.end());
  return out;
}

struct OrbitVerdict {
  bool holds = true;
  std::optional<VertexSet> witness;  // offending orbit
};

// Every orbit lies wholly in the core or wholly in the core-forbidden set.
inline OrbitVerdict verify_core_orbit_consistency(const CoreSet& cs, const OrbitPartition& op) {
  for (const auto& orbit : op.orbits)
    if (!orbit.is_subset_of(cs.core) && !orbit.is_subset_of(cs.core_forbidden)) return {false, orbit};
  return {};
}

// Every orbit lies wholly inside one block of the partition.
inline OrbitVerdict verify_cdp_orbit_refinement(const CoreDistancePartition& p, const OrbitPartition& op) {
  for (const auto& orbit : op.orbits) {
    const bool inside = std::any_of(p.blocks.begin(), p.blocks.end(),
                                    [&](const VertexSet& blk) { return orbit.is_subset_of(blk); });
    if (!inside) return {false, orbit};
  }
  return {};
}

}  // namespace lambda_cdp
