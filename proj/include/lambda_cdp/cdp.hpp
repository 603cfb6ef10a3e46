#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "linalg.hpp"
#include "spectral.hpp"

namespace lambda_cdp {

// Blocks V_0 .. V_D where V_i holds the vertices at distance i from the nearest
// core vertex of the eigenvalue.
struct CoreDistancePartition {
  double eigenvalue = 0.0;
  std::size_t multiplicity = 0;
  std::vector<VertexSet> blocks;

  int d_max() const noexcept { return static_cast<int>(blocks.size()) - 1; }
  const VertexSet& core() const { return blocks.front(); }
};

inline CoreDistancePartition compute_cdp(const Graph& g, const CoreSet& cs) {
  require_connected(g);
  if (cs.core.empty()) throw PreconditionError("core vertex set is empty");
  const auto dist = multi_source_distances(g, cs.core);
  const int depth = *std::max_element(dist.begin(), dist.end());
  std::vector<std::vector<Vertex>> layers(static_cast<std::size_t>(depth) + 1);
  for (std::size_t v = 0; v < dist.size(); ++v) layers[dist[v]].push_back(static_cast<Vertex>(v + 1));

  CoreDistancePartition p{cs.cluster.value, cs.cluster.multiplicity(), {}};
  for (auto& layer : layers) p.blocks.emplace_back(std::move(layer));
  return p;
}

// Partition validity plus the layer structure: every vertex of V_i (i >= 1) has a
// neighbour in V_{i-1}, and no edge spans two or more layers.
inline bool cdp_is_well_formed(const Graph& g, const CoreDistancePartition& p) {
  if (!is_partition(p.blocks, g.order())) return false;
  std::vector<int> layer(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    for (Vertex v : p.blocks[i]) layer[v] = static_cast<int>(i);
  for (auto [u, v] : g.edges())
    if (std::abs(layer[u] - layer[v]) >= 2) return false;
  for (std::size_t i = 1; i < p.blocks.size(); ++i)
    for (Vertex v : p.blocks[i]) {
      const auto& nb = g.neighbors(v);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return layer[w] == static_cast<int>(i) - 1; }))
        return false;
    }
  return true;
}

// Vertices at distance two or more from every core vertex.
inline VertexSet remote_core_forbidden(const CoreDistancePartition& p) {
  VertexSet out;
  for (std::size_t i = 2; i < p.blocks.size(); ++i) out = out.unite(p.blocks[i]);
  return out;
}

struct DivisorMatrix {
  DenseMatrix entries;
  std::vector<std::size_t> block_sizes;

  std::size_t order() const noexcept { return block_sizes.size(); }
};

// Vertex v of block r sums to a different value into block s than vertex v2 of block r.
struct EquitableWitness {
  std::size_t row_block = 0;  // 0-based
  std::size_t col_block = 0;
  Vertex vertex = 0;
  Vertex other_vertex = 0;
};

struct EquitableCheck {
  std::optional<DivisorMatrix> divisor;
  std::optional<EquitableWitness> witness;

  bool equitable() const noexcept { return divisor.has_value(); }
};

inline EquitableCheck check_equitable(const SymmetricMatrix& u, const std::vector<VertexSet>& blocks,
                                      double tolerance = Tolerances{}.equitable) {
  const int n = static_cast<int>(u.order());
  if (!is_partition(blocks, n)) throw PreconditionError("blocks do not partition the vertex set");
  const std::size_t k = blocks.size();
  DivisorMatrix b{DenseMatrix(k, k), {}};
  for (const auto& blk : blocks) b.block_sizes.push_back(blk.size());

  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      std::optional<double> first;
      Vertex first_vertex = 0;
      for (Vertex v : blocks[r]) {
        double sum = 0.0;
        for (Vertex w : blocks[s]) sum += u(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(w - 1));
        if (!first) {
          first = sum;
          first_vertex = v;
        } else if (std::abs(sum - *first) > tolerance) {
          return {std::nullopt, EquitableWitness{r, s, first_vertex, v}};
        }
      }
      b.entries(r, s) = *first;
    }
  }
  return {std::move(b), std::nullopt};
}

// max |U C - C B| for the characteristic matrix C of `blocks`.
inline double quotient_residual(const SymmetricMatrix& u, const std::vector<VertexSet>& blocks,
                                const DivisorMatrix& b) {
  const std::size_t n = u.order(), k = blocks.size();
  DenseMatrix c(n, k);
  for (std::size_t s = 0; s < k; ++s)
    for (Vertex v : blocks[s]) c(static_cast<std::size_t>(v - 1), s) = 1.0;
  return max_abs_difference(u.dense() * c, c * b.entries);
}

// Eigenpairs of B via the symmetric similarity S = Delta^{1/2} B Delta^{-1/2}.
struct DivisorSpectrum {
  EigenSystem symmetric;             // eigensystem of S
  std::vector<EigenCluster> clusters;
  std::vector<double> values;        // ascending
  std::vector<std::vector<double>> vectors;  // eigenvectors of B, unit Euclidean norm
};

inline DivisorSpectrum divisor_spectrum(const DivisorMatrix& b, const Tolerances& tol = {}) {
  const std::size_t k = b.order();
  SymmetricMatrix s(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = r; c < k; ++c) {
      const double sr = static_cast<double>(b.block_sizes[r]);
      const double sc = static_cast<double>(b.block_sizes[c]);
      const double lhs = sr * b.entries(r, c), rhs = sc * b.entries(c, r);
      if (std::abs(lhs - rhs) > tol.equitable * std::max(sr, sc))
        throw NumericalError("divisor matrix violates size-weighted symmetry at (" + std::to_string(r + 1) +
                             "," + std::to_string(c + 1) + ")");
      s.set(r, c, 0.5 * (std::sqrt(sr / sc) * b.entries(r, c) + std::sqrt(sc / sr) * b.entries(c, r)));
    }
  }
  DivisorSpectrum out;
  out.symmetric = eigendecompose(s, tol);
  out.clusters = cluster_eigenvalues(out.symmetric, tol.cluster);
  out.values = out.symmetric.values;
  for (std::size_t col = 0; col < k; ++col) {
    std::vector<double> x(k);
    double norm = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      x[i] = out.symmetric.vectors(i, col) / std::sqrt(static_cast<double>(b.block_sizes[i]));
      norm += x[i] * x[i];
    }
    norm = std::sqrt(norm);
    for (auto& xi : x) xi /= norm;
    out.vectors.push_back(std::move(x));
  }
  return out;
}

// Each eigenvalue of B should reappear in U with at least the same multiplicity.
struct DivisibilityCheck {
  bool values_match = true;
  bool multiplicities_ok = true;

  bool ok() const noexcept { return values_match && multiplicities_ok; }
};

inline DivisibilityCheck check_divisibility(const DivisorSpectrum& ds, const SpectralAnalysis& u,
                                            const Tolerances& tol = {}) {
  DivisibilityCheck out;
  for (const auto& bc : ds.clusters) {
    try {
      const auto idx = find_cluster(u.clusters, u.eigen, bc.value, tol.cluster);
      if (bc.multiplicity() > u.clusters[idx].multiplicity()) out.multiplicities_ok = false;
    } catch (const NotEigenvalueError&) {
      out.values_match = false;
    }
  }
  return out;
}

struct ReconstructionResult {
  double mu = 0.0;
  // Layers X^0, X^1, ... of 1-based block indices into the source partition.
  std::vector<std::vector<int>> index_layers;
  VertexSet core_subset;
  std::optional<CoreDistancePartition> full_cdp;
  std::size_t multiplicity_u = 0;
  std::size_t multiplicity_b = 0;
  // Block indices never reached by the layer recursion; always empty for a
  // connected index path, reported rather than hidden.
  std::vector<int> unreached_indices;
};

// Rebuilds as much of the mu-partition as the divisor matrix of an equitable
// lambda-partition determines. The full partition is produced only when the
// multiplicities of mu in U and in B agree.
inline ReconstructionResult reconstruct_cdp(const CoreDistancePartition& p_lambda, const DivisorMatrix& b,
                                            double mu, const SpectralAnalysis& u, const Tolerances& tol = {}) {
  const std::size_t k = p_lambda.blocks.size();
  std::size_t n = 0;
  for (const auto& blk : p_lambda.blocks) n += blk.size();
  if (b.order() != k || u.eigen.order() != n)
    throw PreconditionError("divisor matrix, partition and eigensystem dimensions disagree");

  const auto ds = divisor_spectrum(b, tol);
  const double width = cluster_scale(u.eigen, tol.cluster);
  const EigenCluster* mu_cluster = nullptr;
  for (const auto& c : ds.clusters)
    if (std::abs(c.value - mu) <= width && (!mu_cluster || std::abs(c.value - mu) < std::abs(mu_cluster->value - mu)))
      mu_cluster = &c;
  if (!mu_cluster) throw NotEigenvalueError(std::to_string(mu) + " is not an eigenvalue of the divisor matrix");

  ReconstructionResult out;
  out.mu = mu_cluster->value;
  out.multiplicity_b = mu_cluster->multiplicity();
  std::size_t u_index = 0;
  try {
    u_index = find_cluster(u.clusters, u.eigen, mu_cluster->value, tol.cluster);
  } catch (const NotEigenvalueError&) {
    throw NumericalError("divisor eigenvalue " + std::to_string(mu_cluster->value) + " missing from U's spectrum");
  }
  out.multiplicity_u = u.clusters[u_index].multiplicity();
  if (out.multiplicity_b > out.multiplicity_u)
    throw NumericalError("m_B(mu) > m_U(mu); clustering tolerance is likely misconfigured");

  // Nonzero rows via the diagonal of the projector onto the mu-eigenspace of S;
  // S and B eigenvectors share their zero pattern.
  std::vector<int> support;
  for (std::size_t i = 0; i < k; ++i) {
    double d = 0.0;
    for (std::size_t col : mu_cluster->columns) d += ds.symmetric.vectors(i, col) * ds.symmetric.vectors(i, col);
    if (d > tol.zero) support.push_back(static_cast<int>(i + 1));
  }
  for (int i : support) out.core_subset = out.core_subset.unite(p_lambda.blocks[static_cast<std::size_t>(i - 1)]);
  out.index_layers.push_back(support);

  if (out.multiplicity_u != out.multiplicity_b) return out;

  std::vector<char> used(k + 1, 0);
  for (int i : support) used[static_cast<std::size_t>(i)] = 1;
  for (;;) {
    std::set<int> next;
    for (int j : out.index_layers.back())
      for (int i : {j - 1, j + 1})
        if (i >= 1 && i <= static_cast<int>(k) && !used[static_cast<std::size_t>(i)]) next.insert(i);
    if (next.empty()) break;
    for (int i : next) used[static_cast<std::size_t>(i)] = 1;
    out.index_layers.emplace_back(next.begin(), next.end());
  }
  for (std::size_t i = 1; i <= k; ++i)
    if (!used[i]) out.unreached_indices.push_back(static_cast<int>(i));

  CoreDistancePartition full{out.mu, out.multiplicity_u, {}};
  for (const auto& layer : out.index_layers) {
    VertexSet blk;
    for (int i : layer) blk = blk.unite(p_lambda.blocks[static_cast<std::size_t>(i - 1)]);
    full.blocks.push_back(std::move(blk));
  }
  out.full_cdp = std::move(full);
  return out;
}

}  // namespace lambda_cdp
