#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "linalg.hpp"

namespace lambda_cdp {

// Numerical thresholds shared by the spectral, cdp and singular analyses.
struct Tolerances {
  double orth = 1e-9;        // max |Q^T Q - I|
  double resid = 1e-8;       // eigen-residual bound, scaled by max(1, ||U||_F)
  double cluster = 1e-7;     // eigenvalue grouping, scaled by max(1, spectral radius)
  double zero = 1e-8;        // projector diagonals in [0,1]
  double equitable = 1e-6;   // absolute, per-vertex block sums
};

// Selects U = a*A + d*D + i*I + j*J. The adjacency coefficient must be non-zero.
class UniversalParams {
 public:
  UniversalParams(double gamma_a, double gamma_d, double gamma_i, double gamma_j)
      : a_(gamma_a), d_(gamma_d), i_(gamma_i), j_(gamma_j) {
    if (gamma_a == 0.0) throw PreconditionError("gamma_A must be non-zero");
  }

  static UniversalParams adjacency() { return {1, 0, 0, 0}; }
  static UniversalParams laplacian() { return {-1, 1, 0, 0}; }
  static UniversalParams signless_laplacian() { return {1, 1, 0, 0}; }
  // Seidel matrix J - I - 2A.
  static UniversalParams seidel() { return {-2, 0, -1, 1}; }
  // Hueckel Hamiltonian alpha*I + beta*A.
  static UniversalParams huckel(double alpha, double beta) { return {beta, 0, alpha, 0}; }

  double gamma_a() const noexcept { return a_; }
  double gamma_d() const noexcept { return d_; }
  double gamma_i() const noexcept { return i_; }
  double gamma_j() const noexcept { return j_; }

  bool is_adjacency() const noexcept { return a_ == 1 && d_ == 0 && i_ == 0 && j_ == 0; }

 private:
  double a_, d_, i_, j_;
};

inline SymmetricMatrix build_universal(const Graph& g, const UniversalParams& p) {
  const auto n = static_cast<std::size_t>(g.order());
  SymmetricMatrix u(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double value = p.gamma_j();
      if (i == j)
        value += p.gamma_d() * g.degree(static_cast<Vertex>(i + 1)) + p.gamma_i();
      else if (g.adjacent(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1)))
        value += p.gamma_a();
      u.set(i, j, value);
    }
  }
  return u;
}

inline SymmetricMatrix adjacency_matrix(const Graph& g) {
  return build_universal(g, UniversalParams::adjacency());
}

struct EigenSystem {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // orthonormal columns, column i pairs with values[i]
  double residual = 0.0;       // max_i ||U x_i - lambda_i x_i||
  double orthogonality_error = 0.0;
  double matrix_norm = 0.0;    // ||U||_F
  int sweeps = 0;

  std::size_t order() const noexcept { return values.size(); }
  double spectral_radius() const {
    double r = 0.0;
    for (double v : values) r = std::max(r, std::abs(v));
    return r;
  }
};

inline double residual_scale(double matrix_norm, const Tolerances& tol) {
  return tol.resid * std::max(1.0, matrix_norm);
}

inline EigenSystem eigendecompose(const SymmetricMatrix& m, const Tolerances& tol = {}) {
  auto jac = jacobi_eigen(m);
  const std::size_t n = m.order();
  EigenSystem es{std::move(jac.values), std::move(jac.vectors), 0.0, 0.0, m.frobenius_norm(), jac.sweeps};

  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      double ux = 0.0;
      for (std::size_t k = 0; k < n; ++k) ux += m(r, k) * es.vectors(k, c);
      const double d = ux - es.values[c] * es.vectors(r, c);
      s += d * d;
    }
    es.residual = std::max(es.residual, std::sqrt(s));
  }
  const DenseMatrix gram = es.vectors.transpose() * es.vectors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      es.orthogonality_error = std::max(es.orthogonality_error, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));

  if (es.residual > residual_scale(es.matrix_norm, tol))
    throw NumericalError("eigen-residual " + std::to_string(es.residual) + " exceeds tolerance");
  if (es.orthogonality_error > tol.orth)
    throw NumericalError("eigenvectors not orthonormal (error " + std::to_string(es.orthogonality_error) + ")");
  return es;
}

// One numerically distinct eigenvalue with its multiplicity.
struct EigenCluster {
  double value = 0.0;  // mean of member eigenvalues
  std::vector<std::size_t> columns;

  std::size_t multiplicity() const noexcept { return columns.size(); }
};

inline double cluster_scale(const EigenSystem& es, double tol) {
  return tol * std::max(1.0, es.spectral_radius());
}

// Greedy left-to-right grouping of the ascending eigenvalues.
inline std::vector<EigenCluster> cluster_eigenvalues(const EigenSystem& es, double tol) {
  const double width = cluster_scale(es, tol);
  std::vector<EigenCluster> clusters;
  double sum = 0.0;
  for (std::size_t c = 0; c < es.order(); ++c) {
    const double v = es.values[c];
    if (clusters.empty() || std::abs(v - clusters.back().value) > width) {
      clusters.push_back({v, {c}});
      sum = v;
    } else {
      auto& cur = clusters.back();
      cur.columns.push_back(c);
      sum += v;
      cur.value = sum / static_cast<double>(cur.columns.size());
    }
  }
  return clusters;
}

// Index of the cluster nearest `value`; throws NotEigenvalueError if it is farther
// than `tol` (relative, same scaling as clustering).
inline std::size_t find_cluster(const std::vector<EigenCluster>& clusters, const EigenSystem& es,
                                double value, double tol) {
  if (clusters.empty()) throw NotEigenvalueError("no eigenvalues");
  std::size_t best = 0;
  for (std::size_t i = 1; i < clusters.size(); ++i)
    if (std::abs(clusters[i].value - value) < std::abs(clusters[best].value - value)) best = i;
  if (std::abs(clusters[best].value - value) > cluster_scale(es, tol))
    throw NotEigenvalueError(std::to_string(value) + " is not an eigenvalue (nearest " +
                             std::to_string(clusters[best].value) + ")");
  return best;
}

// Orthogonal projector onto the span of the cluster's columns.
inline DenseMatrix eigenspace_projector(const EigenSystem& es, const EigenCluster& c) {
  const std::size_t n = es.order();
  DenseMatrix p(n, n);
  for (std::size_t col : c.columns)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) += es.vectors(i, col) * es.vectors(j, col);
  return p;
}

struct CoreSet {
  EigenCluster cluster;
  VertexSet core;
  VertexSet core_forbidden;
  std::vector<double> projector_diagonal;  // entry v-1 belongs to vertex v
};

// A vertex is core iff the eigenspace projector has a positive diagonal entry there,
// a basis-independent restatement of "some eigenvector is non-zero at v".
inline CoreSet core_vertices(const EigenSystem& es, const EigenCluster& c, const Tolerances& tol = {}) {
  const std::size_t n = es.order();
  if (c.columns.empty()) throw PreconditionError("empty eigenvalue cluster");
  for (std::size_t col : c.columns)
    if (col >= n) throw PreconditionError("cluster does not belong to this eigensystem");

  CoreSet cs{c, {}, {}, std::vector<double>(n, 0.0)};
  std::vector<Vertex> core, forbidden;
  double trace = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    double d = 0.0;
    for (std::size_t col : c.columns) d += es.vectors(v, col) * es.vectors(v, col);
    cs.projector_diagonal[v] = d;
    trace += d;
    (d > tol.zero ? core : forbidden).push_back(static_cast<Vertex>(v + 1));
  }
  if (std::abs(trace - static_cast<double>(c.multiplicity())) > residual_scale(es.matrix_norm, tol))
    throw NumericalError("projector trace " + std::to_string(trace) + " differs from multiplicity");
  if (core.empty()) throw NumericalError("eigenspace projector has an all-zero diagonal");
  cs.core = VertexSet(std::move(core));
  cs.core_forbidden = VertexSet(std::move(forbidden));
  return cs;
}

// Matrix, eigendecomposition and clustering computed together.
struct SpectralAnalysis {
  SymmetricMatrix matrix;
  EigenSystem eigen;
  std::vector<EigenCluster> clusters;

  CoreSet core_set(std::size_t cluster_index, const Tolerances& tol = {}) const {
    return core_vertices(eigen, clusters.at(cluster_index), tol);
  }
};

inline SpectralAnalysis analyze_spectrum(const SymmetricMatrix& m, const Tolerances& tol = {}) {
  auto es = eigendecompose(m, tol);
  auto clusters = cluster_eigenvalues(es, tol.cluster);
  return {m, std::move(es), std::move(clusters)};
}

inline SpectralAnalysis analyze_spectrum(const Graph& g, const UniversalParams& p, const Tolerances& tol = {}) {
  return analyze_spectrum(build_universal(g, p), tol);
}

// Multiplicity of the adjacency eigenvalue 0. Defined for any graph, connected or not.
inline std::size_t nullity(const Graph& g, const Tolerances& tol = {}) {
  const auto sa = analyze_spectrum(g, UniversalParams::adjacency(), tol);
  for (const auto& c : sa.clusters)
    if (std::abs(c.value) <= cluster_scale(sa.eigen, tol.cluster)) return c.multiplicity();
  return 0;
}

struct NumericalHygiene {
  double reconstruction_error = 0.0;  // max |Q diag(values) Q^T - U|
  double reconstruction_bound = 0.0;  // n * tau_resid
  double idempotence_error = 0.0;     // worst ||P^2 - P||_max over clusters
  double trace_error = 0.0;           // worst |trace P - m| over clusters
  double bound = 0.0;                 // tau_resid

  bool ok() const {
    return reconstruction_error <= reconstruction_bound && idempotence_error <= bound && trace_error <= bound;
  }
};

inline NumericalHygiene check_hygiene(const SpectralAnalysis& sa, const Tolerances& tol = {}) {
  const auto& es = sa.eigen;
  const std::size_t n = es.order();
  NumericalHygiene h;
  h.bound = residual_scale(es.matrix_norm, tol);
  h.reconstruction_bound = static_cast<double>(n) * h.bound;

  DenseMatrix scaled = es.vectors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= es.values[j];
  h.reconstruction_error = max_abs_difference(scaled * es.vectors.transpose(), sa.matrix.dense());

  for (const auto& c : sa.clusters) {
    const DenseMatrix p = eigenspace_projector(es, c);
    h.idempotence_error = std::max(h.idempotence_error, max_abs_difference(p * p, p));
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += p(i, i);
    h.trace_error = std::max(h.trace_error, std::abs(trace - static_cast<double>(c.multiplicity())));
  }
  return h;
}

}  // namespace lambda_cdp
