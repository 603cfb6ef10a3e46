#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>

#include "cdp.hpp"
#include "entropy.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "spectral.hpp"

namespace lambda_cdp {

// Kernel data of the adjacency matrix of a connected graph.
struct KernelAnalysis {
  std::size_t eta = 0;
  std::optional<CoreSet> core;               // absent when non-singular
  std::optional<CoreDistancePartition> cdp;  // 0-CDP
};

inline KernelAnalysis kernel_analysis(const Graph& g, const Tolerances& tol = {}) {
  require_connected(g);
  const auto sa = analyze_spectrum(g, UniversalParams::adjacency(), tol);
  KernelAnalysis out;
  for (std::size_t i = 0; i < sa.clusters.size(); ++i) {
    if (std::abs(sa.clusters[i].value) > cluster_scale(sa.eigen, tol.cluster)) continue;
    out.eta = sa.clusters[i].multiplicity();
    out.core = sa.core_set(i, tol);
    out.cdp = compute_cdp(g, *out.core);
  }
  return out;
}

struct SingularReport {
  std::size_t eta = 0;
  bool is_singular = false;
  std::size_t core_graph_order = 0;  // |CV_0|
  std::size_t eta_core_graph = 0;    // nullity of the subgraph induced by CV_0
  VertexSet periphery;               // CFV_0
  bool slim = false;
  bool all_core = false;             // CFV_0 empty; counted as slim
  bool minimal_configuration = false;
  bool bipartite_mc = false;
  std::optional<EntropyReport> i0;
};

inline SingularReport singular_report(const Graph& g, LogBase base = LogBase::e, const Tolerances& tol = {}) {
  const auto ka = kernel_analysis(g, tol);
  SingularReport r;
  r.eta = ka.eta;
  r.is_singular = ka.eta >= 1;
  if (!r.is_singular) return r;

  const auto& cs = *ka.core;
  r.core_graph_order = cs.core.size();
  r.eta_core_graph = nullity(g.induced(cs.core), tol);
  r.periphery = cs.core_forbidden;
  r.all_core = r.periphery.empty();
  r.slim = ka.cdp->blocks.size() <= 2;
  r.i0 = cdp_entropy_report(*ka.cdp, base);

  if (g.order() == 1) {
    r.minimal_configuration = true;
  } else if (g.order() >= 3) {
    r.minimal_configuration = r.eta == 1 && is_independent(g, r.periphery) &&
                              r.periphery.size() + 1 == r.eta_core_graph;
  }
  r.bipartite_mc = r.minimal_configuration && is_bipartite(g);
  if (r.bipartite_mc &&
      (!is_independent(g, cs.core) || !r.slim || cs.core.size() != r.periphery.size() + 1))
    throw NumericalError("bipartite minimal configuration without the expected kernel structure");
  return r;
}

inline void require_singular(const SingularReport& r) {
  if (!r.is_singular) throw PreconditionError("graph is not singular");
}

// CFV_0 coincides with the distance-1 layer of the 0-CDP. A graph with every vertex
// 0-core has a one-block partition and is treated as slim.
inline bool is_slim(const Graph& g, const Tolerances& tol = {}) {
  const auto r = singular_report(g, LogBase::e, tol);
  require_singular(r);
  return r.slim;
}

inline SingularReport is_minimal_configuration(const Graph& g, const Tolerances& tol = {}) {
  return singular_report(g, LogBase::e, tol);
}

inline bool is_bipartite_mc(const Graph& g, const Tolerances& tol = {}) {
  return singular_report(g, LogBase::e, tol).bipartite_mc;
}

struct SlimEntropyCheck {
  bool slim = false;
  double i0 = 0.0;
  double lower_bound = 0.0;
  bool at_minimum = false;
  bool consistent = false;  // slim <=> at_minimum
};

inline SlimEntropyCheck slim_entropy_check(const Graph& g, LogBase base = LogBase::e, const Tolerances& tol = {}) {
  const auto r = singular_report(g, base, tol);
  require_singular(r);
  SlimEntropyCheck out;
  out.slim = r.slim;
  out.i0 = r.i0->value;
  out.lower_bound = r.i0->bounds.lower;
  out.at_minimum = std::abs(out.i0 - out.lower_bound) <= 1e-9;
  out.consistent = out.slim == out.at_minimum;
  return out;
}

struct CoalescenceReport {
  Graph graph;
  std::size_t eta1 = 0, eta2 = 0, eta = 0;
  std::size_t k1 = 0, k2 = 0, k = 0;
  bool eta_formula_holds = false;         // eta = eta1 + eta2 - 1
  bool core_count_formula_holds = false;  // k = k1 + k2 - 1
  bool result_slim = false;
  double i0_h1 = 0.0, i0_h2 = 0.0, i0 = 0.0;
  bool min_bound_holds = false;  // min(I0(H1), I0(H2)) <= I0(H1 o H2)
  bool between = false;          // I0 of the coalescence lies between the two inputs
};

// Coalesces two slim singular graphs at 0-core vertices that are not cut vertices
// and checks the nullity, core-count and slimness relations on the result.
inline CoalescenceReport coalescence_report(const Graph& h1, Vertex v1, const Graph& h2, Vertex v2,
                                            LogBase base = LogBase::e, const Tolerances& tol = {}) {
  auto check_input = [&](const Graph& h, Vertex v, const char* name) {
    require_connected(h);
    if (!h.has_vertex(v)) throw PreconditionError(std::string(name) + ": vertex " + std::to_string(v) + " out of range");
    auto r = singular_report(h, base, tol);
    if (!r.is_singular) throw PreconditionError(std::string(name) + ": graph is not singular");
    if (!r.slim) throw PreconditionError(std::string(name) + ": graph is not slim");
    if (r.periphery.contains(v)) throw PreconditionError(std::string(name) + ": vertex " + std::to_string(v) + " is not 0-core");
    if (is_cut_vertex(h, v)) throw PreconditionError(std::string(name) + ": vertex " + std::to_string(v) + " is a cut vertex");
    return r;
  };
  const auto r1 = check_input(h1, v1, "first graph");
  const auto r2 = check_input(h2, v2, "second graph");

  Graph merged = coalesce(h1, v1, h2, v2);
  const auto r = singular_report(merged, base, tol);
  CoalescenceReport out{merged};
  out.eta1 = r1.eta;
  out.eta2 = r2.eta;
  out.eta = r.eta;
  out.k1 = r1.core_graph_order;
  out.k2 = r2.core_graph_order;
  out.k = r.core_graph_order;
  out.eta_formula_holds = out.eta == out.eta1 + out.eta2 - 1;
  out.core_count_formula_holds = out.k == out.k1 + out.k2 - 1;
  out.result_slim = r.is_singular && r.slim;
  out.i0_h1 = r1.i0->value;
  out.i0_h2 = r2.i0->value;
  out.i0 = r.i0 ? r.i0->value : 0.0;
  constexpr double slack = 1e-12;
  out.min_bound_holds = std::min(out.i0_h1, out.i0_h2) <= out.i0 + slack;
  out.between = out.i0 + slack >= std::min(out.i0_h1, out.i0_h2) && out.i0 <= std::max(out.i0_h1, out.i0_h2) + slack;
  return out;
}

}  // namespace lambda_cdp
