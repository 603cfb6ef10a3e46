#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdp.hpp"
#include "entropy.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "singular.hpp"
#include "spectral.hpp"
#include "symmetry.hpp"

namespace lambda_cdp {

inline constexpr int report_schema_version = 1;

struct AnalysisConfig {
  UniversalParams params = UniversalParams::adjacency();
  std::string preset = "adjacency";
  LogBase base = LogBase::e;
  Tolerances tol;
  std::optional<double> target_lambda;
  std::size_t automorphism_cap = default_automorphism_cap;
};

namespace detail {

inline std::string fixed(double x, int places = 4) {
  if (std::abs(x) < 0.5 * std::pow(10.0, -places)) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, x);
  return buf;
}

inline nlohmann::json to_json(const VertexSet& s) { return s.members(); }

inline nlohmann::json to_json(const std::vector<VertexSet>& blocks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& b : blocks) arr.push_back(to_json(b));
  return arr;
}

inline nlohmann::json to_json(const DenseMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

// Renders a JSON integer array as "{a,b,c}".
inline std::string json_set(const nlohmann::json& j) {
  std::string s = "{";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(j[i].get<int>());
  return s + "}";
}

}  // namespace detail

// Full per-eigenvalue analysis. Throws DisconnectedGraphError, NumericalError,
// NotEigenvalueError (for an unmatched target eigenvalue).
inline nlohmann::json analyze(const Graph& g, const AnalysisConfig& cfg) {
  using nlohmann::json;
  require_connected(g);
  const auto sa = analyze_spectrum(g, cfg.params, cfg.tol);

  std::optional<OrbitPartition> orbits;
  json report = {{"schema_version", report_schema_version}};
  report["graph"] = {{"n", g.order()}, {"edges", g.size()}};
  report["matrix"] = {{"preset", cfg.preset},
                      {"gamma", {cfg.params.gamma_a(), cfg.params.gamma_d(), cfg.params.gamma_i(), cfg.params.gamma_j()}}};
  report["log_base"] = to_string(cfg.base);
  report["tolerances"] = {{"orth", cfg.tol.orth},       {"resid", cfg.tol.resid}, {"cluster", cfg.tol.cluster},
                          {"zero", cfg.tol.zero},       {"equitable", cfg.tol.equitable}};
  if (g.order() <= static_cast<int>(cfg.automorphism_cap)) {
    orbits = automorphism_orbits(g, cfg.automorphism_cap);
    report["orbits"] = detail::to_json(orbits->orbits);
    report["orbital_entropy"] = partition_entropy(orbits->orbits, g.order(), cfg.base);
  } else {
    report["orbits"] = nullptr;
    report["orbital_entropy"] = nullptr;
  }
  report["nullity"] = nullity(g, cfg.tol);

  std::vector<std::size_t> selected;
  if (cfg.target_lambda)
    selected.push_back(find_cluster(sa.clusters, sa.eigen, *cfg.target_lambda, cfg.tol.cluster));
  else
    for (std::size_t i = 0; i < sa.clusters.size(); ++i) selected.push_back(i);

  json eigen = json::array();
  for (std::size_t idx : selected) {
    const auto cs = sa.core_set(idx, cfg.tol);
    const auto cdp = compute_cdp(g, cs);
    const auto ent = cdp_entropy_report(cdp, cfg.base);
    const auto eq = check_equitable(sa.matrix, cdp.blocks, cfg.tol.equitable);
    json entry = {{"lambda", cs.cluster.value},
                  {"multiplicity", cs.cluster.multiplicity()},
                  {"core", detail::to_json(cs.core)},
                  {"core_forbidden", detail::to_json(cs.core_forbidden)},
                  {"cdp", detail::to_json(cdp.blocks)},
                  {"d_max", cdp.d_max()},
                  {"entropy", {{"value", ent.value}, {"lower", ent.bounds.lower}, {"upper", ent.bounds.upper}}},
                  {"equitable", eq.equitable()},
                  {"divisor_matrix", eq.divisor ? detail::to_json(eq.divisor->entries) : json(nullptr)}};
    if (orbits) {
      entry["core_orbit_consistent"] = verify_core_orbit_consistency(cs, *orbits).holds;
      entry["cdp_orbit_refinement"] = verify_cdp_orbit_refinement(cdp, *orbits).holds;
    } else {
      entry["core_orbit_consistent"] = nullptr;
      entry["cdp_orbit_refinement"] = nullptr;
    }
    eigen.push_back(entry);
  }
  report["eigenvalues"] = eigen;

  if (cfg.params.is_adjacency()) {
    const auto sr = singular_report(g, cfg.base, cfg.tol);
    json s = {{"eta", sr.eta}, {"is_singular", sr.is_singular}};
    if (sr.is_singular) {
      s["core_graph_order"] = sr.core_graph_order;
      s["eta_core_graph"] = sr.eta_core_graph;
      s["periphery"] = detail::to_json(sr.periphery);
      s["slim"] = sr.slim;
      s["all_core"] = sr.all_core;
      s["minimal_configuration"] = sr.minimal_configuration;
      s["bipartite_mc"] = sr.bipartite_mc;
      s["i0"] = sr.i0->value;
      s["i0_lower"] = sr.i0->bounds.lower;
    }
    report["singular"] = s;
  } else {
    report["singular"] = nullptr;
  }
  return report;
}

// Keys every analyze report carries, in schema version 1.
inline const std::vector<std::string>& analysis_report_keys() {
  static const std::vector<std::string> keys = {"eigenvalues", "graph",   "log_base",        "matrix",
                                                "nullity",     "orbital_entropy", "orbits", "schema_version",
                                                "singular",    "tolerances"};
  return keys;
}

inline const std::vector<std::string>& eigenvalue_entry_keys() {
  static const std::vector<std::string> keys = {
      "cdp",   "cdp_orbit_refinement", "core",   "core_forbidden", "core_orbit_consistent",
      "d_max", "divisor_matrix",       "entropy", "equitable",     "lambda", "multiplicity"};
  return keys;
}

inline std::string render_analysis_text(const nlohmann::json& r) {
  using detail::fixed;
  std::ostringstream out;
  out << "graph: n=" << r["graph"]["n"].get<int>() << " edges=" << r["graph"]["edges"].get<int>() << '\n';
  const auto& gm = r["matrix"]["gamma"];
  out << "matrix: " << r["matrix"]["preset"].get<std::string>() << " (gamma_A=" << fixed(gm[0].get<double>())
      << " gamma_D=" << fixed(gm[1].get<double>()) << " gamma_I=" << fixed(gm[2].get<double>())
      << " gamma_J=" << fixed(gm[3].get<double>()) << ")\n";
  out << "log base: " << r["log_base"].get<std::string>() << '\n';
  out << "tolerances: cluster=" << r["tolerances"]["cluster"].get<double>()
      << " zero=" << r["tolerances"]["zero"].get<double>()
      << " equitable=" << r["tolerances"]["equitable"].get<double>() << '\n';
  if (r["orbits"].is_null()) {
    out << "orbits: skipped (vertex cap)\n";
  } else {
    out << "orbits:";
    for (const auto& o : r["orbits"]) out << ' ' << detail::json_set(o);
    out << "\norbital entropy I_a: " << fixed(r["orbital_entropy"].get<double>()) << '\n';
  }
  out << "nullity: " << r["nullity"].get<int>() << '\n';

  for (const auto& e : r["eigenvalues"]) {
    out << "\nlambda = " << fixed(e["lambda"].get<double>()) << " (multiplicity " << e["multiplicity"].get<int>() << ")\n";
    out << "  core: " << detail::json_set(e["core"]) << '\n';
    out << "  core-forbidden: " << detail::json_set(e["core_forbidden"]) << '\n';
    out << "  CDP (D=" << e["d_max"].get<int>() << "):";
    for (const auto& b : e["cdp"]) out << ' ' << detail::json_set(b);
    out << '\n';
    out << "  entropy: " << fixed(e["entropy"]["value"].get<double>()) << " in ["
        << fixed(e["entropy"]["lower"].get<double>()) << ", " << fixed(e["entropy"]["upper"].get<double>()) << "]\n";
    out << "  equitable: " << (e["equitable"].get<bool>() ? "yes" : "no") << '\n';
    if (!e["divisor_matrix"].is_null()) {
      out << "  divisor matrix:\n";
      for (const auto& row : e["divisor_matrix"]) {
        out << "    [";
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << fixed(row[j].get<double>());
        out << "]\n";
      }
    }
    if (!e["core_orbit_consistent"].is_null())
      out << "  orbits: core " << (e["core_orbit_consistent"].get<bool>() ? "consistent" : "INCONSISTENT")
          << ", CDP " << (e["cdp_orbit_refinement"].get<bool>() ? "refined by orbits" : "NOT refined by orbits") << '\n';
  }

  out << '\n';
  if (r["singular"].is_null()) {
    out << "singular analysis: skipped (defined for the adjacency matrix only)\n";
  } else {
    const auto& s = r["singular"];
    out << "singular: " << (s["is_singular"].get<bool>() ? "yes" : "no") << " (eta=" << s["eta"].get<int>() << ")\n";
    if (s["is_singular"].get<bool>()) {
      out << "  slim: " << (s["slim"].get<bool>() ? "yes" : "no") << (s["all_core"].get<bool>() ? " (all vertices 0-core)" : "")
          << '\n';
      out << "  minimal configuration: " << (s["minimal_configuration"].get<bool>() ? "yes" : "no") << '\n';
      out << "  bipartite MC: " << (s["bipartite_mc"].get<bool>() ? "yes" : "no") << '\n';
      out << "  core graph: order " << s["core_graph_order"].get<int>() << ", nullity " << s["eta_core_graph"].get<int>()
          << '\n';
      out << "  I_0: " << fixed(s["i0"].get<double>()) << " (lower bound " << fixed(s["i0_lower"].get<double>()) << ")\n";
    }
  }
  return out.str();
}

// Throws NotEquitableError when the lambda-CDP has no divisor matrix.
inline nlohmann::json reconstruct(const Graph& g, const AnalysisConfig& cfg, double lambda, double mu) {
  using nlohmann::json;
  require_connected(g);
  const auto sa = analyze_spectrum(g, cfg.params, cfg.tol);
  const auto idx = find_cluster(sa.clusters, sa.eigen, lambda, cfg.tol.cluster);
  const auto cdp = compute_cdp(g, sa.core_set(idx, cfg.tol));
  const auto eq = check_equitable(sa.matrix, cdp.blocks, cfg.tol.equitable);
  if (!eq.equitable()) throw NotEquitableError();
  const auto rr = reconstruct_cdp(cdp, *eq.divisor, mu, sa, cfg.tol);

  json out = {{"schema_version", report_schema_version},
              {"lambda", sa.clusters[idx].value},
              {"lambda_cdp", detail::to_json(cdp.blocks)},
              {"divisor_matrix", detail::to_json(eq.divisor->entries)},
              {"mu", rr.mu},
              {"index_layers", rr.index_layers},
              {"core_subset", detail::to_json(rr.core_subset)},
              {"multiplicity_u", rr.multiplicity_u},
              {"multiplicity_b", rr.multiplicity_b},
              {"mu_cdp", rr.full_cdp ? detail::to_json(rr.full_cdp->blocks) : json(nullptr)},
              {"unreached_indices", rr.unreached_indices}};
  return out;
}

inline std::string render_reconstruct_text(const nlohmann::json& r) {
  using detail::fixed;
  std::ostringstream out;
  out << "lambda = " << fixed(r["lambda"].get<double>()) << ", CDP:";
  for (const auto& b : r["lambda_cdp"]) out << ' ' << detail::json_set(b);
  out << "\ndivisor matrix:\n";
  for (const auto& row : r["divisor_matrix"]) {
    out << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << fixed(row[j].get<double>());
    out << "]\n";
  }
  out << "mu = " << fixed(r["mu"].get<double>()) << ", m_U(mu) = " << r["multiplicity_u"].get<int>()
      << ", m_B(mu) = " << r["multiplicity_b"].get<int>() << '\n';
  const auto& layers = r["index_layers"];
  for (std::size_t d = 0; d < layers.size(); ++d) out << "X^" << d << " = " << detail::json_set(layers[d]) << '\n';
  out << "core subset: " << detail::json_set(r["core_subset"]) << '\n';
  if (r["mu_cdp"].is_null()) {
    out << "mu-CDP: not determined (multiplicities differ)\n";
  } else {
    out << "mu-CDP:";
    for (const auto& b : r["mu_cdp"]) out << ' ' << detail::json_set(b);
    out << '\n';
  }
  return out.str();
}

// CSV rows "k,lower,upper" for k = 1..n.
inline std::string bounds_csv(int n, LogBase base) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  std::ostringstream out;
  out << "k,lower,upper\n";
  for (int k = 1; k <= n; ++k) {
    const auto b = entropy_bounds(n, k, base);
    out << k << ',' << detail::fixed(b.lower, 6) << ',' << detail::fixed(b.upper, 6) << '\n';
  }
  return out.str();
}

inline nlohmann::json coalescence_json(const CoalescenceReport& c) {
  return {{"schema_version", report_schema_version},
          {"graph", to_json(c.graph)},
          {"eta", {{"h1", c.eta1}, {"h2", c.eta2}, {"result", c.eta}, {"formula_holds", c.eta_formula_holds}}},
          {"core_count", {{"h1", c.k1}, {"h2", c.k2}, {"result", c.k}, {"formula_holds", c.core_count_formula_holds}}},
          {"result_slim", c.result_slim},
          {"i0", {{"h1", c.i0_h1}, {"h2", c.i0_h2}, {"result", c.i0}}},
          {"min_bound_holds", c.min_bound_holds},
          {"between", c.between}};
}

inline std::string render_coalescence_text(const CoalescenceReport& c) {
  using detail::fixed;
  std::ostringstream out;
  out << "coalesced graph: n=" << c.graph.order() << " edges=" << c.graph.size() << '\n';
  for (auto [u, v] : c.graph.edges()) out << "  e " << u << ' ' << v << '\n';
  out << "nullity: " << c.eta << " (inputs " << c.eta1 << " + " << c.eta2 << " - 1 = " << c.eta1 + c.eta2 - 1 << ") "
      << (c.eta_formula_holds ? "holds" : "FAILS") << '\n';
  out << "0-core count: " << c.k << " (inputs " << c.k1 << " + " << c.k2 << " - 1 = " << c.k1 + c.k2 - 1 << ") "
      << (c.core_count_formula_holds ? "holds" : "FAILS") << '\n';
  out << "result slim: " << (c.result_slim ? "yes" : "no") << '\n';
  out << "I_0: H1 " << fixed(c.i0_h1) << ", H2 " << fixed(c.i0_h2) << ", coalescence " << fixed(c.i0) << '\n';
  out << "min(I_0(H1), I_0(H2)) <= I_0(H1 o H2): " << (c.min_bound_holds ? "yes" : "no") << '\n';
  out << "I_0(H1 o H2) between inputs: " << (c.between ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace lambda_cdp
