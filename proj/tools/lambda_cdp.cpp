// lambda-cdp: command-line front end for the lambda_cdp library.
//
// Exit codes: 0 ok, 1 parse or I/O error, 2 disconnected graph, 3 numerical failure,
// 4 partition not equitable, 5 value is not an eigenvalue, 6 precondition violated,
// 7 automorphism vertex cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lambda_cdp/lambda_cdp.hpp"

namespace {

using namespace lambda_cdp;

enum ExitCode {
  kOk = 0,
  kParse = 1,
  kDisconnected = 2,
  kNumerical = 3,
  kNotEquitable = 4,
  kNotEigenvalue = 5,
  kPrecondition = 6,
  kVertexCap = 7,
};

struct CommonOptions {
  std::string gamma;
  std::string preset;
  std::vector<double> huckel;
  std::string log_base = "e";
  std::optional<double> tol_cluster;
  std::optional<double> tol_zero;
  std::optional<double> tol_equitable;
  std::string format = "text";
  std::string input_format = "auto";
};

void add_common(CLI::App* cmd, CommonOptions& o, bool matrix_options) {
  if (matrix_options) {
    auto* g = cmd->add_option("--gamma", o.gamma, "Universal matrix coefficients a,d,i,j");
    auto* p = cmd->add_option("--preset", o.preset, "adjacency | laplacian | signless-laplacian | seidel")
                  ->check(CLI::IsMember({"adjacency", "laplacian", "signless-laplacian", "seidel"}));
    auto* h = cmd->add_option("--huckel", o.huckel, "Hueckel Hamiltonian alpha beta")->expected(2);
    g->excludes(p)->excludes(h);
    p->excludes(h);
    cmd->add_option("--tol-cluster", o.tol_cluster, "Relative eigenvalue clustering tolerance");
    cmd->add_option("--tol-zero", o.tol_zero, "Projector-diagonal zero threshold");
    cmd->add_option("--tol-equitable", o.tol_equitable, "Absolute equitable-partition tolerance");
    cmd->add_option("--input-format", o.input_format, "auto | edge-list | json")
        ->check(CLI::IsMember({"auto", "edge-list", "json"}));
  }
  cmd->add_option("--log-base", o.log_base, "2 | e | 10")->check(CLI::IsMember({"2", "e", "10"}));
  cmd->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
}

std::size_t automorphism_cap() {
  const char* env = std::getenv("LAMBDA_CDP_MAX_N");
  if (!env) return default_automorphism_cap;
  const auto cap = static_cast<std::size_t>(std::stoul(env));
  std::cerr << "warning: automorphism vertex cap overridden to " << cap << '\n';
  return cap;
}

AnalysisConfig make_config(const CommonOptions& o) {
  AnalysisConfig cfg;
  if (!o.gamma.empty()) {
    std::vector<double> g;
    std::stringstream in(o.gamma);
    for (std::string tok; std::getline(in, tok, ',');) g.push_back(std::stod(tok));
    if (g.size() != 4) throw PreconditionError("--gamma expects four comma-separated values a,d,i,j");
    cfg.params = UniversalParams(g[0], g[1], g[2], g[3]);
    cfg.preset = "custom";
  } else if (!o.huckel.empty()) {
    cfg.params = UniversalParams::huckel(o.huckel[0], o.huckel[1]);
    cfg.preset = "huckel";
  } else if (o.preset == "laplacian") {
    cfg.params = UniversalParams::laplacian();
    cfg.preset = o.preset;
  } else if (o.preset == "signless-laplacian") {
    cfg.params = UniversalParams::signless_laplacian();
    cfg.preset = o.preset;
  } else if (o.preset == "seidel") {
    cfg.params = UniversalParams::seidel();
    cfg.preset = o.preset;
  }
  cfg.base = parse_log_base(o.log_base);
  if (o.tol_cluster) cfg.tol.cluster = *o.tol_cluster;
  if (o.tol_zero) cfg.tol.zero = *o.tol_zero;
  if (o.tol_equitable) cfg.tol.equitable = *o.tol_equitable;
  return cfg;
}

struct IoError : Error {
  using Error::Error;
};

Graph load_graph(const std::string& path, const std::string& input_format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  GraphFormat fmt = detect_format(text);
  if (input_format == "edge-list") fmt = GraphFormat::edge_list;
  if (input_format == "json") fmt = GraphFormat::json;
  return parse_graph(text, fmt);
}

template <class Fn>
int run_guarded(Fn&& fn) {
  try {
    fn();
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const DisconnectedGraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDisconnected;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const NotEquitableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotEquitable;
  } catch (const NotEigenvalueError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotEigenvalue;
  } catch (const VertexCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVertexCap;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda-core distance partitions, orbits and entropy indices of graphs"};
  app.require_subcommand(1);

  CommonOptions analyze_opts;
  std::string analyze_file;
  std::optional<double> analyze_lambda;
  auto* analyze_cmd = app.add_subcommand("analyze", "Per-eigenvalue core, CDP and entropy report");
  analyze_cmd->add_option("file", analyze_file, "Graph file")->required();
  analyze_cmd->add_option("--lambda", analyze_lambda, "Restrict the report to one eigenvalue");
  add_common(analyze_cmd, analyze_opts, true);

  CommonOptions recon_opts;
  std::string recon_file;
  double recon_lambda = 0, recon_mu = 0;
  auto* recon_cmd = app.add_subcommand("reconstruct", "Build the mu-CDP from an equitable lambda-CDP");
  recon_cmd->add_option("file", recon_file, "Graph file")->required();
  recon_cmd->add_option("--lambda", recon_lambda, "Eigenvalue whose CDP is the source")->required();
  recon_cmd->add_option("--mu", recon_mu, "Eigenvalue of the divisor matrix")->required();
  add_common(recon_cmd, recon_opts, true);

  CommonOptions bounds_opts;
  int bounds_n = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "CSV of entropy bounds for k = 1..n core vertices");
  bounds_cmd->add_option("n", bounds_n, "Vertex count")->required();
  add_common(bounds_cmd, bounds_opts, false);

  CommonOptions coal_opts;
  std::string coal_file1, coal_file2;
  int coal_v1 = 0, coal_v2 = 0;
  auto* coal_cmd = app.add_subcommand("coalesce", "Coalesce two slim singular graphs at 0-core vertices");
  coal_cmd->add_option("file1", coal_file1)->required();
  coal_cmd->add_option("v1", coal_v1)->required();
  coal_cmd->add_option("file2", coal_file2)->required();
  coal_cmd->add_option("v2", coal_v2)->required();
  add_common(coal_cmd, coal_opts, true);

  CommonOptions orbit_opts;
  std::string orbit_file;
  auto* orbit_cmd = app.add_subcommand("orbits", "Automorphism orbit partition");
  orbit_cmd->add_option("file", orbit_file, "Graph file")->required();
  add_common(orbit_cmd, orbit_opts, false);

  CLI11_PARSE(app, argc, argv);

  if (*analyze_cmd) {
    return run_guarded([&] {
      auto cfg = make_config(analyze_opts);
      cfg.target_lambda = analyze_lambda;
      cfg.automorphism_cap = automorphism_cap();
      const auto g = load_graph(analyze_file, analyze_opts.input_format);
      const auto report = analyze(g, cfg);
      std::cout << (analyze_opts.format == "json" ? report.dump(2) + "\n" : render_analysis_text(report));
    });
  }
  if (*recon_cmd) {
    return run_guarded([&] {
      const auto cfg = make_config(recon_opts);
      const auto g = load_graph(recon_file, recon_opts.input_format);
      const auto report = reconstruct(g, cfg, recon_lambda, recon_mu);
      std::cout << (recon_opts.format == "json" ? report.dump(2) + "\n" : render_reconstruct_text(report));
    });
  }
  if (*bounds_cmd) {
    return run_guarded([&] {
      const auto base = parse_log_base(bounds_opts.log_base);
      if (bounds_opts.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int k = 1; k <= bounds_n; ++k) {
          const auto b = entropy_bounds(bounds_n, k, base);
          rows.push_back({{"k", k}, {"lower", b.lower}, {"upper", b.upper}});
        }
        std::cout << nlohmann::json{{"schema_version", report_schema_version}, {"n", bounds_n}, {"rows", rows}}.dump(2)
                  << '\n';
      } else {
        std::cout << bounds_csv(bounds_n, base);
      }
    });
  }
  if (*coal_cmd) {
    return run_guarded([&] {
      const auto cfg = make_config(coal_opts);
      const auto h1 = load_graph(coal_file1, coal_opts.input_format);
      const auto h2 = load_graph(coal_file2, coal_opts.input_format);
      const auto rep = coalescence_report(h1, coal_v1, h2, coal_v2, cfg.base, cfg.tol);
      std::cout << (coal_opts.format == "json" ? coalescence_json(rep).dump(2) + "\n" : render_coalescence_text(rep));
    });
  }
  if (*orbit_cmd) {
    return run_guarded([&] {
      const auto g = load_graph(orbit_file, "auto");
      const auto op = automorphism_orbits(g, automorphism_cap());
      const auto base = parse_log_base(orbit_opts.log_base);
      const double ia = partition_entropy(op.orbits, g.order(), base);
      if (orbit_opts.format == "json") {
        nlohmann::json orbits = nlohmann::json::array();
        for (const auto& o : op.orbits) orbits.push_back(o.members());
        std::cout << nlohmann::json{{"schema_version", report_schema_version},
                                    {"orbits", orbits},
                                    {"generators", op.generator_count},
                                    {"orbital_entropy", ia}}
                         .dump(2)
                  << '\n';
      } else {
        for (const auto& o : op.orbits) {
          std::cout << '{';
          for (std::size_t i = 0; i < o.size(); ++i) std::cout << (i ? "," : "") << o.members()[i];
          std::cout << "}\n";
        }
        std::cout << "generators: " << op.generator_count << "\norbital entropy I_a: " << detail::fixed(ia) << '\n';
      }
    });
  }
  return kOk;
}
