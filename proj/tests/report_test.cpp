#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include "lambda_cdp/report.hpp"

namespace lambda_cdp {
namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LAMBDA_CDP_BIN) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(LAMBDA_CDP_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

TEST(Report, KeysAreStable) {
  const auto r = analyze(cubic_example_graph(), {});
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  EXPECT_EQ(keys, analysis_report_keys());
  ASSERT_FALSE(r["eigenvalues"].empty());
  for (const auto& e : r["eigenvalues"]) {
    std::vector<std::string> ek;
    for (const auto& [k, v] : e.items()) ek.push_back(k);
    EXPECT_EQ(ek, eigenvalue_entry_keys());
  }
  EXPECT_EQ(r["schema_version"], report_schema_version);
  EXPECT_EQ(r["eigenvalues"].size(), 10u);
}

TEST(Report, LaplacianOfK2) {
  AnalysisConfig cfg;
  cfg.params = UniversalParams::laplacian();
  cfg.preset = "laplacian";
  const auto r = analyze(make_complete(2), cfg);
  ASSERT_EQ(r["eigenvalues"].size(), 2u);
  EXPECT_NEAR(r["eigenvalues"][0]["lambda"].get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(r["eigenvalues"][1]["lambda"].get<double>(), 2.0, 1e-12);
  for (const auto& e : r["eigenvalues"]) EXPECT_EQ(e["core"], nlohmann::json({1, 2}));
}

TEST(Report, SingularSectionForP3) {
  const auto r = analyze(make_path(3), {});
  const auto& s = r["singular"];
  EXPECT_EQ(s["eta"], 1);
  EXPECT_EQ(s["slim"], true);
  EXPECT_EQ(s["minimal_configuration"], true);
  EXPECT_EQ(s["bipartite_mc"], true);
  EXPECT_EQ(s["periphery"], nlohmann::json({2}));
}

TEST(Report, TargetLambdaFiltersAndRejects) {
  AnalysisConfig cfg;
  cfg.target_lambda = 2.0;
  const auto r = analyze(cubic_example_graph(), cfg);
  ASSERT_EQ(r["eigenvalues"].size(), 1u);
  EXPECT_EQ(r["eigenvalues"][0]["cdp"], nlohmann::json({{1, 2, 3, 4, 5, 6, 10, 11, 12}, {7, 8, 9}}));
  cfg.target_lambda = 0.5;
  EXPECT_THROW(analyze(cubic_example_graph(), cfg), NotEigenvalueError);
}

TEST(Report, Reconstruct) {
  const auto r = reconstruct(cubic_example_graph(), {}, 1.0, 2.0);
  EXPECT_EQ(r["index_layers"], nlohmann::json({{1, 3}, {2}}));
  EXPECT_EQ(r["mu_cdp"], nlohmann::json({{1, 2, 3, 4, 5, 6, 10, 11, 12}, {7, 8, 9}}));
  EXPECT_THROW(reconstruct(make_path(5), {}, 0.0, 0.0), NotEquitableError);
}

TEST(Report, BoundsCsv) {
  const auto csv = bounds_csv(3, LogBase::e);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,lower,upper");
  EXPECT_NE(csv.find("2,0.636514,0.636514"), std::string::npos);
  EXPECT_NE(csv.find("3,0.000000,0.000000"), std::string::npos);
}

TEST(Cli, AnalyzeIsDeterministic) {
  const auto a = run_cli("analyze " + data("cubic_example.txt") + " --format json");
  const auto b = run_cli("analyze " + data("cubic_example.txt") + " --format json");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["nullity"], 0);
  const auto t1 = run_cli("analyze " + data("cubic_example.txt"));
  const auto t2 = run_cli("analyze " + data("cubic_example.txt"));
  EXPECT_EQ(t1.out, t2.out);
  EXPECT_NE(t1.out.find("{1,2,3,4,5,6} {7,8,9} {10,11,12}"), std::string::npos);
}

TEST(Cli, JsonInputMatchesEdgeList) {
  const auto a = run_cli("analyze " + data("p3.txt") + " --format json");
  const auto b = run_cli("analyze " + data("p3.json") + " --format json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("analyze " + temp_file("loop.txt", "n 2\ne 1 1\n")).code, 1);
  EXPECT_EQ(run_cli("analyze /nonexistent/graph.txt").code, 1);
  EXPECT_EQ(run_cli("analyze " + temp_file("split.txt", "n 4\ne 1 2\ne 3 4\n")).code, 2);
  EXPECT_EQ(run_cli("reconstruct " + temp_file("p5.txt", "n 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n") +
                    " --lambda 0 --mu 0")
                .code,
            4);
  EXPECT_EQ(run_cli("reconstruct " + data("cubic_example.txt") + " --lambda 1 --mu 5").code, 5);
  EXPECT_EQ(run_cli("reconstruct " + data("cubic_example.txt") + " --lambda 1 --mu 2").code, 0);
  EXPECT_EQ(run_cli("coalesce " + data("p3.txt") + " 2 " + data("p3.txt") + " 1").code, 6);
  EXPECT_EQ(run_cli("coalesce " + data("p3.txt") + " 1 " + data("p3.txt") + " 1").code, 0);
  EXPECT_EQ(run_cli("bounds 12").code, 0);
}

TEST(Cli, VertexCapOverride) {
  const std::string c10 = temp_file("c10.txt", serialize_edge_list(make_cycle(10)));
  EXPECT_EQ(run_cli("orbits " + c10).code, 0);
  EXPECT_EQ(run_cli("orbits " + c10 + " --format json").code, 0);
  const auto capped = run_cli("orbits " + c10);
  EXPECT_NE(capped.out.find("{1,2,3,4,5,6,7,8,9,10}"), std::string::npos);
  const std::string cmd = "LAMBDA_CDP_MAX_N=5 " + std::string(LAMBDA_CDP_BIN) + " orbits " + c10 + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 7);
}

TEST(Cli, BoundsOutput) {
  const auto r = run_cli("bounds 12");
  EXPECT_NE(r.out.find("6,0.693147,1.589027"), std::string::npos);
}

}  // namespace
}  // namespace lambda_cdp
