#include <cmath>

#include <gtest/gtest.h>

#include "lambda_cdp/singular.hpp"
#include "support/oracles.hpp"

namespace lambda_cdp {
namespace {

// K5 without the edge 4-5: the kernel is spanned by e4 - e5.
Graph twin_triangle() {
  return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5}});
}

TEST(KernelAnalysis, Paths) {
  const auto ka = kernel_analysis(make_path(5));
  EXPECT_EQ(ka.eta, 1u);
  ASSERT_TRUE(ka.core);
  EXPECT_EQ(ka.core->core, (VertexSet{1, 3, 5}));
  EXPECT_EQ(ka.cdp->blocks, (std::vector<VertexSet>{{1, 3, 5}, {2, 4}}));
  EXPECT_FALSE(kernel_analysis(make_complete(2)).core);
  EXPECT_THROW(kernel_analysis(Graph(4, {{1, 2}, {3, 4}})), DisconnectedGraphError);
}

TEST(Slim, SmallGraphs) {
  EXPECT_TRUE(is_slim(make_path(3)));
  EXPECT_TRUE(is_slim(make_path(5)));
  EXPECT_TRUE(is_slim(make_cycle(4)));
  EXPECT_TRUE(singular_report(make_cycle(4)).all_core);
  EXPECT_TRUE(is_slim(twin_triangle()));
  EXPECT_THROW(is_slim(make_complete(3)), PreconditionError);
}

TEST(MinimalConfiguration, Examples) {
  EXPECT_TRUE(is_minimal_configuration(make_path(1)).minimal_configuration);
  EXPECT_TRUE(is_minimal_configuration(make_path(3)).minimal_configuration);
  EXPECT_TRUE(is_minimal_configuration(make_path(5)).minimal_configuration);
  EXPECT_TRUE(is_minimal_configuration(make_path(7)).minimal_configuration);
  EXPECT_FALSE(is_minimal_configuration(make_cycle(4)).minimal_configuration);

  const auto p5 = singular_report(make_path(5));
  EXPECT_EQ(p5.periphery, (VertexSet{2, 4}));
  EXPECT_EQ(p5.core_graph_order, 3u);
  EXPECT_EQ(p5.eta_core_graph, 3u);
}

TEST(MinimalConfiguration, Bipartite) {
  EXPECT_TRUE(is_bipartite_mc(make_path(3)));
  EXPECT_TRUE(is_bipartite_mc(make_path(1)));
  EXPECT_FALSE(is_bipartite_mc(make_complete(3)));
  EXPECT_FALSE(is_bipartite_mc(make_cycle(4)));
}

TEST(MinimalConfiguration, BipartiteStructureOnAllSmallGraphs) {
  // Bipartite minimal configurations have an independent core with exactly one
  // more vertex than the periphery, and are slim.
  for (const auto& g : testing::connected_graphs_up_to(7)) {
    const auto r = singular_report(g);
    if (!r.bipartite_mc) continue;
    const auto core = kernel_analysis(g).core->core;
    EXPECT_TRUE(is_independent(g, core));
    EXPECT_EQ(core.size(), r.periphery.size() + 1);
    EXPECT_TRUE(r.slim);
  }
}

TEST(SlimEntropy, PathsSitAtTheLowerBound) {
  const auto p3 = slim_entropy_check(make_path(3));
  EXPECT_TRUE(p3.slim);
  EXPECT_NEAR(p3.i0, -(2.0 / 3) * std::log(2.0 / 3) - (1.0 / 3) * std::log(1.0 / 3), 1e-12);
  EXPECT_NEAR(p3.i0, 0.6365, 5e-5);
  EXPECT_TRUE(p3.at_minimum);

  const auto p7 = slim_entropy_check(make_path(7));
  EXPECT_NEAR(p7.i0, -(4.0 / 7) * std::log(4.0 / 7) - (3.0 / 7) * std::log(3.0 / 7), 1e-12);
  EXPECT_TRUE(p7.consistent);
  EXPECT_THROW(slim_entropy_check(make_complete(2)), PreconditionError);
}

TEST(SlimEntropy, BiconditionalOnAllSmallSingularGraphs) {
  std::size_t singular = 0, non_slim = 0;
  for (const auto& g : testing::connected_graphs_up_to(7)) {
    const auto r = singular_report(g);
    if (!r.is_singular) continue;
    ++singular;
    const auto c = slim_entropy_check(g);
    EXPECT_TRUE(c.consistent);
    if (!c.slim) {
      ++non_slim;
      EXPECT_GT(c.i0, c.lower_bound + 1e-9);
    }
  }
  EXPECT_GT(singular, 0u);
  EXPECT_GT(non_slim, 0u);
}

TEST(Coalescence, PathsGiveP5) {
  const auto r = coalescence_report(make_path(3), 1, make_path(3), 1);
  EXPECT_EQ(r.graph.order(), 5);
  EXPECT_EQ(r.eta, 1u);
  EXPECT_TRUE(r.eta_formula_holds);
  EXPECT_EQ(r.k, 3u);
  EXPECT_TRUE(r.core_count_formula_holds);
  EXPECT_TRUE(r.result_slim);
  EXPECT_NEAR(r.i0, -0.6 * std::log(0.6) - 0.4 * std::log(0.4), 1e-12);
  EXPECT_TRUE(r.min_bound_holds);
}

TEST(Coalescence, FourCycles) {
  const auto r = coalescence_report(make_cycle(4), 1, make_cycle(4), 1);
  EXPECT_EQ(r.eta, 3u);
  EXPECT_EQ(r.k, 7u);
  EXPECT_TRUE(r.eta_formula_holds);
  EXPECT_TRUE(r.core_count_formula_holds);
  EXPECT_TRUE(r.result_slim);
}

TEST(Coalescence, MinBoundCanFail) {
  // Both inputs have I0 = 0.6730 but the coalescence drops to 0.6365: the nullity,
  // core-count and slimness relations still hold.
  const auto r = coalescence_report(twin_triangle(), 4, twin_triangle(), 4);
  EXPECT_TRUE(r.eta_formula_holds);
  EXPECT_TRUE(r.core_count_formula_holds);
  EXPECT_TRUE(r.result_slim);
  EXPECT_NEAR(r.i0_h1, -0.4 * std::log(0.4) - 0.6 * std::log(0.6), 1e-12);
  EXPECT_NEAR(r.i0, -(3.0 / 9) * std::log(3.0 / 9) - (6.0 / 9) * std::log(6.0 / 9), 1e-12);
  EXPECT_FALSE(r.min_bound_holds);
  EXPECT_FALSE(r.between);
}

TEST(Coalescence, Preconditions) {
  auto message = [](auto&& fn) {
    try {
      fn();
    } catch (const PreconditionError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message([] { coalescence_report(make_path(3), 2, make_path(3), 1); }).find("first graph"), std::string::npos);
  EXPECT_NE(message([] { coalescence_report(make_path(3), 1, make_path(3), 2); }).find("second graph"), std::string::npos);
  // Vertex 3 of P5 is 0-core but a cut vertex.
  EXPECT_NE(message([] { coalescence_report(make_path(5), 3, make_path(3), 1); }).find("cut vertex"), std::string::npos);
  EXPECT_NE(message([] { coalescence_report(make_complete(2), 1, make_path(3), 1); }).find("not singular"),
            std::string::npos);
  EXPECT_NE(message([] { coalescence_report(make_path(3), 9, make_path(3), 1); }).find("out of range"),
            std::string::npos);
  EXPECT_THROW(coalescence_report(Graph(4, {{1, 2}, {3, 4}}), 1, make_path(3), 1), DisconnectedGraphError);
}

TEST(Coalescence, RelationsOverAllValidSmallPairs) {
  // Nullity, core count and slimness on every admissible pair of graphs up to 5 vertices.
  std::vector<std::pair<Graph, Vertex>> inputs;
  for (const auto& g : testing::connected_graphs_up_to(5)) {
    const auto r = singular_report(g);
    if (!r.is_singular || !r.slim) continue;
    for (Vertex v = 1; v <= g.order(); ++v)
      if (!r.periphery.contains(v) && !is_cut_vertex(g, v)) inputs.emplace_back(g, v);
  }
  ASSERT_GT(inputs.size(), 10u);
  for (const auto& [g1, v1] : inputs)
    for (const auto& [g2, v2] : inputs) {
      const auto r = coalescence_report(g1, v1, g2, v2);
      EXPECT_TRUE(r.eta_formula_holds);
      EXPECT_TRUE(r.core_count_formula_holds);
      EXPECT_TRUE(r.result_slim);
    }
}

}  // namespace
}  // namespace lambda_cdp
