#include "achiral/plangraph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "achiral/diagram.hpp"
#include "achiral/diagram_builder.hpp"
#include "achiral/error.hpp"
#include "achiral/json_io.hpp"
#include "achiral/numtheory.hpp"
#include "achiral/selfdual.hpp"
#include "oracles.hpp"

namespace pg = achiral::plangraph;
namespace dg = achiral::diagrams;
namespace oracle = achiral::oracle;
using pg::PlanarMultigraph;
using Notation = std::vector<std::int64_t>;

namespace {

PlanarMultigraph triangle() {
  return PlanarMultigraph(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 5}, {1, 2}, {3, 4}});
}

PlanarMultigraph bond(int n) {
  std::vector<PlanarMultigraph::Edge> edges(static_cast<std::size_t>(n), {0, 1});
  std::vector<int> r0, r1;
  for (int e = 0; e < n; ++e) {
    r0.push_back(2 * e);
    r1.insert(r1.begin(), 2 * e + 1);
  }
  return PlanarMultigraph(2, edges, {r0, r1});
}

PlanarMultigraph cycle(int n) {
  std::vector<PlanarMultigraph::Edge> edges;
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    rot[static_cast<std::size_t>(i)].push_back(2 * i);
    rot[static_cast<std::size_t>((i + 1) % n)].push_back(2 * i + 1);
  }
  return PlanarMultigraph(n, edges, rot);
}

PlanarMultigraph single_loop() { return PlanarMultigraph(1, {{0, 0}}, {{0, 1}}); }

std::uint64_t count(const PlanarMultigraph& g) {
  return static_cast<std::uint64_t>(pg::spanning_tree_count(g));
}

std::vector<PlanarMultigraph> sample_graphs(int how_many, int max_crossings, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PlanarMultigraph> out;
  for (int i = 0; i < how_many; ++i) {
    auto d = dg::compile_rational(oracle::random_notation(rng, max_crossings));
    if (i % 4 == 3) d = dg::connected_sum(d, dg::compile_rational(oracle::random_notation(rng, 5)));
    out.push_back(dg::checkerboard_graph(d, i % 2 ? dg::Color::White : dg::Color::Black));
  }
  return out;
}

}  // namespace

TEST(Construction, ValidatesRotations) {
  EXPECT_THROW(PlanarMultigraph(2, {{0, 1}, {0, 1}, {0, 1}}, {{0, 2, 4}, {1, 3, 5}}),
               achiral::InvalidInput);
  EXPECT_THROW(PlanarMultigraph(2, {{0, 1}}, {{0}, {0}}), achiral::InvalidInput);
  EXPECT_THROW(PlanarMultigraph(2, {{0, 1}}, {{1}, {0}}), achiral::InvalidInput);
  EXPECT_THROW(PlanarMultigraph(3, {{0, 1}}, {{0}, {1}, {}}), achiral::InvalidInput);
  EXPECT_THROW(PlanarMultigraph(2, {{0, 2}}), achiral::InvalidInput);
  EXPECT_EQ(triangle().face_count(), 2);
  EXPECT_EQ(bond(3).face_count(), 3);
}

TEST(Dual, Examples) {
  const auto d = pg::dual(triangle());
  EXPECT_EQ(d.vertex_count(), 2);
  EXPECT_EQ(d.edge_count(), 3);
  EXPECT_TRUE(pg::are_isomorphic(d, bond(3)));
  const auto l = pg::dual(single_loop());
  // A loop bounds two faces, so its dual is a single bridge.
  EXPECT_EQ(l.vertex_count(), 2);
  EXPECT_EQ(l.edge_count(), 1);
  EXPECT_THROW(pg::dual(PlanarMultigraph(2, {{0, 1}})), achiral::InvalidInput);
}

TEST(Dual, IsAnInvolution) {
  for (const auto& g : sample_graphs(100, 14, 1)) {
    const auto dd = pg::dual(pg::dual(g));
    EXPECT_TRUE(pg::are_isomorphic(dd, g));
    EXPECT_TRUE(pg::are_map_isomorphic(dd, g, false));
  }
}

TEST(Dual, BlackDualIsWhite) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto d = dg::compile_rational(oracle::random_notation(rng, 14));
    const auto black = dg::checkerboard_graph(d, dg::Color::Black);
    const auto white = dg::checkerboard_graph(d, dg::Color::White);
    EXPECT_TRUE(pg::are_isomorphic(pg::dual(black), white));
    EXPECT_TRUE(pg::are_map_isomorphic(pg::dual(black), white));
  }
}

TEST(SelfDual, Examples) {
  EXPECT_FALSE(pg::is_self_dual(single_loop()));
  EXPECT_TRUE(pg::is_self_dual(PlanarMultigraph(1, {}, {{}})));
  EXPECT_FALSE(pg::is_self_dual(triangle()));
  const auto fig8 = dg::checkerboard_graph(dg::compile_rational(Notation{2, 2}), dg::Color::Black);
  EXPECT_TRUE(pg::is_self_dual(fig8));
  EXPECT_TRUE(pg::is_self_dual(fig8, pg::SelfDualMode::Map));
  EXPECT_THROW(pg::is_self_dual(cycle(pg::kSelfDualEdgeBudget + 1)), achiral::BudgetExceeded);
}

TEST(SelfDual, WheelsAreSelfDual) {
  for (int n = 3; n <= 8; ++n) {
    // Hub n, rim 0..n-1; spoke i is edge n + i.
    std::vector<PlanarMultigraph::Edge> edges;
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) edges.emplace_back(n, i);
    for (int i = 0; i < n; ++i) {
      // Around rim vertex i counterclockwise: next rim edge, spoke, previous rim edge.
      rot[static_cast<std::size_t>(i)] = {2 * i, 2 * (n + i) + 1, 2 * ((i + n - 1) % n) + 1};
      rot[static_cast<std::size_t>(n)].push_back(2 * (n + i));
    }
    const PlanarMultigraph wheel(n + 1, edges, rot);
    EXPECT_TRUE(pg::is_self_dual(wheel)) << n;
    EXPECT_EQ(count(wheel), oracle::spanning_trees(wheel));
    EXPECT_FALSE(pg::has_cut_vertex(wheel));
  }
}

TEST(SpanningTrees, Examples) {
  EXPECT_EQ(count(triangle()), 3U);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(count(bond(n)), static_cast<std::uint64_t>(n));
  const auto fig8 = dg::checkerboard_graph(dg::compile_rational(Notation{2, 2}), dg::Color::Black);
  EXPECT_EQ(count(fig8), 5U);
  EXPECT_EQ(count(single_loop()), 1U);
  EXPECT_EQ(count(PlanarMultigraph(1, {})), 1U);
}

TEST(SpanningTrees, MatchesSubsetEnumeration) {
  for (const auto& g : sample_graphs(60, 12, 3)) {
    if (g.edge_count() > 16) continue;
    EXPECT_EQ(count(g), oracle::spanning_trees(g));
  }
}

TEST(SpanningTrees, EqualForDual) {
  for (const auto& g : sample_graphs(100, 20, 4)) EXPECT_EQ(pg::spanning_tree_count(g),
                                                            pg::spanning_tree_count(pg::dual(g)));
}

TEST(SpanningTrees, ExactForLargeCounts) {
  // Ninety-three ones give the fraction F(94)/F(93); F(94) exceeds 64 bits.
  const auto d = dg::compile_rational(Notation(93, 1));
  achiral::BigInt a = 0, b = 1;
  for (int i = 0; i < 94; ++i) {
    achiral::BigInt c = a + b;
    a = b;
    b = c;
  }
  EXPECT_EQ(pg::spanning_tree_count(dg::checkerboard_graph(d, dg::Color::Black)), a);
}

TEST(SpanningTrees, DeletionContraction) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (const auto& g : sample_graphs(120, 12, 6)) {
    if (checked == 50) break;
    std::uniform_int_distribution<int> pick(0, g.edge_count() - 1);
    const int e = pick(rng);
    const auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
    if (u == v) continue;
    std::vector<PlanarMultigraph::Edge> deleted, contracted;
    for (int i = 0; i < g.edge_count(); ++i) {
      if (i == e) continue;
      auto [a, b] = g.edges()[static_cast<std::size_t>(i)];
      deleted.emplace_back(a, b);
      auto relabel = [&](int x) {
        if (x == v) x = u;
        return x > v ? x - 1 : x;
      };
      contracted.emplace_back(relabel(a), relabel(b));
    }
    const PlanarMultigraph minus(g.vertex_count(), deleted);
    if (!minus.is_connected()) continue;  // a bridge
    const PlanarMultigraph over(g.vertex_count() - 1, contracted);
    EXPECT_EQ(pg::spanning_tree_count(g), pg::spanning_tree_count(minus) + pg::spanning_tree_count(over));
    ++checked;
  }
  EXPECT_EQ(checked, 50);
}

TEST(CutVertex, Examples) {
  const PlanarMultigraph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  EXPECT_TRUE(pg::has_cut_vertex(bowtie));
  EXPECT_FALSE(pg::has_cut_vertex(triangle()));
  EXPECT_FALSE(pg::has_cut_vertex(bond(4)));
  const auto trefoil = dg::compile_rational(Notation{3});
  const auto sum = dg::connected_sum(trefoil, trefoil);
  EXPECT_TRUE(pg::has_cut_vertex(dg::checkerboard_graph(sum, dg::Color::Black)));
  EXPECT_TRUE(pg::has_cut_vertex(dg::checkerboard_graph(sum, dg::Color::White)));
  EXPECT_FALSE(pg::has_cut_vertex(dg::checkerboard_graph(dg::compile_rational(Notation{2, 2}),
                                                         dg::Color::Black)));
}

TEST(CutVertex, CompositeDiagramsHaveOne) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const auto a = dg::compile_rational(oracle::random_notation(rng, 8));
    const auto b = dg::compile_rational(oracle::random_notation(rng, 8));
    if (a.crossing_count() < 2 || b.crossing_count() < 2) continue;
    const auto sum = dg::connected_sum(a, b);
    EXPECT_TRUE(pg::has_cut_vertex(dg::checkerboard_graph(sum, dg::Color::Black)) ||
                pg::has_cut_vertex(dg::checkerboard_graph(sum, dg::Color::White)));
  }
}

TEST(RealizeSelfDual, Examples) {
  const auto g5 = pg::realize_selfdual(5);
  EXPECT_EQ(g5.vertex_count(), 3);
  EXPECT_EQ(g5.edge_count(), 4);
  EXPECT_EQ(count(g5), 5U);
  EXPECT_THROW(pg::realize_selfdual(77), achiral::NotSumOfTwoSquares);
  const auto g29 = pg::realize_selfdual(29);
  EXPECT_EQ(g29.edge_count(), 8);
  EXPECT_EQ(count(g29), 29U);
  EXPECT_TRUE(pg::is_self_dual(g29));
}

TEST(RealizeSelfDual, SweepPassesChecks) {
  int twelve_edges = 0;
  for (std::uint64_t n = 1; n <= 301; n += 2) {
    if (achiral::numtheory::r2(n) == 0) {
      EXPECT_THROW(pg::realize_selfdual(n), achiral::NotSumOfTwoSquares);
      continue;
    }
    const auto g = pg::realize_selfdual(n);
    EXPECT_EQ(pg::spanning_tree_count(g), n);
    EXPECT_TRUE(pg::is_self_dual(g)) << n;
    EXPECT_TRUE(pg::is_self_dual(g, pg::SelfDualMode::Map)) << n;
    if (g.edge_count() > 0) EXPECT_TRUE(pg::selfdual_tree_bound_check(g));
    if (g.edge_count() == 12) {
      ++twelve_edges;
      EXPECT_GE(count(g), 18U);
    }
  }
  EXPECT_GT(twelve_edges, 0);
}

TEST(TreeBound, Examples) {
  const auto fig8 = dg::checkerboard_graph(dg::compile_rational(Notation{2, 2}), dg::Color::Black);
  EXPECT_TRUE(pg::selfdual_tree_bound_check(fig8));
  EXPECT_THROW(pg::selfdual_tree_bound_check(triangle()), achiral::InvalidInput);
  const auto g = pg::realize_selfdual(1105);
  EXPECT_EQ(g.edge_count() % 2, 0);
  EXPECT_TRUE(pg::selfdual_tree_bound_check(g));
}

TEST(GraphJson, RoundTrip) {
  for (const auto& g : sample_graphs(10, 10, 8)) {
    const auto back = achiral::io::graph_from_json(achiral::io::graph_to_json(g));
    EXPECT_EQ(back.edges(), g.edges());
    EXPECT_EQ(back.rotations(), g.rotations());
  }
  const auto abstract = achiral::io::graph_from_json(
      nlohmann::json::parse(R"({"vertices":3,"edges":[[0,1],[1,2],[2,0]]})"));
  EXPECT_EQ(count(abstract), 3U);
  EXPECT_THROW(pg::dual(abstract), achiral::InvalidInput);
  EXPECT_THROW(achiral::io::graph_from_json(nlohmann::json::parse(R"({"vertices":"x"})")),
               achiral::InvalidInput);
}
