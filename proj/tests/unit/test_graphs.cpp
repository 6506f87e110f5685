#include <gtest/gtest.h>

#include <numeric>
#include <queue>

#include "logtorsor/dual_graph.hpp"
#include "logtorsor/error.hpp"
#include "random_graph.hpp"

using namespace logtorsor;
using logtorsor::testkit::brute_force_cycles;
using logtorsor::testkit::random_connected_multigraph;

namespace {

DualGraph theta() { return DualGraph({"A", "B"}, {{0, 1}, {0, 1}, {0, 1}}); }

DualGraph tree5() { return DualGraph({"a", "b", "c", "d", "e"}, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}); }

// Squares 0-1-2-3 and 0-1-2-4 sharing the edges 0-1 and 1-2.
DualGraph squares_sharing_two() {
  return DualGraph({"0", "1", "2", "3", "4"},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 0}});
}

std::size_t gcd_of_intersections(const std::vector<Cycle>& cycles) {
  std::size_t g = 0;
  for (const auto& a : cycles)
    for (const auto& b : cycles) {
      std::vector<std::size_t> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      g = std::gcd(g, common.size());
    }
  return g;
}

// Fundamental cycles of a BFS spanning tree, as sorted edge sets.
std::vector<Cycle> fundamental_cycles(const DualGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<long> parent_edge(n, -1), parent(n, -1), depth(n, 0);
  std::vector<bool> seen(n, false), tree_edge(g.edge_count(), false);
  std::queue<std::size_t> q;
  seen[0] = true;
  q.push(0);
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      auto [a, b] = g.edges()[e];
      if (a != v) std::swap(a, b);
      if (a != v || seen[b]) continue;
      seen[b] = true;
      tree_edge[e] = true;
      parent[b] = static_cast<long>(v);
      parent_edge[b] = static_cast<long>(e);
      depth[b] = depth[v] + 1;
      q.push(b);
    }
  }
  std::vector<Cycle> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (tree_edge[e]) continue;
    auto [a, b] = g.edges()[e];
    Cycle c{e};
    long x = static_cast<long>(a), y = static_cast<long>(b);
    while (x != y) {
      if (depth[x] < depth[y]) std::swap(x, y);
      c.push_back(static_cast<std::size_t>(parent_edge[x]));
      x = parent[x];
    }
    std::sort(c.begin(), c.end());
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST(Graphs, Betti1) {
  EXPECT_EQ(betti1(DualGraph::polygon(4)), 1u);
  EXPECT_EQ(betti1(tree5()), 0u);
  EXPECT_EQ(betti1(theta()), 2u);
}

TEST(Graphs, RejectsBadGraphs) {
  EXPECT_THROW(DualGraph({"A", "A"}, {}), Error);
  EXPECT_THROW(DualGraph({"A"}, {{0, 1}}), Error);
  try {
    DualGraph::from_labels({"A", "B"}, {{"A", "C"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidGraph);
  }
}

TEST(Graphs, CyclesOfSmallGraphs) {
  EXPECT_TRUE(enumerate_cycles(tree5()).empty());
  const auto poly = enumerate_cycles(DualGraph::polygon(7));
  ASSERT_EQ(poly.size(), 1u);
  EXPECT_EQ(poly[0].size(), 7u);
  const auto th = enumerate_cycles(theta());
  ASSERT_EQ(th.size(), 3u);
  for (const auto& c : th) EXPECT_EQ(c.size(), 2u);
  const auto loop = enumerate_cycles(DualGraph({"A"}, {{0, 0}}));
  ASSERT_EQ(loop.size(), 1u);
  EXPECT_EQ(loop[0], (Cycle{0}));
}

TEST(Graphs, C2Examples) {
  EXPECT_EQ(c2(DualGraph::polygon(6)), 6u);
  EXPECT_EQ(c2(squares_sharing_two()), 2u);
  EXPECT_EQ(c2(theta()), 1u);
  EXPECT_EQ(c2(tree5()), 0u);
}

TEST(Graphs, ChiodoExamples) {
  const auto p6 = DualGraph::polygon(6);
  const auto r3 = chiodo_check(p6, 3);
  EXPECT_TRUE(r3.holds);
  ASSERT_TRUE(r3.predicted);
  EXPECT_EQ(*r3.predicted, FiniteAbelianGroup({3}));
  const auto r4 = chiodo_check(p6, 4);
  EXPECT_FALSE(r4.holds);
  EXPECT_FALSE(r4.predicted);
  EXPECT_FALSE(chiodo_check(theta(), 3).holds);
  const auto tree = chiodo_check(tree5(), 5);
  EXPECT_TRUE(tree.holds);
  EXPECT_TRUE(tree.predicted->is_trivial());
}

TEST(Graphs, CycleCap) {
  // K4 with doubled edges has far more than 10 cycles.
  std::vector<DualGraph::Edge> edges;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      edges.emplace_back(a, b);
      edges.emplace_back(a, b);
    }
  const DualGraph g({"a", "b", "c", "d"}, edges);
  try {
    enumerate_cycles(g, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
  EXPECT_THROW(c2(g, 10), Error);
}

TEST(Graphs, GraphToFiber) {
  const auto tri = graph_to_fiber(DualGraph::polygon(3));
  EXPECT_EQ(tri.matrix, (IntMatrix{{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}));
  EXPECT_EQ(graph_to_fiber(DualGraph({"A", "B"}, {{0, 1}, {0, 1}})).matrix,
            (IntMatrix{{-2, 2}, {2, -2}}));
  EXPECT_EQ(graph_to_fiber(DualGraph({"A"}, {{0, 0}})).matrix, (IntMatrix{{0}}));
  try {
    graph_to_fiber(DualGraph({"A", "B"}, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DisconnectedGraph);
  }
}

TEST(GraphsProperty, CyclesMatchBruteForce) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const DualGraph g = random_connected_multigraph(rng, 6, 10);
    const auto cycles = enumerate_cycles(g);
    EXPECT_EQ(cycles, brute_force_cycles(g));
    EXPECT_EQ(c2(g), gcd_of_intersections(cycles));
  }
}

TEST(GraphsProperty, FundamentalCyclesAreEnumeratedAndCountBetti) {
  std::mt19937 rng(99);
  for (int t = 0; t < 300; ++t) {
    const DualGraph g = random_connected_multigraph(rng, 8, 12);
    const auto fund = fundamental_cycles(g);
    EXPECT_EQ(fund.size(), betti1(g));
    const auto cycles = enumerate_cycles(g);
    for (const auto& c : fund)
      EXPECT_TRUE(std::binary_search(cycles.begin(), cycles.end(), c));
  }
}

TEST(GraphsProperty, GraphToFiberIsValid) {
  std::mt19937 rng(17);
  for (int t = 0; t < 300; ++t) {
    const auto f = graph_to_fiber(random_connected_multigraph(rng, 8, 12));
    EXPECT_TRUE(validate(f).ok) << validate(f).diagnostic;
  }
}

TEST(GraphsProperty, ChiodoCriterionEquivalence) {
  std::mt19937 rng(31337);
  for (int t = 0; t < 300; ++t) {
    const DualGraph g = random_connected_multigraph(rng, 8, 12);
    const FiniteAbelianGroup phi = component_group(graph_to_fiber(g));
    for (long r = 2; r <= 6; ++r) {
      const bool structural =
          torsion_subgroup(phi, r) == FiniteAbelianGroup::elementary(r, betti1(g));
      EXPECT_EQ(chiodo_check(g, r).holds, structural) << "r=" << r << " sample " << t;
    }
  }
}
