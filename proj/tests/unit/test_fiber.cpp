#include <gtest/gtest.h>

#include <random>

#include "logtorsor/dual_graph.hpp"
#include "logtorsor/error.hpp"
#include "logtorsor/fiber.hpp"
#include "random_graph.hpp"

using namespace logtorsor;

namespace {

IntersectionData fiber_a() {
  return {{"G_p2^1", "G_p1^1", "G_p1^2"}, {1, 1, 1},
          IntMatrix{{-4, 2, 2}, {2, -2, 0}, {2, 0, -2}}};
}

IntersectionData fiber_b() {
  return {{"G1", "G2", "G3"}, {1, 1, 1}, IntMatrix{{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}};
}

// Fiber from a tree of -2 curves with the given multiplicities.
IntersectionData tree_fiber(const IntVector& mult,
                            const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t r = mult.size();
  IntersectionData f;
  for (std::size_t i = 0; i < r; ++i) f.labels.push_back("C" + std::to_string(i));
  f.multiplicities = mult;
  f.matrix = IntMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i) f.matrix(i, i) = -2;
  for (auto [a, b] : edges) f.matrix(a, b) = f.matrix(b, a) = 1;
  return f;
}

std::size_t spanning_tree_count(const DualGraph& g) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  std::size_t count = 0;
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != n - 1) continue;
    std::vector<std::size_t> parent(n);
    for (std::size_t v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool acyclic = true;
    for (std::size_t e = 0; e < m && acyclic; ++e) {
      if (!(mask >> e & 1)) continue;
      const auto [a, b] = g.edges()[e];
      const std::size_t ra = find(a), rb = find(b);
      acyclic = ra != rb;
      parent[ra] = rb;
    }
    count += acyclic;
  }
  return count;
}

}  // namespace

TEST(AbelianGroup, Normalization) {
  EXPECT_EQ(FiniteAbelianGroup({4, 6}).invariant_factors(), (IntVector{2, 12}));
  EXPECT_TRUE(FiniteAbelianGroup({1, 1}).is_trivial());
  EXPECT_EQ(FiniteAbelianGroup({2, 3}), FiniteAbelianGroup({6}));
  EXPECT_EQ(FiniteAbelianGroup({2, 2}).to_string(), "Z/2 + Z/2");
  EXPECT_EQ(FiniteAbelianGroup().to_string(), "0");
  EXPECT_EQ(FiniteAbelianGroup({4, 6}).order(), 24);
  EXPECT_EQ(FiniteAbelianGroup({4, 6}).exponent(), 12);
  EXPECT_EQ(FiniteAbelianGroup::elementary(3, 2), FiniteAbelianGroup({3, 3}));
}

TEST(AbelianGroup, TorsionSubgroup) {
  const FiniteAbelianGroup g({2, 12});
  EXPECT_EQ(torsion_subgroup(g, 2), FiniteAbelianGroup({2, 2}));
  EXPECT_EQ(torsion_subgroup(g, 3), FiniteAbelianGroup({3}));
  EXPECT_EQ(torsion_subgroup(g, 5), FiniteAbelianGroup());
}

TEST(Fiber, ExampleGroups) {
  EXPECT_EQ(component_group(fiber_a()), FiniteAbelianGroup({2, 2}));
  EXPECT_EQ(component_group(fiber_b()), FiniteAbelianGroup({3}));
}

TEST(Fiber, NonReducedFibers) {
  // Affine Dynkin diagrams D4, E6, E7, E8 with their multiplicities.
  const auto d4 = tree_fiber({2, 1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const auto e6 = tree_fiber({3, 2, 1, 2, 1, 2, 1}, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  const auto e7 = tree_fiber({1, 2, 3, 4, 3, 2, 1, 2},
                             {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}});
  const auto e8 = tree_fiber({1, 2, 3, 4, 5, 6, 4, 2, 3},
                             {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}});
  for (const auto* f : {&d4, &e6, &e7, &e8}) ASSERT_TRUE(validate(*f).ok) << validate(*f).diagnostic;
  EXPECT_EQ(component_group(d4), FiniteAbelianGroup({2, 2}));
  EXPECT_EQ(component_group(e6), FiniteAbelianGroup({3}));
  EXPECT_EQ(component_group(e7), FiniteAbelianGroup({2}));
  EXPECT_TRUE(component_group(e8).is_trivial());
  EXPECT_TRUE(d4.has_nonunit_multiplicity());
  EXPECT_FALSE(fiber_b().has_nonunit_multiplicity());
}

TEST(Fiber, ValidationDiagnostics) {
  auto check = [](IntersectionData f, const std::string& fragment) {
    const auto v = validate(f);
    EXPECT_FALSE(v.ok);
    EXPECT_NE(v.diagnostic.find(fragment), std::string::npos) << v.diagnostic;
    try {
      require_valid(f);
      ADD_FAILURE() << "expected InvalidFiber";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidFiber);
    }
  };
  auto f = fiber_b();
  f.matrix(1, 0) = 2;
  check(f, "symmetric");
  f = fiber_b();
  f.multiplicities[0] = 0;
  check(f, "multiplicit");
  f = fiber_b();
  f.labels[1] = "G1";
  check(f, "label");
  f = fiber_b();
  f.matrix(0, 0) = -3;
  check(f, "M*n");
  check(IntersectionData{}, "component");
  // Two disjoint -2 pairs: M n = 0 but the support is disconnected.
  check(IntersectionData{{"a", "b", "c", "d"},
                         {1, 1, 1, 1},
                         IntMatrix{{-2, 2, 0, 0}, {2, -2, 0, 0}, {0, 0, -2, 2}, {0, 0, 2, -2}}},
        "connected");
  EXPECT_TRUE(validate(fiber_a()).ok);
}

TEST(Fiber, PresentationCoordinates) {
  const auto pres = component_group_presentation(fiber_b());
  ASSERT_EQ(pres.group, FiniteAbelianGroup({3}));
  const IntVector column{-2, 1, 1};
  EXPECT_EQ(pres.coordinates(column), (IntVector{0}));
  const IntVector a{1, -1, 0}, a2{2, -2, 0}, a3{3, -3, 0};
  EXPECT_NE(pres.coordinates(a), (IntVector{0}));
  EXPECT_NE(pres.coordinates(a2), (IntVector{0}));
  EXPECT_NE(pres.coordinates(a), pres.coordinates(a2));
  EXPECT_EQ(pres.coordinates(a3), (IntVector{0}));
}

TEST(Fiber, JrFiniteness) {
  const auto p6 = graph_to_fiber(DualGraph::polygon(6));
  EXPECT_TRUE(jr_finiteness(p6, 1, 2));
  EXPECT_TRUE(jr_finiteness(p6, 1, 3));
  EXPECT_FALSE(jr_finiteness(p6, 1, 4));
}

TEST(FiberProperty, GroupOrderCountsSpanningTrees) {
  std::mt19937 rng(4242);
  for (int t = 0; t < 200; ++t) {
    const DualGraph g = testkit::random_connected_multigraph(rng, 6, 10);
    EXPECT_EQ(component_group(graph_to_fiber(g)).order(), spanning_tree_count(g));
  }
}

TEST(FiberProperty, PolygonGroups) {
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto phi = component_group(graph_to_fiber(DualGraph::polygon(n)));
    EXPECT_EQ(phi, FiniteAbelianGroup({static_cast<long>(n)})) << n;
  }
}

TEST(FiberProperty, CoordinatesAreAHomomorphismKillingTheImage) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> small(-4, 4);
  for (int t = 0; t < 60; ++t) {
    const auto f = graph_to_fiber(testkit::random_connected_multigraph(rng, 5, 8));
    const auto pres = component_group_presentation(f);
    const std::size_t r = f.size();
    auto random_l = [&] {
      IntVector a(r);
      Integer s = 0;
      for (std::size_t i = 0; i + 1 < r; ++i) {
        a[i] = small(rng);
        s += a[i];
      }
      a[r - 1] = -s;
      return a;
    };
    const IntVector a = random_l(), b = random_l();
    IntVector sum(r);
    for (std::size_t i = 0; i < r; ++i) sum[i] = a[i] + b[i];
    const auto ca = pres.coordinates(a), cb = pres.coordinates(b), cs = pres.coordinates(sum);
    const auto& d = pres.group.invariant_factors();
    for (std::size_t k = 0; k < d.size(); ++k) {
      Integer expect = ca[k] + cb[k];
      mpz_fdiv_r(expect.get_mpz_t(), expect.get_mpz_t(), d[k].get_mpz_t());
      EXPECT_EQ(cs[k], expect);
    }
    for (std::size_t j = 0; j < r; ++j) {
      const IntVector col = f.matrix.col(j);
      for (const auto& x : pres.coordinates(col)) EXPECT_EQ(x, 0);
    }
  }
}
