#include <benchmark/benchmark.h>

#include <random>

#include "logtorsor/divisors.hpp"
#include "logtorsor/dual_graph.hpp"
#include "logtorsor/fiber.hpp"
#include "logtorsor/linalg.hpp"
#include "logtorsor/modelkit.hpp"
#include "logtorsor/worked_examples.hpp"

using namespace logtorsor;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> entry(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(6)->Arg(12)->Arg(24);

static void BM_ComponentGroupPolygon(benchmark::State& state) {
  const auto f = graph_to_fiber(DualGraph::polygon(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(component_group(f));
}
BENCHMARK(BM_ComponentGroupPolygon)->Arg(10)->Arg(50);

// Complete graph K_n: cycle count grows quickly with n.
static void BM_C2CompleteGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("E" + std::to_string(i));
  std::vector<DualGraph::Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  const DualGraph g(names, edges);
  for (auto _ : state) benchmark::DoNotOptimize(c2(g));
}
BENCHMARK(BM_C2CompleteGraph)->Arg(5)->Arg(6)->Arg(7);

static void BM_VerdictLExample(benchmark::State& state) {
  const auto ex = example_case("l-example");
  for (auto _ : state)
    benchmark::DoNotOptimize(gamma_and_verdict(ex.fiber, ex.divisors[0].incidence));
}
BENCHMARK(BM_VerdictLExample);

static void BM_SingularPoints(benchmark::State& state) {
  const long p = state.range(0);
  const auto chart = curve_charts(p, 2, p)[0];
  for (auto _ : state) benchmark::DoNotOptimize(singular_points_mod_p(chart));
}
BENCHMARK(BM_SingularPoints)->Arg(5)->Arg(31)->Arg(101);

static void BM_BlowupAndCheckRegularity(benchmark::State& state) {
  const auto chart = curve_charts(3, 5, 5)[0];
  for (auto _ : state) {
    std::size_t regular = 0;
    for (const auto& bc : blowup_point(chart, 0, 0))
      for (const auto& pt : fiber_points(bc.chart))
        if (lies_above_center(bc, pt, 0, 0)) regular += tangent_dimension(bc.chart, pt).is_regular;
    benchmark::DoNotOptimize(regular);
  }
}
BENCHMARK(BM_BlowupAndCheckRegularity);

static void BM_LocalMultiplicity(benchmark::State& state) {
  const std::vector<std::string> xy{"x", "y"};
  const std::vector<Polynomial> gens{parse_polynomial("x^3 - y^2", xy),
                                     parse_polynomial("x^2 - y^3", xy)};
  for (auto _ : state) benchmark::DoNotOptimize(local_multiplicity(gens, {0, 0}, 7));
}
BENCHMARK(BM_LocalMultiplicity);

static void BM_ReproducePExample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reproduce("p-example"));
}
BENCHMARK(BM_ReproducePExample)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
