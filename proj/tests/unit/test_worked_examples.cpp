#include <gtest/gtest.h>

#include "logtorsor/error.hpp"
#include "logtorsor/modelkit.hpp"
#include "logtorsor/worked_examples.hpp"

using namespace logtorsor;

namespace {

const Check* find_check(const ReproductionReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(WorkedExamples, PExample) {
  const auto r = reproduce("p-example");
  EXPECT_EQ(r.component_group, FiniteAbelianGroup({2, 2}));
  ASSERT_EQ(r.verdicts.size(), 2u);
  for (const auto& v : r.verdicts) EXPECT_EQ(v.kind, VerdictKind::FppfExtension);
  EXPECT_TRUE(r.all_pass()) << r.to_text();
  // c = 2: the second singular point is already regular, and the printed
  // coefficient of the strict transform does not reduce correctly.
  EXPECT_EQ(r.count(CheckStatus::Discrepancy), 2u) << r.to_text();
  const Check* t = find_check(r, "tangent_dimension (4,0)");
  ASSERT_TRUE(t);
  EXPECT_EQ(t->status, CheckStatus::Discrepancy);
  EXPECT_EQ(t->computed, "2");
}

TEST(WorkedExamples, PExampleWithTwoNonRegularCenters) {
  const auto r = reproduce("p-example", {.p = 5, .c = 7});
  EXPECT_TRUE(r.all_pass()) << r.to_text();
  EXPECT_EQ(r.count(CheckStatus::Discrepancy), 1u) << r.to_text();
  EXPECT_EQ(find_check(r, "tangent_dimension (4,0)")->status, CheckStatus::Pass);
}

TEST(WorkedExamples, PExampleOtherPrimes) {
  for (const auto& [p, c] : {std::pair{7L, 2L}, std::pair{7L, 3L}, std::pair{11L, 2L}}) {
    const auto r = reproduce("p-example", {.p = p, .c = c});
    EXPECT_TRUE(r.all_pass()) << r.to_text();
    EXPECT_EQ(r.component_group, FiniteAbelianGroup({2, 2}));
  }
}

TEST(WorkedExamples, LExample) {
  const auto r = reproduce("l-example");
  EXPECT_EQ(r.component_group, FiniteAbelianGroup({3}));
  ASSERT_EQ(r.verdicts.size(), 2u);
  EXPECT_EQ(r.verdicts[0].kind, VerdictKind::LogOnly);
  EXPECT_EQ(r.verdicts[0].gamma, (RatVector{Rational(2, 3), Rational(1, 3), Rational(0)}));
  EXPECT_TRUE(r.all_pass()) << r.to_text();
  const Check* printed = find_check(r, "printed_vertical_part (0,l)-inf");
  ASSERT_TRUE(printed);
  EXPECT_EQ(printed->status, CheckStatus::Discrepancy);
  EXPECT_EQ(printed->expected, "(1/3, 1/3, 0)");
  EXPECT_EQ(printed->computed, "(2/3, 1/3, 0)");
}

TEST(WorkedExamples, LExampleIndependentOfAuxiliaryPrime) {
  for (long l : {7L, 11L}) {
    const auto r = reproduce("l-example", {.c = l});
    EXPECT_EQ(r.component_group, FiniteAbelianGroup({3}));
    EXPECT_EQ(r.verdicts[0].kind, VerdictKind::LogOnly);
    EXPECT_TRUE(r.all_pass()) << r.to_text();
  }
}

TEST(WorkedExamples, CaseDataIsConsistent) {
  for (const char* id : {"p-example", "l-example"}) {
    const auto ex = example_case(id);
    EXPECT_TRUE(validate(ex.fiber).ok);
    for (const auto& d : ex.divisors) {
      Integer deg = 0;
      for (std::size_t i = 0; i < d.incidence.b.size(); ++i)
        deg += d.incidence.b[i] * ex.fiber.multiplicities[i];
      EXPECT_EQ(deg, 0) << d.name;
    }
  }
}

TEST(WorkedExamples, SectionReductionsFromCharts) {
  // (0, +-5) on y^2 = x^6 - 26 x^3 + 25 lands in chart2 at y = +-5, u = 0, w = 5 / y.
  const auto up = blowup_point(curve_charts(3, 5, 5)[0], 0, 0);
  const auto& c2 = up[1].chart;
  for (long y : {5L, -5L}) {
    const std::vector<Integer> pt{y, 0, 5 / y};
    for (const auto& e : c2.equations) EXPECT_EQ(e.evaluate(pt), 0);
    EXPECT_EQ(up[1].to_base[0].evaluate(pt), 0);
    EXPECT_EQ(up[1].to_base[1].evaluate(pt), y);
  }
  // Q0 = (1, 0) in chart1: x = 1, v = 0, w = 5, on the strict transform w = 0 mod 5.
  const std::vector<Integer> q0{1, 0, 5};
  for (const auto& e : up[0].chart.equations) EXPECT_EQ(e.evaluate(q0), 0);
}

TEST(WorkedExamples, BadParameters) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::CapExceeded;
  };
  EXPECT_EQ(code([] { reproduce("q-example"); }), ErrorCode::UnknownExample);
  EXPECT_EQ(code([] { reproduce("p-example", {.p = 5, .c = 5}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code([] { reproduce("p-example", {.p = 9, .c = 2}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code([] { reproduce("l-example", {.p = 5}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code([] { reproduce("l-example", {.c = 3}); }), ErrorCode::InvalidInput);
}

TEST(WorkedExamples, TextReport) {
  const auto text = reproduce("l-example").to_text();
  EXPECT_NE(text.find("Phi = Z/3"), std::string::npos);
  EXPECT_NE(text.find("[discrepancy] printed_vertical_part"), std::string::npos);
}
