#include <gtest/gtest.h>

#include "logtorsor/error.hpp"
#include "logtorsor/io.hpp"

using namespace logtorsor;
using io::Json;

namespace {

const std::string kData = LOGTORSOR_DATA_DIR;

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::CapExceeded;
}

}  // namespace

TEST(Io, Numbers) {
  EXPECT_EQ(io::to_json(Rational(2, 3)), "2/3");
  EXPECT_EQ(io::to_json(Rational(-4, 6)), "-2/3");
  EXPECT_EQ(io::to_json(Rational(5)), "5");
  EXPECT_EQ(io::to_json(Integer(7)), 7);
  const Integer big("123456789012345678901234567890");
  EXPECT_EQ(io::to_json(big), "123456789012345678901234567890");
  EXPECT_EQ(io::integer_from_json(io::to_json(big)), big);
  EXPECT_EQ(io::integer_from_json(Json(-3)), -3);
  EXPECT_EQ(error_of([] { io::integer_from_json(Json(1.5)); }), ErrorCode::InvalidInput);
  EXPECT_EQ(error_of([] { io::integer_from_json(Json("1/2")); }), ErrorCode::InvalidInput);
}

TEST(Io, FiberRoundTrip) {
  const auto f = io::fiber_from_json(io::load_document(kData + "/fiber-B.json"));
  EXPECT_EQ(f.labels, (std::vector<std::string>{"G1", "G2", "G3"}));
  const auto again = io::fiber_from_json(io::fiber_to_json(f));
  EXPECT_EQ(again.matrix, f.matrix);
  EXPECT_EQ(again.multiplicities, f.multiplicities);
  EXPECT_EQ(error_of([] { io::fiber_from_json(io::load_document(kData + "/malformed.json")); }),
            ErrorCode::InvalidFiber);
  EXPECT_EQ(error_of([] { io::fiber_from_json(Json{{"components", {"a"}}}); }),
            ErrorCode::InvalidInput);
}

TEST(Io, InlineAndFileDocuments) {
  const auto j = io::load_document(R"({"vertices": ["A"], "edges": [["A", "A"]]})");
  EXPECT_EQ(io::graph_from_json(j).edge_count(), 1u);
  EXPECT_EQ(error_of([] { io::load_document(kData + "/does-not-exist.json"); }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(error_of([] { io::load_document("{not json"); }), ErrorCode::InvalidInput);
}

TEST(Io, GraphRoundTrip) {
  const auto g = io::graph_from_json(io::load_document(kData + "/graph-theta.json"));
  EXPECT_EQ(g.edge_count(), 4u);
  const auto again = io::graph_from_json(io::graph_to_json(g));
  EXPECT_EQ(again.edges(), g.edges());
  EXPECT_EQ(error_of([] { io::graph_from_json(Json::parse(R"({"vertices":["A"],"edges":[["A"]]})")); }),
            ErrorCode::InvalidInput);
}

TEST(Io, DivisorWithFiberReference) {
  const auto d = io::divisor_from_json(io::load_document(kData + "/divisor-l.json"), kData);
  EXPECT_EQ(d.base_label, "G3");
  EXPECT_EQ(d.incidence.base_index, 2u);
  EXPECT_EQ(d.incidence.b, (IntVector{1, 0, -1}));
  const auto inline_doc = io::divisor_to_json(d);
  EXPECT_TRUE(inline_doc["fiber"].is_object());
  const auto again = io::divisor_from_json(inline_doc);
  EXPECT_EQ(again.fiber.matrix, d.fiber.matrix);

  Json bad = inline_doc;
  bad["base"] = "G9";
  EXPECT_EQ(error_of([&] { io::divisor_from_json(bad); }), ErrorCode::InvalidInput);
  bad = inline_doc;
  bad["incidence"] = {1, -1};
  EXPECT_EQ(error_of([&] { io::divisor_from_json(bad); }), ErrorCode::InvalidInput);
}

TEST(Io, ChartRoundTrip) {
  const auto c = io::chart_from_json(io::load_document(kData + "/chart-l5.json"));
  EXPECT_EQ(c.prime, 5);
  EXPECT_EQ(c.equations[0].to_string(), "-x^6 + 26*x^3 + y^2 - 25");
  const auto again = io::chart_from_json(io::chart_to_json(c));
  EXPECT_EQ(again.equations, c.equations);
}

TEST(Io, VerdictAndReportShapes) {
  Verdict v{VerdictKind::LogOnly, {Rational(2, 3), Rational(1, 3), Rational(0)}};
  EXPECT_EQ(io::verdict_to_json(v).dump(), R"({"gamma":["2/3","1/3","0"],"kind":"LogOnly"})");
  EXPECT_EQ(io::group_to_json(FiniteAbelianGroup({3})).dump(), R"({"invariant_factors":[3]})");
  const auto report = io::report_to_json(reproduce("l-example"));
  EXPECT_EQ(report["id"], "l-example");
  EXPECT_EQ(report["summary"]["fail"], 0);
  for (const auto& c : report["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c["status"] == "pass" || c["status"] == "discrepancy");
    EXPECT_TRUE(c["provenance"] == "reference" || c["provenance"] == "derived");
  }
  EXPECT_EQ(io::error_to_json(ErrorCode::InvalidFiber, "x").dump(),
            R"({"error":"InvalidFiber","message":"x"})");
}
