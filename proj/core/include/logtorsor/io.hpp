#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "logtorsor/divisors.hpp"
#include "logtorsor/dual_graph.hpp"
#include "logtorsor/error.hpp"
#include "logtorsor/fiber.hpp"
#include "logtorsor/modelkit.hpp"
#include "logtorsor/worked_examples.hpp"

namespace logtorsor::io {

using Json = nlohmann::ordered_json;

/// Reads `source` as inline JSON when it starts with '{', else as a file path.
/// Throws Error(InvalidInput) on unreadable files or malformed JSON.
Json load_document(std::string_view source);

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const RatVector& v);
/// Accepts JSON integers and decimal strings.
Integer integer_from_json(const Json& j);

DualGraph graph_from_json(const Json& j);
Json graph_to_json(const DualGraph& g);

IntersectionData fiber_from_json(const Json& j);
Json fiber_to_json(const IntersectionData& f);

struct DivisorDocument {
  IntersectionData fiber;
  HorizontalIncidence incidence;
  std::string base_label;
};

/// A "fiber" given as a string is a path resolved against `relative_to`.
DivisorDocument divisor_from_json(const Json& j, const std::filesystem::path& relative_to = {});
Json divisor_to_json(const DivisorDocument& d);

AffineChart chart_from_json(const Json& j, std::string name = "chart");
Json chart_to_json(const AffineChart& c);

Json group_to_json(const FiniteAbelianGroup& g);
Json chiodo_to_json(const ChiodoResult& r);
Json vertical_part_to_json(const IntersectionData& f, const VerticalPart& v);
Json verdict_to_json(const Verdict& v);
Json point_to_json(const FpPoint& p);
Json report_to_json(const ReproductionReport& r);

/// {"error": <code name>, "message": <text>}
Json error_to_json(ErrorCode code, std::string_view message);

}  // namespace logtorsor::io
