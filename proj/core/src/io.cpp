#include "logtorsor/io.hpp"

#include <fstream>
#include <sstream>

#include "logtorsor/error.hpp"

namespace logtorsor {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidFiber: return "InvalidFiber";
    case ErrorCode::DegreeNotZero: return "DegreeNotZero";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::PointNotOnFiber: return "PointNotOnFiber";
    case ErrorCode::CenterNotOnFiber: return "CenterNotOnFiber";
    case ErrorCode::NotHypersurface: return "NotHypersurface";
    case ErrorCode::NotTriangular: return "NotTriangular";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key, const char* doc) {
  if (!j.is_object()) bad(std::string(doc) + " document must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string(doc) + " document is missing \"" + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) bad(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

IntVector integer_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of integers");
  IntVector out;
  for (const auto& e : j) out.push_back(integer_from_json(e));
  return out;
}

}  // namespace

Json load_document(std::string_view source) {
  std::string text;
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && source[first] == '{') {
    text = source;
  } else {
    std::ifstream in{std::string(source)};
    if (!in) bad("cannot read '" + std::string(source) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad("malformed JSON in '" + std::string(source.substr(0, 80)) + "': " + e.what());
  }
}

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json to_json(const Rational& x) {
  Rational r = x;
  r.canonicalize();
  return r.get_str();
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<unsigned long long>()))
                                  : Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) bad("not an integer: " + j.dump());
    return x;
  }
  bad("expected an integer, got " + j.dump());
}

DualGraph graph_from_json(const Json& j) {
  auto vertices = string_list(field(j, "vertices", "graph"), "vertices");
  const Json& edges = field(j, "edges", "graph");
  if (!edges.is_array()) bad("edges must be an array of [a, b] pairs");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      bad("each edge must be a pair of vertex labels, got " + e.dump());
    pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return DualGraph::from_labels(std::move(vertices), pairs);
}

Json graph_to_json(const DualGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({g.vertices()[a], g.vertices()[b]});
  return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

IntersectionData fiber_from_json(const Json& j) {
  IntersectionData f;
  f.labels = string_list(field(j, "components", "fiber"), "components");
  f.multiplicities = integer_list(field(j, "multiplicities", "fiber"), "multiplicities");
  const Json& m = field(j, "matrix", "fiber");
  if (!m.is_array()) bad("matrix must be an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : m) rows.push_back(integer_list(r, "matrix rows"));
  for (const auto& r : rows)
    if (r.size() != rows.size()) bad("matrix must be square");
  f.matrix = IntMatrix::from_rows(rows);
  require_valid(f);
  return f;
}

Json fiber_to_json(const IntersectionData& f) {
  Json mult = Json::array(), matrix = Json::array();
  for (const auto& n : f.multiplicities) mult.push_back(to_json(n));
  for (std::size_t i = 0; i < f.matrix.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < f.matrix.cols(); ++k) row.push_back(to_json(f.matrix(i, k)));
    matrix.push_back(row);
  }
  return Json{{"components", f.labels}, {"multiplicities", mult}, {"matrix", matrix}};
}

DivisorDocument divisor_from_json(const Json& j, const std::filesystem::path& relative_to) {
  DivisorDocument d;
  const Json& fj = field(j, "fiber", "divisor");
  if (fj.is_string()) {
    std::filesystem::path p = fj.get<std::string>();
    if (p.is_relative()) p = relative_to / p;
    d.fiber = fiber_from_json(load_document(p.string()));
  } else {
    d.fiber = fiber_from_json(fj);
  }
  d.incidence.b = integer_list(field(j, "incidence", "divisor"), "incidence");
  const Json& base = field(j, "base", "divisor");
  if (!base.is_string()) bad("base must be a component label");
  d.base_label = base.get<std::string>();
  const auto idx = d.fiber.index_of(d.base_label);
  if (!idx) bad("base '" + d.base_label + "' is not a fiber component");
  d.incidence.base_index = *idx;
  if (d.incidence.b.size() != d.fiber.size())
    bad("incidence has " + std::to_string(d.incidence.b.size()) + " entries for " +
        std::to_string(d.fiber.size()) + " components");
  return d;
}

Json divisor_to_json(const DivisorDocument& d) {
  Json b = Json::array();
  for (const auto& x : d.incidence.b) b.push_back(to_json(x));
  return Json{{"fiber", fiber_to_json(d.fiber)}, {"incidence", b}, {"base", d.base_label}};
}

AffineChart chart_from_json(const Json& j, std::string name) {
  auto vars = string_list(field(j, "variables", "chart"), "variables");
  auto eqs = string_list(field(j, "equations", "chart"), "equations");
  const Json& p = field(j, "prime", "chart");
  if (!p.is_number_integer()) bad("prime must be an integer");
  unsigned dim = 2;
  if (auto it = j.find("expected_dim"); it != j.end()) {
    if (!it->is_number_unsigned()) bad("expected_dim must be a nonnegative integer");
    dim = it->get<unsigned>();
  }
  return make_chart(std::move(name), std::move(vars), eqs, p.get<long>(), dim);
}

Json chart_to_json(const AffineChart& c) {
  Json eqs = Json::array();
  for (const auto& e : c.equations) eqs.push_back(e.to_string());
  return Json{{"variables", c.variables},
              {"equations", eqs},
              {"prime", c.prime},
              {"expected_dim", c.expected_dim}};
}

Json group_to_json(const FiniteAbelianGroup& g) {
  Json f = Json::array();
  for (const auto& d : g.invariant_factors()) f.push_back(to_json(d));
  return Json{{"invariant_factors", f}};
}

Json chiodo_to_json(const ChiodoResult& r) {
  Json out{{"holds", r.holds}, {"b1", r.b1}, {"c2", r.c2}};
  out["predicted"] = r.predicted ? group_to_json(*r.predicted) : Json(nullptr);
  return out;
}

Json vertical_part_to_json(const IntersectionData& f, const VerticalPart& v) {
  return Json{{"components", f.labels}, {"q", to_json(v.q)}};
}

Json verdict_to_json(const Verdict& v) {
  return Json{{"gamma", to_json(v.gamma)}, {"kind", std::string(to_string(v.kind))}};
}

Json point_to_json(const FpPoint& p) { return p.coords; }

Json report_to_json(const ReproductionReport& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj{{"name", c.name},
            {"status", std::string(to_string(c.status))},
            {"provenance", std::string(to_string(c.provenance))},
            {"expected", c.expected},
            {"computed", c.computed}};
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(cj);
  }
  return Json{{"id", r.id},
              {"p", r.p},
              {"c", to_json(r.c)},
              {"residue_prime", r.residue_prime},
              {"component_group", group_to_json(r.component_group)},
              {"verdicts", verdicts},
              {"checks", checks},
              {"summary",
               {{"pass", r.count(CheckStatus::Pass)},
                {"fail", r.count(CheckStatus::Fail)},
                {"discrepancy", r.count(CheckStatus::Discrepancy)}}}};
}

Json error_to_json(ErrorCode code, std::string_view message) {
  return Json{{"error", std::string(error_name(code))}, {"message", std::string(message)}};
}

}  // namespace io
}  // namespace logtorsor
