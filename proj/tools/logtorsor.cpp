// Command-line front end over the JSON document formats.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "logtorsor/divisors.hpp"
#include "logtorsor/dual_graph.hpp"
#include "logtorsor/error.hpp"
#include "logtorsor/fiber.hpp"
#include "logtorsor/io.hpp"
#include "logtorsor/modelkit.hpp"
#include "logtorsor/worked_examples.hpp"

namespace {

using namespace logtorsor;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitLimit = 3;

struct Output {
  Json json;
  std::string text;
};

io::DivisorDocument load_divisor(const std::string& source) {
  const Json j = io::load_document(source);
  std::filesystem::path dir;
  if (source.find('{') == std::string::npos) dir = std::filesystem::path(source).parent_path();
  return io::divisor_from_json(j, dir);
}

std::vector<long> parse_coords(const std::string& text, long prime, std::size_t min_size,
                               std::size_t max_size) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(((v % prime) + prime) % prime);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidInput, "bad coordinate '" + item + "' in '" + text + "'");
    }
  }
  if (out.size() < min_size || out.size() > max_size)
    throw Error(ErrorCode::InvalidInput, "wrong number of coordinates in '" + text + "'");
  return out;
}

std::string rat_list(const RatVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

Output run_chiodo(const std::string& src, long r, std::size_t cap) {
  if (r < 2) throw Error(ErrorCode::InvalidInput, "--r must be at least 2");
  const DualGraph g = io::graph_from_json(io::load_document(src));
  const ChiodoResult res = chiodo_check(g, r, cap);
  std::ostringstream t;
  t << "b1 = " << res.b1 << ", c2 = " << res.c2 << ", r = " << r << ": "
    << (res.holds ? "J[r] finite and flat, Phi[r] = " + res.predicted->to_string()
                  : std::string("criterion fails"))
    << '\n';
  return {io::chiodo_to_json(res), t.str()};
}

Output run_compgroup(const std::string& src) {
  const IntersectionData f = io::fiber_from_json(io::load_document(src));
  const FiniteAbelianGroup g = component_group(f);
  return {io::group_to_json(g), "Phi = " + g.to_string() + "\n"};
}

Output run_extend(const std::string& src) {
  const auto d = load_divisor(src);
  const VerticalPart v = extend_divisor(d.fiber, d.incidence);
  std::ostringstream t;
  for (std::size_t i = 0; i < v.q.size(); ++i)
    t << d.fiber.labels[i] << ": " << v.q[i].get_str() << '\n';
  return {io::vertical_part_to_json(d.fiber, v), t.str()};
}

Output run_verdict(const std::string& src) {
  const auto d = load_divisor(src);
  const Verdict v = gamma_and_verdict(d.fiber, d.incidence);
  return {io::verdict_to_json(v),
          std::string(to_string(v.kind)) + ", gamma = (" + rat_list(v.gamma) + ")\n"};
}

Output run_pairing(const std::string& s_src, const std::string& t_src) {
  const auto s = load_divisor(s_src);
  const auto t = load_divisor(t_src);
  if (s.fiber.labels != t.fiber.labels || s.fiber.matrix != t.fiber.matrix ||
      s.fiber.multiplicities != t.fiber.multiplicities)
    throw Error(ErrorCode::InvalidInput, "the two divisors live on different fibers");
  const Rational v = monodromy_pairing(s.fiber, s.incidence, t.incidence);
  return {Json{{"pairing", v.get_str()}}, "<s, t> = " + v.get_str() + " mod Z\n"};
}

Output run_singular(const std::string& src, std::uint64_t cap) {
  const AffineChart c = io::chart_from_json(io::load_document(src));
  const auto pts = singular_points_mod_p(c, cap);
  Json arr = Json::array();
  std::string text;
  for (const auto& p : pts) {
    arr.push_back(io::point_to_json(p));
    text += p.to_string() + "\n";
  }
  if (pts.empty()) text = "no singular points mod " + std::to_string(c.prime) + "\n";
  return {Json{{"prime", c.prime}, {"points", arr}}, text};
}

Output run_regular(const std::string& src, const std::string& point) {
  const AffineChart c = io::chart_from_json(io::load_document(src));
  const FpPoint p{parse_coords(point, c.prime, c.variables.size(), c.variables.size())};
  const TangentDimension td = tangent_dimension(c, p);
  return {Json{{"point", io::point_to_json(p)},
               {"tangent_dimension", td.dimension},
               {"regular", td.is_regular}},
          p.to_string() + ": dim m/m^2 = " + std::to_string(td.dimension) +
              (td.is_regular ? ", regular\n" : ", not regular\n")};
}

Output run_blowup(const std::string& src, const std::string& center) {
  const AffineChart c = io::chart_from_json(io::load_document(src));
  const auto ab = parse_coords(center, c.prime, 2, 2);
  const auto charts = blowup_point(c, ab[0], ab[1]);
  Json arr = Json::array();
  std::ostringstream t;
  for (const auto& bc : charts) {
    Json j = io::chart_to_json(bc.chart);
    j["name"] = bc.chart.name;
    j["to_base"] = {bc.to_base[0].to_string(), bc.to_base[1].to_string()};
    arr.push_back(j);
    t << bc.chart.name << " (";
    for (std::size_t i = 0; i < bc.chart.variables.size(); ++i)
      t << (i ? ", " : "") << bc.chart.variables[i];
    t << ")\n";
    for (const auto& e : bc.chart.equations) t << "  " << e.to_string() << " = 0\n";
    t << "  base: " << c.variables[0] << " = " << bc.to_base[0].to_string() << ", "
      << c.variables[1] << " = " << bc.to_base[1].to_string() << '\n';
  }
  return {Json{{"charts", arr}}, t.str()};
}

Output run_reproduce(const std::string& id, std::optional<long> p, std::optional<long> c,
                     std::optional<long> l) {
  ExampleParams params;
  params.p = p;
  params.c = l ? l : c;
  const ReproductionReport r = reproduce(id, params);
  return {io::report_to_json(r), r.to_text()};
}

void emit_error(ErrorCode code, const std::string& message) {
  std::cerr << io::error_to_json(code, message).dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsor extension over regular models: dual graphs, component groups, "
               "vertical divisors and blow-up charts."};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::size_t cap = 0;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--cap", cap, "Enumeration cap (cycles or points; 0 = default)");

  std::string in1, in2, point, center, example;
  long r = 0;
  std::optional<long> opt_p, opt_c, opt_l;

  auto* chiodo = app.add_subcommand("chiodo", "Check the b1/c2 criterion for J[r] on a graph");
  chiodo->add_option("graph", in1, "Graph JSON file or inline document")->required();
  chiodo->add_option("--r", r, "Torsion order r")->required();

  auto* compgroup = app.add_subcommand("compgroup", "Component group of a fiber");
  compgroup->add_option("fiber", in1, "Fiber JSON")->required();

  auto* extend = app.add_subcommand("extend", "Vertical part of an extended divisor");
  extend->add_option("divisor", in1, "Divisor JSON")->required();

  auto* verdict = app.add_subcommand("verdict", "gamma and fppf/log verdict");
  verdict->add_option("divisor", in1, "Divisor JSON")->required();

  auto* pairing = app.add_subcommand("pairing", "Monodromy pairing of two divisors");
  pairing->add_option("s", in1, "Divisor JSON")->required();
  pairing->add_option("t", in2, "Divisor JSON")->required();

  auto* singular = app.add_subcommand("singular", "Singular points of a chart mod p");
  singular->add_option("chart", in1, "Chart JSON")->required();

  auto* regular = app.add_subcommand("regular", "dim m/m^2 at a special-fiber point");
  regular->add_option("chart", in1, "Chart JSON")->required();
  regular->add_option("--point", point, "Coordinates a,b[,c]")->required();

  auto* blowup = app.add_subcommand("blowup", "Blow-up charts at (x - a, y - b, p)");
  blowup->add_option("chart", in1, "Chart JSON")->required();
  blowup->add_option("--center", center, "Center a,b")->required();

  auto* repro = app.add_subcommand("reproduce", "Reproduce a worked example");
  repro->add_option("id", example, "p-example or l-example")->required();
  repro->add_option("--p", opt_p, "Residue characteristic p");
  repro->add_option("--c", opt_c, "Parameter c (p-example)");
  repro->add_option("--l", opt_l, "Auxiliary prime l (l-example)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error(ErrorCode::InvalidInput, e.what());
    return kExitInvalid;
  }

  try {
    Output out;
    if (chiodo->parsed())
      out = run_chiodo(in1, r, cap ? cap : kDefaultCycleCap);
    else if (compgroup->parsed())
      out = run_compgroup(in1);
    else if (extend->parsed())
      out = run_extend(in1);
    else if (verdict->parsed())
      out = run_verdict(in1);
    else if (pairing->parsed())
      out = run_pairing(in1, in2);
    else if (singular->parsed())
      out = run_singular(in1, cap ? cap : kDefaultPointCap);
    else if (regular->parsed())
      out = run_regular(in1, point);
    else if (blowup->parsed())
      out = run_blowup(in1, center);
    else
      out = run_reproduce(example, opt_p, opt_c, opt_l);

    if (format == "json")
      std::cout << out.json.dump() << '\n';
    else
      std::cout << out.text;
    return kExitOk;
  } catch (const Error& e) {
    emit_error(e.code(), e.what());
    return is_limit_error(e.code()) ? kExitLimit : kExitInvalid;
  }
}
