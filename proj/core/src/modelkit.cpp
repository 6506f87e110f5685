#include "logtorsor/modelkit.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "logtorsor/error.hpp"

namespace logtorsor {

namespace {

__extension__ using i128 = __int128;

long mod(long x, long p) {
  const long r = x % p;
  return r < 0 ? r + p : r;
}

long mod(const Integer& x, long p) {
  return static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)));
}

long inverse_mod(long a, long p) {
  Integer inv;
  const Integer za(a), zp(p);
  if (mpz_invert(inv.get_mpz_t(), za.get_mpz_t(), zp.get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: not invertible");
  return inv.get_si();
}

/// Polynomial with coefficients reduced mod p, for fast point evaluation.
class ModPoly {
 public:
  ModPoly(const Polynomial& f, long p) : p_(p), nvars_(f.variable_count()) {
    for (const auto& [e, c] : f.terms()) {
      const long r = mod(c, p);
      if (r) terms_.emplace_back(e, r);
    }
  }

  long eval(const std::vector<long>& x) const {
    long acc = 0;
    for (const auto& [e, c] : terms_) {
      long t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t = static_cast<long>((i128)t * x[i] % p_);
      acc = (acc + t) % p_;
    }
    return acc;
  }

 private:
  long p_;
  std::size_t nvars_;
  std::vector<std::pair<Exponents, long>> terms_;
};

std::size_t rank_mod_p(std::vector<std::vector<long>> rows, long p) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const long inv = inverse_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = static_cast<long>((i128)x * inv % p);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const long f = rows[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < ncols; ++j)
        rows[i][j] = mod(static_cast<long>((rows[i][j] - (i128)f * rows[rank][j]) % p), p);
    }
    ++rank;
  }
  return rank;
}

std::uint64_t checked_point_count(long p, std::size_t n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / static_cast<std::uint64_t>(p))
      throw Error(ErrorCode::CapExceeded, "p^n exceeds the enumeration cap of " +
                                              std::to_string(cap));
    total *= static_cast<std::uint64_t>(p);
  }
  return total;
}

std::string fresh_name(std::string base, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += '_';
  return base;
}

// Replaces every coefficient p^s * u (p not dividing u) by u * (t * w)^s.
Polynomial extract_prime(const Polynomial& f, std::size_t t, std::size_t w, long p) {
  Polynomial out(f.variables());
  const Integer zp(p);
  for (const auto& [e, c] : f.terms()) {
    Integer u;
    const auto s = static_cast<unsigned>(mpz_remove(u.get_mpz_t(), c.get_mpz_t(), zp.get_mpz_t()));
    Exponents ne = e;
    ne[t] += s;
    ne[w] += s;
    out.add_term(ne, u);
  }
  return out;
}

Polynomial shift(const std::vector<std::string>& vars, std::size_t i, const Integer& by) {
  return Polynomial::variable(vars, i) + Polynomial::constant(vars, by);
}

}  // namespace

std::string FpPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

AffineChart make_chart(std::string name, std::vector<std::string> variables,
                       const std::vector<std::string>& equations, long prime,
                       unsigned expected_dim) {
  AffineChart chart;
  chart.name = std::move(name);
  chart.variables = std::move(variables);
  for (const auto& text : equations) chart.equations.push_back(parse_equation(text, chart.variables));
  chart.prime = prime;
  chart.expected_dim = expected_dim;
  validate_chart(chart);
  return chart;
}

void validate_chart(const AffineChart& chart) {
  if (chart.variables.empty()) throw Error(ErrorCode::InvalidInput, "chart has no variables");
  if (std::set<std::string>(chart.variables.begin(), chart.variables.end()).size() !=
      chart.variables.size())
    throw Error(ErrorCode::InvalidInput, "chart variables are not distinct");
  if (chart.equations.empty()) throw Error(ErrorCode::InvalidInput, "chart has no equations");
  for (const auto& eq : chart.equations)
    if (eq.variables() != chart.variables)
      throw Error(ErrorCode::InvalidInput, "chart equation uses a different variable list");
  if (chart.prime < 2 || mpz_probab_prime_p(Integer(chart.prime).get_mpz_t(), 25) == 0)
    throw Error(ErrorCode::InvalidInput, "chart prime " + std::to_string(chart.prime) +
                                             " is not prime");
  if (chart.prime > (1L << 31))
    throw Error(ErrorCode::InvalidInput, "chart prime is too large for point enumeration");
}

std::vector<FpPoint> fiber_points(const AffineChart& chart, std::uint64_t cap) {
  validate_chart(chart);
  const long p = chart.prime;
  const std::size_t n = chart.variables.size();
  const std::uint64_t total = checked_point_count(p, n, cap);

  std::vector<ModPoly> eqs;
  for (const auto& f : chart.equations) eqs.emplace_back(f, p);

  std::vector<FpPoint> out;
  std::vector<long> x(n, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    if (std::all_of(eqs.begin(), eqs.end(), [&](const ModPoly& f) { return f.eval(x) == 0; }))
      out.push_back(FpPoint{x});
    // Odometer, last coordinate fastest, so output is lexicographic.
    for (std::size_t i = n; i-- > 0;) {
      if (++x[i] < p) break;
      x[i] = 0;
    }
  }
  return out;
}

std::vector<FpPoint> singular_points_mod_p(const AffineChart& chart, std::uint64_t cap) {
  const long p = chart.prime;
  const std::size_t n = chart.variables.size();
  std::vector<std::vector<ModPoly>> jac;
  for (const auto& f : chart.equations) {
    auto& row = jac.emplace_back();
    for (std::size_t i = 0; i < n; ++i) row.emplace_back(f.derivative(i), p);
  }

  std::vector<FpPoint> out;
  for (auto& pt : fiber_points(chart, cap)) {
    std::vector<std::vector<long>> rows;
    for (const auto& drow : jac) {
      auto& r = rows.emplace_back();
      for (const auto& d : drow) r.push_back(d.eval(pt.coords));
    }
    if (rank_mod_p(std::move(rows), p) + 1 < n) out.push_back(std::move(pt));
  }
  return out;
}

TangentDimension tangent_dimension(const AffineChart& chart, const FpPoint& point) {
  validate_chart(chart);
  const long p = chart.prime;
  const std::size_t n = chart.variables.size();
  if (point.coords.size() != n)
    throw Error(ErrorCode::InvalidInput, "point has " + std::to_string(point.coords.size()) +
                                             " coordinates, chart has " + std::to_string(n));
  IntVector lift;
  for (long c : point.coords) {
    if (c < 0 || c >= p) throw Error(ErrorCode::InvalidInput, "point coordinate outside [0, p)");
    lift.emplace_back(c);
  }

  const Integer zp(p);
  std::vector<std::vector<long>> rows;
  for (const auto& f : chart.equations) {
    const Integer value = f.evaluate(lift);
    if (!mpz_divisible_p(value.get_mpz_t(), zp.get_mpz_t()))
      throw Error(ErrorCode::PointNotOnFiber,
                  "point " + point.to_string() + " is not on the special fiber");
    auto& row = rows.emplace_back();
    for (std::size_t i = 0; i < n; ++i) row.push_back(mod(f.derivative(i).evaluate(lift), p));
    row.push_back(mod(Integer(value / zp), p));
  }
  TangentDimension td;
  td.dimension = static_cast<unsigned>(n + 1 - rank_mod_p(std::move(rows), p));
  td.is_regular = td.dimension == chart.expected_dim;
  return td;
}

std::array<BlowupChart, 3> blowup_point(const AffineChart& chart, const Integer& a,
                                        const Integer& b) {
  validate_chart(chart);
  if (chart.variables.size() != 2 || chart.equations.size() != 1)
    throw Error(ErrorCode::NotHypersurface,
                "blow-up needs a single equation in two variables");
  const long p = chart.prime;
  const Integer zp(p);
  const Polynomial& g = chart.equations.front();
  {
    const IntVector center{a, b};
    if (!mpz_divisible_p(g.evaluate(center).get_mpz_t(), zp.get_mpz_t()))
      throw Error(ErrorCode::CenterNotOnFiber, "center (" + a.get_str() + "," + b.get_str() +
                                                   ") is not on the special fiber");
  }
  const std::string& xn = chart.variables[0];
  const std::string& yn = chart.variables[1];
  const std::string vn = fresh_name("v", chart.variables);
  const std::string un = fresh_name("u", chart.variables);
  const std::string wn = fresh_name("w", chart.variables);

  // Chart1 and chart2 share one construction: the local coordinate t of the
  // dividing direction, the slope s of the other one, and w = p / t.
  auto directional = [&](bool along_x) {
    const std::string& kept = along_x ? xn : yn;
    const std::string& slope = along_x ? vn : un;
    const Integer& t0 = along_x ? a : b;
    const Integer& s0 = along_x ? b : a;

    const std::vector<std::string> local{"t", "s", "w"};
    const Polynomial t = Polynomial::variable(local, 0);
    const Polynomial s = Polynomial::variable(local, 1);
    const Polynomial moving = Polynomial::constant(local, s0) + t * s;
    const Polynomial fixed = Polynomial::constant(local, t0) + t;
    Polynomial h = g.compose(along_x ? std::vector{fixed, moving} : std::vector{moving, fixed});
    h = extract_prime(h, 0, 2, p);
    h = h.divide_by_variable_power(0, h.min_degree_in(0));

    BlowupChart out;
    out.chart.variables = {kept, slope, wn};
    const auto& vars = out.chart.variables;
    const Polynomial tt = shift(vars, 0, -t0);  // kept - t0
    const Polynomial img_s = Polynomial::variable(vars, 1);
    const Polynomial img_w = Polynomial::variable(vars, 2);
    out.chart.equations.push_back(h.compose({tt, img_s, img_w}));
    out.chart.equations.push_back(tt * img_w - Polynomial::constant(vars, zp));
    out.chart.prime = p;
    out.chart.expected_dim = chart.expected_dim;
    const Polynomial other = Polynomial::constant(vars, s0) + tt * img_s;
    const Polynomial same = Polynomial::variable(vars, 0);
    out.to_base = along_x ? std::array{same, other} : std::array{other, same};
    return out;
  };

  std::array<BlowupChart, 3> res;
  res[0] = directional(true);
  res[0].chart.name = chart.name + ".chart1";
  res[1] = directional(false);
  res[1].chart.name = chart.name + ".chart2";

  BlowupChart& c3 = res[2];
  c3.chart.name = chart.name + ".chart3";
  c3.chart.variables = {un, vn};
  const auto& v3 = c3.chart.variables;
  const Polynomial xu = Polynomial::constant(v3, a) + Polynomial::variable(v3, 0) * zp;
  const Polynomial yv = Polynomial::constant(v3, b) + Polynomial::variable(v3, 1) * zp;
  Polynomial h3 = g.compose({xu, yv});
  if (!h3.is_zero()) {
    Integer rest;
    const auto k = mpz_remove(rest.get_mpz_t(), h3.content().get_mpz_t(), zp.get_mpz_t());
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), zp.get_mpz_t(), k);
    h3 = h3.divide_exact(pk);
  }
  c3.chart.equations.push_back(h3);
  c3.chart.prime = p;
  c3.chart.expected_dim = chart.expected_dim;
  c3.to_base = {xu, yv};
  return res;
}

bool lies_above_center(const BlowupChart& chart, const FpPoint& point, const Integer& a,
                       const Integer& b) {
  const long p = chart.chart.prime;
  const ModPoly x(chart.to_base[0], p), y(chart.to_base[1], p);
  return x.eval(point.coords) == mod(a, p) && y.eval(point.coords) == mod(b, p);
}

namespace {

void monomials_below(std::size_t nvars, unsigned bound, Exponents& cur, std::size_t i,
                     unsigned used, std::vector<Exponents>& out) {
  if (i == nvars) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = 0; used + k < bound; ++k) {
    cur[i] = k;
    monomials_below(nvars, bound, cur, i + 1, used + k, out);
  }
  cur[i] = 0;
}

unsigned degree_of(const Exponents& e) {
  unsigned s = 0;
  for (unsigned x : e) s += x;
  return s;
}

// dim F_p[x] / (I + m^N) with I given by generators centered at the origin.
std::size_t truncated_quotient_dim(const std::vector<Polynomial>& gens, std::size_t nvars,
                                   unsigned n, long p) {
  std::vector<Exponents> monos;
  Exponents cur(nvars, 0);
  monomials_below(nvars, n, cur, 0, 0, monos);
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

  std::vector<std::vector<long>> rows;
  Exponents prod(nvars);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const unsigned ord = g.lowest_total_degree();
    if (ord >= n) continue;
    for (const auto& m : monos) {
      if (degree_of(m) + ord >= n) continue;
      std::vector<long> row(monos.size(), 0);
      for (const auto& [e, c] : g.terms()) {
        for (std::size_t i = 0; i < nvars; ++i) prod[i] = e[i] + m[i];
        auto it = index.find(prod);
        if (it != index.end()) row[it->second] = mod(c, p);
      }
      rows.push_back(std::move(row));
    }
  }
  return monos.size() - rank_mod_p(std::move(rows), p);
}

}  // namespace

unsigned local_multiplicity(const std::vector<Polynomial>& generators,
                            const std::vector<long>& point, long prime, unsigned degree_cap) {
  if (generators.empty()) throw Error(ErrorCode::InvalidInput, "no generators");
  const auto& vars = generators.front().variables();
  if (point.size() != vars.size())
    throw Error(ErrorCode::InvalidInput, "point dimension differs from variable count");

  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < vars.size(); ++i) images.push_back(shift(vars, i, point[i]));
  std::vector<Polynomial> centered;
  for (const auto& g : generators) {
    if (g.variables() != vars)
      throw Error(ErrorCode::InvalidInput, "generators use different variable lists");
    centered.push_back(g.compose(images).reduced_mod(prime));
  }

  std::size_t prev = 0;
  for (unsigned n = 1; n <= degree_cap; ++n) {
    const std::size_t d = truncated_quotient_dim(centered, vars.size(), n, prime);
    if (n > 1 && d == prev) return static_cast<unsigned>(d);
    prev = d;
  }
  throw Error(ErrorCode::NotStabilized,
              "local length did not stabilize below degree " + std::to_string(degree_cap));
}

namespace {

// c = k * x_i + h(other variables) with k a unit mod p.
std::optional<std::size_t> linear_variable(const Polynomial& c) {
  for (std::size_t i = 0; i < c.variable_count(); ++i) {
    if (c.degree_in(i) != 1) continue;
    std::size_t hits = 0;
    bool pure = true;
    for (const auto& [e, coeff] : c.terms()) {
      if (e[i] != 1) continue;
      ++hits;
      for (std::size_t j = 0; j < e.size(); ++j)
        if (j != i && e[j] != 0) pure = false;
    }
    if (hits == 1 && pure) return i;
  }
  return std::nullopt;
}

// c = k * x_i^d + (terms of lower degree in x_i) with k a unit mod p.
std::optional<std::size_t> monic_variable(const Polynomial& c) {
  for (std::size_t i = 0; i < c.variable_count(); ++i) {
    const unsigned d = c.degree_in(i);
    if (d == 0) continue;
    std::size_t hits = 0;
    bool pure = true;
    for (const auto& [e, coeff] : c.terms()) {
      if (e[i] != d) continue;
      ++hits;
      for (std::size_t j = 0; j < e.size(); ++j)
        if (j != i && e[j] != 0) pure = false;
    }
    if (hits == 1 && pure) return i;
  }
  return std::nullopt;
}

Polynomial reduce_by_monic(Polynomial f, const Polynomial& c, std::size_t var, long p) {
  const unsigned d = c.degree_in(var);
  Exponents lead(c.variable_count(), 0);
  lead[var] = d;
  const long lc_inv = inverse_mod(mod(c.coefficient(lead), p), p);
  for (;;) {
    auto it = std::find_if(f.terms().rbegin(), f.terms().rend(),
                           [&](const auto& t) { return t.first[var] >= d; });
    if (it == f.terms().rend()) return f;
    Exponents shiftexp = it->first;
    shiftexp[var] -= d;
    Polynomial mono(f.variables());
    mono.add_term(shiftexp, it->second * lc_inv);
    f = (f - mono * c).reduced_mod(p);
  }
}

}  // namespace

bool verify_component(const AffineChart& chart, const std::vector<Polynomial>& component) {
  validate_chart(chart);
  const long p = chart.prime;
  const auto& vars = chart.variables;

  std::vector<Polynomial> eqs;
  for (const auto& f : chart.equations) eqs.push_back(f.reduced_mod(p));
  std::vector<Polynomial> comps;
  for (const auto& c : component) {
    if (c.variables() != vars)
      throw Error(ErrorCode::InvalidInput, "component equation uses a different variable list");
    comps.push_back(c.reduced_mod(p));
  }

  for (std::size_t k = 0; k < comps.size(); ++k) {
    const Polynomial c = comps[k];
    if (c.is_zero()) continue;
    if (c.is_constant())
      throw Error(ErrorCode::NotTriangular, "component equation reduces to a nonzero constant");

    if (auto i = linear_variable(c)) {
      Exponents e(vars.size(), 0);
      e[*i] = 1;
      const Integer coeff = c.coefficient(e);
      const long inv = inverse_mod(mod(coeff, p), p);
      Polynomial rest = c;
      rest.add_term(e, -coeff);
      std::vector<Polynomial> images;
      for (std::size_t j = 0; j < vars.size(); ++j)
        images.push_back(j == *i ? rest * Integer(-inv) : Polynomial::variable(vars, j));
      for (auto& f : eqs) f = f.compose(images).reduced_mod(p);
      for (std::size_t j = k + 1; j < comps.size(); ++j)
        comps[j] = comps[j].compose(images).reduced_mod(p);
      continue;
    }
    if (k + 1 != comps.size())
      throw Error(ErrorCode::NotTriangular,
                  "only the last component equation may be nonlinear: " + c.to_string());
    auto i = monic_variable(c);
    if (!i)
      throw Error(ErrorCode::NotTriangular,
                  "component equation is not monic in any variable: " + c.to_string());
    for (auto& f : eqs) f = reduce_by_monic(f, c, *i, p);
  }
  return std::all_of(eqs.begin(), eqs.end(), [](const Polynomial& f) { return f.is_zero(); });
}

Polynomial hyperelliptic_f(long p, const Integer& c, const std::string& var) {
  const std::vector<std::string> vars{var};
  const Polynomial x = Polynomial::variable(vars, 0);
  const auto up = static_cast<unsigned>(p);
  const Integer c2 = c * c;
  return x.pow(2 * up) - x.pow(up) * Integer(1 + c2) + Polynomial::constant(vars, c2);
}

std::array<AffineChart, 2> curve_charts(long p, const Integer& c, long residue_prime) {
  if (p < 3 || p % 2 == 0) throw Error(ErrorCode::InvalidInput, "p must be an odd prime");
  if (c == 1 || c == -1) throw Error(ErrorCode::InvalidInput, "c must differ from +-1");
  const auto up = static_cast<unsigned>(p);
  const Polynomial f = hyperelliptic_f(p, c);

  std::array<AffineChart, 2> charts;
  charts[0].name = "affine-xy";
  charts[0].variables = {"x", "y"};
  {
    const auto& v = charts[0].variables;
    const Polynomial y = Polynomial::variable(v, 1);
    charts[0].equations.push_back(y.pow(2) - f.with_variables(v));
  }
  charts[1].name = "affine-st";
  charts[1].variables = {"s", "t"};
  {
    const auto& v = charts[1].variables;
    Polynomial reversed(v);
    for (const auto& [e, coeff] : f.terms()) reversed.add_term({2 * up - e[0], 0}, coeff);
    charts[1].equations.push_back(Polynomial::variable(v, 1).pow(2) - reversed);
  }
  for (auto& ch : charts) {
    ch.prime = residue_prime;
    ch.expected_dim = 2;
    validate_chart(ch);
  }
  return charts;
}

}  // namespace logtorsor
