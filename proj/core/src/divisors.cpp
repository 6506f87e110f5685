#include "logtorsor/divisors.hpp"

#include <algorithm>

#include "logtorsor/error.hpp"

namespace logtorsor {

std::string_view to_string(VerdictKind kind) noexcept {
  return kind == VerdictKind::FppfExtension ? "FppfExtension" : "LogOnly";
}

namespace {

void check_incidence(const IntersectionData& f, const HorizontalIncidence& h) {
  require_valid(f);
  if (h.b.size() != f.size())
    throw Error(ErrorCode::InvalidInput, "incidence vector has length " +
                                             std::to_string(h.b.size()) + ", fiber has " +
                                             std::to_string(f.size()) + " components");
  if (h.base_index >= f.size()) throw Error(ErrorCode::InvalidInput, "base index out of range");
  Integer degree = 0;
  for (std::size_t j = 0; j < f.size(); ++j) degree += f.multiplicities[j] * h.b[j];
  if (degree != 0)
    throw Error(ErrorCode::DegreeNotZero,
                "horizontal divisor has degree " + degree.get_str() + " on the special fiber");
}

}  // namespace

VerticalPart extend_divisor(const IntersectionData& f, const HorizontalIncidence& h) {
  check_incidence(f, h);
  const auto sol = solve_affine_rational(f.matrix, h.b);
  // Degree zero puts b in the image of M (ker M^T = Q n).
  if (!sol) throw Error(ErrorCode::InvalidFiber, "M q = -b has no rational solution");

  // ker M = Q n, so shift by a multiple of n to vanish on the base component.
  const Rational shift = sol->particular[h.base_index] / Rational(f.multiplicities[h.base_index]);
  VerticalPart vp;
  vp.q.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    vp.q[i] = sol->particular[i] - shift * Rational(f.multiplicities[i]);

  const RatVector mq = f.matrix * std::span<const Rational>(vp.q);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (mq[i] + h.b[i] != 0)
      throw Error(ErrorCode::InvalidFiber, "vertical part failed exact substitution check");
  return vp;
}

Verdict gamma_and_verdict(const IntersectionData& f, const HorizontalIncidence& h) {
  const VerticalPart vp = extend_divisor(f, h);
  Verdict v;
  v.gamma.reserve(vp.q.size());
  for (const auto& q : vp.q) v.gamma.push_back(frac_part(q));
  const bool integral =
      std::all_of(v.gamma.begin(), v.gamma.end(), [](const Rational& g) { return g == 0; });
  v.kind = integral ? VerdictKind::FppfExtension : VerdictKind::LogOnly;
  return v;
}

PhiClass class_in_phi(const IntersectionData& f, const HorizontalIncidence& h) {
  check_incidence(f, h);
  const auto pres = component_group_presentation(f);
  PhiClass cls;
  cls.coordinates = pres.coordinates(h.b);
  cls.order = 1;
  const auto& d = pres.group.invariant_factors();
  for (std::size_t k = 0; k < d.size(); ++k)
    cls.order = lcm(cls.order, d[k] / gcd(d[k], cls.coordinates[k]));
  return cls;
}

Rational monodromy_pairing(const IntersectionData& f, const HorizontalIncidence& s,
                           const HorizontalIncidence& t) {
  check_incidence(f, s);
  const VerticalPart qt = extend_divisor(f, t);
  Rational acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += Rational(s.b[i]) * qt.q[i];
  return frac_part(acc);
}

bool coprime_shortcut(const Integer& group_order, const FiniteAbelianGroup& phi) {
  if (group_order < 1) throw Error(ErrorCode::InvalidInput, "group order must be >= 1");
  return gcd(group_order, phi.order()) == 1;
}

}  // namespace logtorsor
