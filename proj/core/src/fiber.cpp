#include "logtorsor/fiber.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "logtorsor/error.hpp"

namespace logtorsor {

FiniteAbelianGroup::FiniteAbelianGroup(IntVector factors) {
  for (const auto& d : factors)
    if (d <= 0) throw Error(ErrorCode::InvalidInput, "group factors must be positive");
  // Diagonal matrix SNF yields the invariant factors of any product of cyclics.
  IntMatrix diag(factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) diag(i, i) = factors[i];
  for (const auto& d : smith_normal_form(diag).diagonal())
    if (d > 1) factors_.push_back(d);
}

FiniteAbelianGroup FiniteAbelianGroup::elementary(const Integer& r, std::size_t k) {
  return FiniteAbelianGroup(IntVector(k, r));
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

Integer FiniteAbelianGroup::exponent() const {
  return factors_.empty() ? Integer(1) : factors_.back();
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    os << (i ? " + " : "") << "Z/" << factors_[i].get_str();
  return os.str();
}

FiniteAbelianGroup torsion_subgroup(const FiniteAbelianGroup& g, const Integer& r) {
  if (r < 1) throw Error(ErrorCode::InvalidInput, "torsion index must be >= 1");
  IntVector parts;
  for (const auto& d : g.invariant_factors()) parts.push_back(gcd(d, r));
  return FiniteAbelianGroup(std::move(parts));
}

std::optional<std::size_t> IntersectionData::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

bool IntersectionData::has_nonunit_multiplicity() const {
  return std::any_of(multiplicities.begin(), multiplicities.end(),
                     [](const Integer& n) { return n != 1; });
}

namespace {

FiberValidation fail(std::string msg) { return {false, std::move(msg)}; }

bool support_connected(const IntMatrix& m) {
  const std::size_t r = m.rows();
  if (r == 0) return false;
  std::vector<bool> seen(r, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < r; ++j)
      if (!seen[j] && j != i && m(i, j) != 0) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
  }
  return count == r;
}

}  // namespace

FiberValidation validate(const IntersectionData& f) {
  const std::size_t r = f.labels.size();
  if (r == 0) return fail("fiber has no components");
  if (f.multiplicities.size() != r)
    return fail("multiplicity vector length differs from component count");
  if (f.matrix.rows() != r || f.matrix.cols() != r)
    return fail("intersection matrix must be " + std::to_string(r) + "x" + std::to_string(r));
  if (std::set<std::string>(f.labels.begin(), f.labels.end()).size() != r)
    return fail("component labels are not distinct");
  for (std::size_t i = 0; i < r; ++i)
    if (f.multiplicities[i] <= 0)
      return fail("multiplicity of " + f.labels[i] + " is not positive");
  if (!f.matrix.is_symmetric()) return fail("intersection matrix is not symmetric");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && f.matrix(i, j) < 0)
        return fail("negative intersection number between " + f.labels[i] + " and " +
                    f.labels[j]);
  const IntVector mn = f.matrix * std::span<const Integer>(f.multiplicities);
  for (std::size_t i = 0; i < r; ++i)
    if (mn[i] != 0)
      return fail("M*n != 0: component " + f.labels[i] + " meets the fiber with degree " +
                  mn[i].get_str());
  if (!support_connected(f.matrix)) return fail("fiber is not connected");
  if (rank(f.matrix) != r - 1)
    return fail("intersection matrix has rank below r-1; component group would be infinite");
  return {};
}

void require_valid(const IntersectionData& fiber) {
  if (auto v = validate(fiber); !v) throw Error(ErrorCode::InvalidFiber, v.diagnostic);
}

IntVector ComponentGroupPresentation::coordinates(std::span<const Integer> a) const {
  IntVector c = projection * a;
  const auto& d = group.invariant_factors();
  for (std::size_t k = 0; k < c.size(); ++k) {
    Integer red;
    mpz_fdiv_r(red.get_mpz_t(), c[k].get_mpz_t(), d[k].get_mpz_t());
    c[k] = red;
  }
  return c;
}

ComponentGroupPresentation component_group_presentation(const IntersectionData& f) {
  require_valid(f);
  const std::size_t r = f.size();

  // beta(a) = sum n_i a_i. With u * n^T * v = (g, 0, ..., 0), the columns
  // 1..r-1 of v form a basis of L and rows 1..r-1 of v^-1 give coordinates.
  IntMatrix beta(1, r);
  for (std::size_t i = 0; i < r; ++i) beta(0, i) = f.multiplicities[i];
  const SnfResult bsnf = smith_normal_form(beta);
  const IntMatrix coords = unimodular_inverse(bsnf.v).submatrix(1, r - 1, 0, r);

  // Columns of M lie in L (M symmetric, M n = 0).
  const IntMatrix rel = coords * f.matrix;
  const SnfResult snf = smith_normal_form(rel);
  const IntVector diag = snf.diagonal();
  const IntMatrix to_factors = snf.u * coords;

  ComponentGroupPresentation pres;
  IntVector factors;
  std::vector<IntVector> rows;
  for (std::size_t k = 0; k < diag.size(); ++k) {
    if (diag[k] == 0) throw Error(ErrorCode::InvalidFiber, "component group is infinite");
    if (diag[k] == 1) continue;
    factors.push_back(diag[k]);
    rows.push_back(to_factors.row(k));
  }
  pres.group = FiniteAbelianGroup(factors);
  pres.projection = rows.empty() ? IntMatrix(0, r) : IntMatrix::from_rows(rows);
  return pres;
}

FiniteAbelianGroup component_group(const IntersectionData& fiber) {
  return component_group_presentation(fiber).group;
}

bool jr_finiteness(const IntersectionData& fiber, std::size_t b1, const Integer& r) {
  if (r < 2) throw Error(ErrorCode::InvalidInput, "r must be >= 2");
  return torsion_subgroup(component_group(fiber), r) == FiniteAbelianGroup::elementary(r, b1);
}

}  // namespace logtorsor
