#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "logtorsor/integer.hpp"
#include "logtorsor/linalg.hpp"

namespace logtorsor {

/// Finite abelian group in invariant-factor form d_1 | d_2 | ... with d_i >= 2.
/// The empty factor list is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Accepts any list of positive integers (not necessarily a divisibility
  /// chain, ones allowed) and normalizes it to invariant factors.
  explicit FiniteAbelianGroup(IntVector factors);

  /// (Z/r)^k
  static FiniteAbelianGroup elementary(const Integer& r, std::size_t k);

  const IntVector& invariant_factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  bool is_trivial() const noexcept { return factors_.empty(); }
  Integer order() const;
  Integer exponent() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

  /// "Z/2 + Z/2", or "0" for the trivial group.
  std::string to_string() const;

 private:
  IntVector factors_;
};

/// G[r] = direct sum of Z/gcd(d_i, r).
FiniteAbelianGroup torsion_subgroup(const FiniteAbelianGroup& g, const Integer& r);

/// Components E_1..E_r of a special fiber with multiplicities and the
/// intersection matrix M_ij = E_i . E_j.
struct IntersectionData {
  std::vector<std::string> labels;
  IntVector multiplicities;
  IntMatrix matrix;

  std::size_t size() const noexcept { return labels.size(); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  bool has_nonunit_multiplicity() const;
};

struct FiberValidation {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

FiberValidation validate(const IntersectionData& fiber);

/// Throws Error(InvalidFiber) with the diagnostic when validation fails.
void require_valid(const IntersectionData& fiber);

/// Phi = L / M Z^r with L = {a : sum n_i a_i = 0}, together with the
/// projection of L onto invariant-factor coordinates.
struct ComponentGroupPresentation {
  FiniteAbelianGroup group;
  /// One row per invariant factor; row k maps a in L to its coordinate
  /// modulo group.invariant_factors()[k].
  IntMatrix projection;

  /// Coordinates of a in L, each reduced into [0, d_k).
  IntVector coordinates(std::span<const Integer> a) const;
};

ComponentGroupPresentation component_group_presentation(const IntersectionData& fiber);
FiniteAbelianGroup component_group(const IntersectionData& fiber);

/// J[r] finite and flat: Phi[r] is (Z/r)^b1 as an abstract group.
bool jr_finiteness(const IntersectionData& fiber, std::size_t b1, const Integer& r);

}  // namespace logtorsor
