#pragma once

#include <cstddef>
#include <string_view>

#include "logtorsor/fiber.hpp"
#include "logtorsor/integer.hpp"

namespace logtorsor {

/// Intersection numbers b_j of the closure of a degree-zero horizontal
/// divisor with each fiber component, and the component where the marked
/// point reduces.
struct HorizontalIncidence {
  IntVector b;
  std::size_t base_index = 0;
};

/// Rational coefficients q_i of the vertical part of the extended divisor,
/// normalized so that q[base_index] = 0.
struct VerticalPart {
  RatVector q;
};

enum class VerdictKind { FppfExtension, LogOnly };

std::string_view to_string(VerdictKind kind) noexcept;

struct Verdict {
  VerdictKind kind = VerdictKind::FppfExtension;
  RatVector gamma;  ///< q mod Z, entries in [0, 1)
};

struct PhiClass {
  IntVector coordinates;  ///< invariant-factor coordinates, k-th in [0, d_k)
  Integer order;
};

/// The unique rational q with M q = -b and q[base] = 0.
/// Throws Error(InvalidFiber) or Error(DegreeNotZero).
VerticalPart extend_divisor(const IntersectionData& fiber, const HorizontalIncidence& h);

Verdict gamma_and_verdict(const IntersectionData& fiber, const HorizontalIncidence& h);

PhiClass class_in_phi(const IntersectionData& fiber, const HorizontalIncidence& h);

/// sum_i (b_s)_i (q_t)_i mod Z, in [0, 1).
Rational monodromy_pairing(const IntersectionData& fiber, const HorizontalIncidence& s,
                           const HorizontalIncidence& t);

/// gcd(#G, #Phi) = 1, which forces an fppf extension.
bool coprime_shortcut(const Integer& group_order, const FiniteAbelianGroup& phi);

}  // namespace logtorsor
