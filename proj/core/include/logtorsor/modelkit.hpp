#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "logtorsor/integer.hpp"
#include "logtorsor/polynomial.hpp"

namespace logtorsor {

/// Affine piece of an arithmetic surface over Z, studied at one prime.
struct AffineChart {
  std::string name;
  std::vector<std::string> variables;
  std::vector<Polynomial> equations;
  long prime = 2;
  unsigned expected_dim = 2;
};

/// Builds a chart from equation texts ("lhs = rhs" or "expr").
AffineChart make_chart(std::string name, std::vector<std::string> variables,
                       const std::vector<std::string>& equations, long prime,
                       unsigned expected_dim = 2);

/// Throws Error(InvalidInput) unless the chart is well formed.
void validate_chart(const AffineChart& chart);

/// A point of F_p^n, coordinates in [0, p).
struct FpPoint {
  std::vector<long> coords;

  friend auto operator<=>(const FpPoint&, const FpPoint&) = default;
  std::string to_string() const;
};

inline constexpr std::uint64_t kDefaultPointCap = 10'000'000;

/// Points of F_p^n on the special fiber, lexicographic order.
std::vector<FpPoint> fiber_points(const AffineChart& chart,
                                  std::uint64_t cap = kDefaultPointCap);

/// Special-fiber points where the Jacobian has F_p-rank < n - 1.
/// Throws Error(CapExceeded) when p^n exceeds the cap.
std::vector<FpPoint> singular_points_mod_p(const AffineChart& chart,
                                           std::uint64_t cap = kDefaultPointCap);

struct TangentDimension {
  unsigned dimension = 0;
  bool is_regular = false;
};

/// dim m/m^2 at the maximal ideal (x - a, p) of the integer lift a in [0, p)^n.
/// Throws Error(PointNotOnFiber).
TangentDimension tangent_dimension(const AffineChart& chart, const FpPoint& point);

struct BlowupChart {
  AffineChart chart;
  /// Images of the base chart's two coordinates in this chart's variables.
  std::array<Polynomial, 2> to_base;
};

/// The three standard charts of the blow-up of a planar hypersurface chart at
/// (x - a, y - b, p): chart1 y - b = (x - a) v, p = (x - a) w;
/// chart2 x - a = (y - b) u, p = (y - b) w; chart3 x - a = p u, y - b = p v.
/// Throws Error(NotHypersurface) or Error(CenterNotOnFiber).
std::array<BlowupChart, 3> blowup_point(const AffineChart& chart, const Integer& a,
                                        const Integer& b);

/// Whether a special-fiber point of a blow-up chart maps to the center.
bool lies_above_center(const BlowupChart& chart, const FpPoint& point, const Integer& a,
                       const Integer& b);

inline constexpr unsigned kDefaultDegreeCap = 20;

/// dim_{F_p} of the local ring at `point` modulo the ideal, taken as the
/// stabilized value of dim F_p[x]/(I + m^N) over N = 1, 2, ...
/// Throws Error(NotStabilized) when no two consecutive values agree below the cap.
unsigned local_multiplicity(const std::vector<Polynomial>& generators,
                            const std::vector<long>& point, long prime,
                            unsigned degree_cap = kDefaultDegreeCap);

/// Reduces every chart equation modulo the component equations over F_p.
/// All but the last component equation must be solvable for one variable
/// with a unit coefficient; the last may be monic in some variable.
/// Throws Error(NotTriangular).
bool verify_component(const AffineChart& chart, const std::vector<Polynomial>& component);

/// Charts y^2 = f(x) and t^2 = s^{2p} f(1/s) of the curve
/// y^2 = x^{2p} - (1 + c^2) x^p + c^2, studied at `residue_prime`.
std::array<AffineChart, 2> curve_charts(long p, const Integer& c, long residue_prime);

/// The polynomial f(x) = x^{2p} - (1 + c^2) x^p + c^2 over the single variable `var`.
Polynomial hyperelliptic_f(long p, const Integer& c, const std::string& var = "x");

}  // namespace logtorsor
