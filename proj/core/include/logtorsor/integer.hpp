#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace logtorsor {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Representative of x mod 1 in [0, 1).
inline Rational frac_part(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational r = x - Rational(fl);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

/// Lowest-terms "a/b" with b > 0, or "a" when b = 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace logtorsor
