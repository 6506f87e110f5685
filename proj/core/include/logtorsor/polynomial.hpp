#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logtorsor/integer.hpp"

namespace logtorsor {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial over Z with a fixed, ordered variable list.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Integer>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(std::vector<std::string> variables, const Integer& c);
  static Polynomial variable(std::vector<std::string> variables, std::size_t index);
  static Polynomial variable(std::vector<std::string> variables, std::string_view name);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t variable_count() const noexcept { return vars_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  std::size_t index_of(std::string_view name) const;  ///< throws UnknownVariable

  void add_term(const Exponents& e, const Integer& c);
  Integer coefficient(const Exponents& e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Integer& k);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& k) { return a *= k; }
  friend Polynomial operator*(const Integer& k, Polynomial a) { return a *= k; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned n) const;
  Polynomial derivative(std::size_t var) const;
  Integer evaluate(std::span<const Integer> point) const;

  /// Replaces x_i by images[i]; all images share the target variable list.
  Polynomial compose(const std::vector<Polynomial>& images) const;
  /// Re-expresses over another variable list by name (missing names throw).
  Polynomial with_variables(const std::vector<std::string>& variables) const;

  unsigned degree_in(std::size_t var) const;
  unsigned min_degree_in(std::size_t var) const;
  unsigned total_degree() const;
  unsigned lowest_total_degree() const;
  /// Exact division by x_var^k; requires k <= min_degree_in(var).
  Polynomial divide_by_variable_power(std::size_t var, unsigned k) const;
  Integer content() const;
  /// Coefficients reduced into [0, p).
  Polynomial reduced_mod(const Integer& p) const;
  /// Exact division of every coefficient by k.
  Polynomial divide_exact(const Integer& k) const;

  /// Terms in descending graded-lexicographic order, e.g. "x^2*y - 3*x + 5".
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Grammar: integers, variable names, + - * ^, parentheses; exponents are
/// nonnegative integer literals; juxtaposition is not multiplication.
/// Throws Error(SyntaxError) with the offending position or
/// Error(UnknownVariable).
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

/// "lhs = rhs" parsed as lhs - rhs; a bare expression means "expr = 0".
Polynomial parse_equation(std::string_view text, const std::vector<std::string>& variables);

}  // namespace logtorsor
