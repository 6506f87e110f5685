#include "logtorsor/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "logtorsor/error.hpp"

namespace logtorsor {

Polynomial::Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Integer& c) {
  Polynomial p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
  Polynomial p(std::move(variables));
  Exponents e(p.vars_.size(), 0);
  e.at(index) = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::string_view name) {
  Polynomial p(std::move(variables));
  return variable(p.vars_, p.index_of(name));
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](unsigned x) { return x == 0; }));
}

std::size_t Polynomial::index_of(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end())
    throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

void Polynomial::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != vars_.size())
    throw std::invalid_argument("Polynomial: exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("Polynomial: variable lists differ");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw std::out_of_range("Polynomial::derivative");
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

Integer Polynomial::evaluate(std::span<const Integer> point) const {
  if (point.size() != vars_.size())
    throw std::invalid_argument("Polynomial::evaluate: point dimension mismatch");
  Integer acc = 0;
  Integer term, pw;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), e[i]);
      term *= pw;
    }
    acc += term;
  }
  return acc;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
  if (images.size() != vars_.size())
    throw std::invalid_argument("Polynomial::compose: need one image per variable");
  if (images.empty()) {
    return *this;
  }
  const auto& target = images.front().vars_;
  for (const auto& im : images)
    if (im.vars_ != target) throw std::invalid_argument("Polynomial::compose: mixed targets");

  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

Polynomial Polynomial::with_variables(const std::vector<std::string>& variables) const {
  std::vector<Polynomial> images;
  images.reserve(vars_.size());
  for (const auto& name : vars_) images.push_back(variable(variables, name));
  if (images.empty()) {
    Polynomial out(variables);
    for (const auto& [e, c] : terms_) out.add_term(Exponents(variables.size(), 0), c);
    return out;
  }
  return compose(images);
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

unsigned Polynomial::min_degree_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, e.at(var));
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

unsigned Polynomial::lowest_total_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::min(d, s);
  }
  return d;
}

Polynomial Polynomial::divide_by_variable_power(std::size_t var, unsigned k) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) < k) throw std::invalid_argument("divide_by_variable_power: not divisible");
    Exponents d = e;
    d[var] -= k;
    out.add_term(d, c);
  }
  return out;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) g = gcd(g, c);
  return g;
}

Polynomial Polynomial::reduced_mod(const Integer& p) const {
  Polynomial out(vars_);
  Integer r;
  for (const auto& [e, c] : terms_) {
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    out.add_term(e, r);
  }
  return out;
}

Polynomial Polynomial::divide_exact(const Integer& k) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()))
      throw std::invalid_argument("divide_exact: coefficient not divisible");
    out.terms_.emplace(e, c / k);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  auto deg = [](const Exponents& e) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    return s;
  };
  std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    const unsigned da = deg(a->first), db = deg(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty())
      os << mag.get_str();
    else if (mag == 1)
      os << mono;
    else
      os << mag.get_str() << '*' << mono;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) unexpected();
    return p;
  }

  Polynomial parse_until_equals(bool& saw_equals) {
    Polynomial lhs = expr();
    skip_ws();
    saw_equals = pos_ < text_.size() && text_[pos_] == '=';
    if (saw_equals) {
      ++pos_;
      Polynomial rhs = expr();
      skip_ws();
      if (pos_ != text_.size()) unexpected();
      return lhs - rhs;
    }
    if (pos_ != text_.size()) unexpected();
    return lhs;
  }

 private:
  // expr := term (('+' | '-') term)*
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_ws();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  // term := unary ('*' unary)*
  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_ws();
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else {
        if (pos_ < text_.size() && starts_operand(text_[pos_]))
          fail("implicit multiplication is not allowed");
        return acc;
      }
    }
  }

  // unary := ('-' | '+') unary | power
  Polynomial unary() {
    skip_ws();
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  // power := primary ('^' integer)?
  Polynomial power() {
    Polynomial base = primary();
    skip_ws();
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a nonnegative integer exponent");
    const Integer e = integer_literal();
    if (!e.fits_uint_p() || e > 100000) fail("exponent too large");
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return Polynomial::constant(vars_, integer_literal());
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end())
        throw Error(ErrorCode::UnknownVariable,
                    "unknown variable '" + name + "' at position " + std::to_string(start));
      return Polynomial::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    unexpected();
  }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  static bool starts_operand(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void unexpected() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + text_[pos_] + "'");
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::SyntaxError, msg + " at position " + std::to_string(pos_));
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse_all();
}

Polynomial parse_equation(std::string_view text, const std::vector<std::string>& variables) {
  bool saw_equals = false;
  return Parser(text, variables).parse_until_equals(saw_equals);
}

}  // namespace logtorsor
