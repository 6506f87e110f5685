#include "logtorsor/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace logtorsor {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(std::size_t row0, std::size_t nrows, std::size_t col0,
                               std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_)
    throw std::out_of_range("IntMatrix::submatrix");
  IntMatrix s(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) s(i, j) = (*this)(row0 + i, col0 + j);
  return s;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, std::span<const Integer> v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

RatVector operator*(const IntMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("IntMatrix: dimension mismatch");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += Rational(a(i, j)) * v[j];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Reduced row echelon form over Q, in place. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RatVector> to_rational_rows(const IntMatrix& m, std::size_t extra_cols) {
  std::vector<RatVector> rows(m.rows(), RatVector(m.cols() + extra_cols));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  auto rows = to_rational_rows(m, 0);
  return rref(rows, m.cols()).size();
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("unimodular_inverse: non-square matrix");
  const std::size_t n = m.rows();
  auto rows = to_rational_rows(m, n);
  for (std::size_t i = 0; i < n; ++i) rows[i][n + i] = 1;
  if (rref(rows, n).size() != n) throw std::invalid_argument("unimodular_inverse: singular");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = rows[i][n + j];
      if (!is_integral(x)) throw std::invalid_argument("unimodular_inverse: not unimodular");
      inv(i, j) = x.get_num();
    }
  return inv;
}

IntVector SnfResult::diagonal() const {
  const std::size_t k = std::min(d.rows(), d.cols());
  IntVector diag(k);
  for (std::size_t i = 0; i < k; ++i) diag[i] = d(i, i);
  return diag;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  SnfResult res{IntMatrix::identity(nr), m, IntMatrix::identity(nc)};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    for (;;) {
      // Pivot on the smallest nonzero entry of the trailing block.
      std::size_t pi = nr, pj = nc;
      for (std::size_t i = t; i < nr; ++i)
        for (std::size_t j = t; j < nc; ++j) {
          if (d(i, j) == 0) continue;
          if (pi == nr || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == nr) return res;  // trailing block is zero

      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (d(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (d(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d(t,t) | every entry of the trailing block.
      std::size_t bad = nr;
      for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == nr) break;
      d.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return res;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  const SnfResult snf = smith_normal_form(m);
  std::size_t r = 0;
  for (const auto& x : snf.diagonal())
    if (x != 0) ++r;
  std::vector<IntVector> basis;
  for (std::size_t j = r; j < m.cols(); ++j) basis.push_back(snf.v.col(j));
  return basis;
}

std::optional<AffineSolution> solve_affine_rational(const IntMatrix& m,
                                                    std::span<const Integer> b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("solve_affine_rational: rhs length mismatch");
  const std::size_t n = m.cols();
  auto rows = to_rational_rows(m, 1);
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i][n] = -Rational(b[i]);
  const auto pivots = rref(rows, n);

  for (std::size_t i = pivots.size(); i < rows.size(); ++i)
    if (rows[i][n] != 0) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    sol.particular[pivots[i]] = rows[i][n];
    is_pivot[pivots[i]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector k(n, Rational(0));
    k[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -rows[i][f];
    sol.kernel_basis.push_back(std::move(k));
  }
  return sol;
}

}  // namespace logtorsor
