#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logtorsor/integer.hpp"

namespace logtorsor {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  IntMatrix transpose() const;
  IntMatrix submatrix(std::size_t row0, std::size_t nrows, std::size_t col0,
                      std::size_t ncols) const;

  bool is_symmetric() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, std::span<const Integer> v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

RatVector operator*(const IntMatrix& a, std::span<const Rational> v);

/// Exact determinant (Bareiss fraction-free elimination).
Integer determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

struct SnfResult {
  IntMatrix u;  ///< m x m, unimodular
  IntMatrix d;  ///< m x n, diagonal
  IntMatrix v;  ///< n x n, unimodular

  /// Diagonal of d, length min(m, n).
  IntVector diagonal() const;
};

/// Smith normal form: u * m * v == d with nonnegative diagonal d_1 | d_2 | ...
SnfResult smith_normal_form(const IntMatrix& m);

/// Z-basis of {x in Z^n : m x = 0}, one vector per entry.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

struct AffineSolution {
  RatVector particular;
  std::vector<RatVector> kernel_basis;
};

/// Solves m * x = -b over Q. Returns nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine_rational(const IntMatrix& m,
                                                    std::span<const Integer> b);

}  // namespace logtorsor
