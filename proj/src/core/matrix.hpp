#ifndef MODAN_MATRIX_HPP
#define MODAN_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace modan {

/// Dense row-major matrix of exact rationals. Matrices act on coordinate
/// columns: entry (r, c) is the coefficient of the r-th basis vector in the
/// image of the c-th.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::vector<Vec> rows);
  /// Rebuilds an r x c matrix from its row-major flattening.
  static Matrix from_flat(const Vec& flat, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  /// Row-major flattening.
  Vec flat() const { return entries_; }

  Matrix transpose() const;
  Vec apply(const Vec& v) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Rational& c) const;
  bool operator==(const Matrix& o) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec entries_;
};

/// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Unique reduced row-echelon form (pivots scaled to 1, pivot columns cleared).
RrefResult rref(Matrix m);

/// One particular solution of a x = b, if the system is consistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Exact inverse, if it exists.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace modan

#endif
