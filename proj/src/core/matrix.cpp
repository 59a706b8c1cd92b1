#include "matrix.hpp"

#include <optional>
#include <utility>

#include "errors.hpp"

namespace modan {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::vector<Vec> rows) {
  if (rows.empty()) return Matrix();
  const std::size_t cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(errc::dimension_mismatch, "ragged rows in matrix literal");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = std::move(rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_flat(const Vec& flat, std::size_t rows, std::size_t cols) {
  if (flat.size() != rows * cols) fail(errc::dimension_mismatch, "flat vector does not fill the matrix");
  Matrix m(rows, cols);
  m.entries_ = flat;
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) fail(errc::dimension_mismatch, "matrix/vector size mismatch in apply");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
    out[r] = std::move(acc);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(errc::dimension_mismatch, "inner dimensions differ in matrix product");
  Matrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& lhs = at(r, k);
      if (lhs == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) p.at(r, c) += lhs * o.at(k, c);
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::dimension_mismatch, "matrix sizes differ in sum");
  Matrix s = *this;
  for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] += o.entries_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::dimension_mismatch, "matrix sizes differ in difference");
  Matrix s = *this;
  for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] -= o.entries_[i];
  return s;
}

Matrix Matrix::operator-() const {
  Matrix s = *this;
  for (auto& e : s.entries_) e = -e;
  return s;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix s = *this;
  for (auto& e : s.entries_) e *= c;
  return s;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RrefResult rref(Matrix m) {
  RrefResult out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t piv = lead;
    while (piv < rows && m.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != lead)
      for (std::size_t c = col; c < cols; ++c) std::swap(m.at(piv, c), m.at(lead, c));
    const Rational inv = Rational(1) / m.at(lead, col);
    for (std::size_t c = col; c < cols; ++c) m.at(lead, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m.at(r, col) == 0) continue;
      const Rational factor = m.at(r, col);
      for (std::size_t c = col; c < cols; ++c) m.at(r, c) -= factor * m.at(lead, c);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = out.pivots.size();
  out.reduced = std::move(m);
  return out;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) fail(errc::dimension_mismatch, "rhs length differs from row count");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  RrefResult red = rref(std::move(aug));
  Vec x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < red.rank; ++i) {
    if (red.pivots[i] == a.cols()) return std::nullopt;  // pivot in the rhs column: inconsistent
    x[red.pivots[i]] = red.reduced.at(i, a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(errc::dimension_mismatch, "only square matrices can be inverted");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  RrefResult red = rref(std::move(aug));
  if (red.rank < n || red.pivots[n - 1] >= n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.reduced.at(r, n + c);
  return inv;
}

}  // namespace modan
