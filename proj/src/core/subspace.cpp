#include "subspace.hpp"

#include <algorithm>
#include <utility>

#include "errors.hpp"

namespace modan {
namespace {

Matrix drop_zero_rows(const RrefResult& red) {
  std::vector<Vec> rows;
  rows.reserve(red.rank);
  for (std::size_t r = 0; r < red.rank; ++r) rows.push_back(red.reduced.row(r));
  if (rows.empty()) return Matrix(0, red.reduced.cols());
  return Matrix::from_rows(std::move(rows));
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  if (ambient == 0) s.basis_ = Matrix(0, 0);
  return s;
}

Subspace Subspace::span(const Matrix& rows, std::size_t ambient) {
  if (rows.rows() > 0 && rows.cols() != ambient)
    fail(errc::dimension_mismatch, "spanning vectors live in the wrong ambient space");
  Subspace s;
  s.ambient_ = ambient;
  Matrix padded = rows.rows() == 0 ? Matrix(0, ambient) : rows;
  s.basis_ = drop_zero_rows(rref(std::move(padded)));
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& rows, std::size_t ambient) {
  if (rows.empty()) return zero(ambient);
  return span(Matrix::from_rows(rows), ambient);
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(errc::dimension_mismatch, "subspaces live in different ambient spaces");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) fail(errc::dimension_mismatch, "vector lives in the wrong ambient space");
  // With the basis in rref, the candidate coordinates can be read off the
  // pivot columns; then verify the combination reproduces v exactly.
  Vec coords(dim(), Rational(0));
  Vec residue = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t piv = 0;
    while (piv < ambient_ && basis_.at(r, piv) == 0) ++piv;
    coords[r] = residue[piv];
    if (coords[r] == 0) continue;
    for (std::size_t c = piv; c < ambient_; ++c) residue[c] -= coords[r] * basis_.at(r, c);
  }
  for (const auto& e : residue)
    if (e != 0) return std::nullopt;
  return coords;
}

Vec Subspace::from_coordinates(const Vec& coords) const {
  if (coords.size() != dim()) fail(errc::dimension_mismatch, "coordinate count differs from subspace dimension");
  Vec v(ambient_, Rational(0));
  for (std::size_t r = 0; r < dim(); ++r) {
    if (coords[r] == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) v[c] += coords[r] * basis_.at(r, c);
  }
  return v;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(errc::dimension_mismatch, "subspaces live in different ambient spaces");
  const std::size_t da = dim(), db = other.dim();
  if (da == 0 || db == 0) return zero(ambient_);
  // x in both spaces iff x = s A = t B; solve [A^T | -B^T] (s,t)^T = 0.
  Matrix joint(ambient_, da + db);
  for (std::size_t c = 0; c < ambient_; ++c) {
    for (std::size_t r = 0; r < da; ++r) joint.at(c, r) = basis_.at(r, c);
    for (std::size_t r = 0; r < db; ++r) joint.at(c, da + r) = -other.basis_.at(r, c);
  }
  Matrix ker = kernel_basis(joint);
  std::vector<Vec> vectors;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vec s(da);
    for (std::size_t r = 0; r < da; ++r) s[r] = ker.at(k, r);
    vectors.push_back(from_coordinates(s));
  }
  return span(vectors, ambient_);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(errc::dimension_mismatch, "subspaces live in different ambient spaces");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < dim(); ++r) rows.push_back(basis_vector(r));
  for (std::size_t r = 0; r < other.dim(); ++r) rows.push_back(other.basis_vector(r));
  return span(rows, ambient_);
}

std::size_t Subspace::quotient_dim(const Subspace& other) const {
  if (!contains(other))
    fail(errc::containment, "quotient requested by a subspace that is not contained in the numerator");
  return dim() - other.dim();
}

Matrix Subspace::constraint_matrix() const {
  // kernel(basis) gives row vectors n with basis . n^T = 0; those rows, read
  // as functionals, vanish exactly on the row space of basis.
  if (dim() == ambient_) return Matrix(0, ambient_);
  if (dim() == 0) return Matrix::identity(ambient_);
  return kernel_basis(basis_);
}

Matrix kernel_basis(const Matrix& a) {
  const std::size_t n = a.cols();
  RrefResult red = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n, Rational(0));
    v[c] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.reduced.at(r, c);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Matrix(0, n);
  // Free-column construction already yields rref rows after sorting by pivot.
  return drop_zero_rows(rref(Matrix::from_rows(std::move(rows))));
}

Matrix image_basis(const Matrix& a) {
  RrefResult red = rref(a.transpose());
  return drop_zero_rows(red);
}

Subspace kernel_space(const Matrix& a) { return Subspace::span(kernel_basis(a), a.cols()); }

}  // namespace modan
