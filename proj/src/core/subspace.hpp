#ifndef MODAN_SUBSPACE_HPP
#define MODAN_SUBSPACE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace modan {

/// Subspace of Q^n held as a canonical basis: the nonzero rows of a reduced
/// row-echelon matrix. Two subspaces are equal iff their bases are equal.
class Subspace {
 public:
  /// The zero subspace of Q^n.
  static Subspace zero(std::size_t ambient);
  /// All of Q^n.
  static Subspace full(std::size_t ambient);
  /// Row space of the given spanning set (rows need not be independent).
  static Subspace span(const Matrix& rows, std::size_t ambient);
  static Subspace span(const std::vector<Vec>& rows, std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  /// Canonical basis, one vector per row.
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const = default;

  /// Coordinates of v in the canonical basis; nullopt if v lies outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// The ambient vector with the given coordinates in the canonical basis.
  Vec from_coordinates(const Vec& coords) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  /// dim(*this) - dim(other); requires other to be contained in *this.
  std::size_t quotient_dim(const Subspace& other) const;

  /// A matrix N with kernel exactly this subspace (empty-row matrix when full).
  Matrix constraint_matrix() const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // rref, no zero rows
};

/// Canonical basis of { x : a x = 0 }, one kernel vector per row.
Matrix kernel_basis(const Matrix& a);
/// Canonical basis of the column space of a, one vector per row.
Matrix image_basis(const Matrix& a);
/// kernel_basis wrapped as a Subspace of Q^{cols(a)}.
Subspace kernel_space(const Matrix& a);

}  // namespace modan

#endif
