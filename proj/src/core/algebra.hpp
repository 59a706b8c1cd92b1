#ifndef MODAN_ALGEBRA_HPP
#define MODAN_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"
#include "subspace.hpp"

namespace modan {

/// Finite-dimensional commutative associative algebra over Q, given by a
/// structure tensor: basis_i * basis_j = sum_k structure[i][j][k] basis_k.
/// Commutativity and associativity are checked eagerly at construction, so
/// downstream code may assume both.
class Algebra {
 public:
  /// Validates the tensor; throws Error(not_commutative) with witness (i,j) or
  /// Error(not_associative) with witness (i,j,k) on an axiom failure.
  static Algebra validated(std::string name, std::vector<std::string> basis_names,
                           std::vector<std::vector<Vec>> structure);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_names_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const Vec& product_of_basis(std::size_t i, std::size_t j) const { return structure_[i][j]; }

  /// Coordinates of x * y.
  Vec multiply(const Vec& x, const Vec& y) const;
  /// Matrix of the multiplication operator g -> f * g.
  Matrix mult_matrix(const Vec& f) const;
  /// ann A = { f : f * A = 0 }.
  const Subspace& annihilator() const { return annihilator_; }
  /// The unique unit element, when one exists.
  const std::optional<Vec>& unit() const { return unit_; }

  Vec zero_element() const { return Vec(dim(), Rational(0)); }

 private:
  Algebra() = default;

  std::string name_;
  std::vector<std::string> basis_names_;
  std::vector<std::vector<Vec>> structure_;
  Subspace annihilator_ = Subspace::zero(0);
  std::optional<Vec> unit_;
};

/// Built-in instances used across the test-suite: the ground field itself,
/// dual numbers, and a two-dimensional algebra without unit.
Algebra algebra_field();
Algebra algebra_dual_numbers();
Algebra algebra_nilpotent_pair();

}  // namespace modan

#endif
