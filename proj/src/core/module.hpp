#ifndef MODAN_MODULE_HPP
#define MODAN_MODULE_HPP

#include <string>
#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "subspace.hpp"

namespace modan {

/// Module over an Algebra, coordinatized over the ground field: the action is
/// a tensor, (algebra basis_i) * (module basis_j) = sum_k action[i][j][k] basis_k.
/// Compatibility f*(g*M) = (f*g)*M is checked eagerly at construction.
class Module {
 public:
  /// Throws Error(not_a_module) with witness (i,j,k) when compatibility fails.
  static Module validated(Algebra base, std::string name, std::vector<std::string> basis_names,
                          std::vector<std::vector<Vec>> action);
  /// The algebra acting on itself by multiplication.
  static Module adjoint(Algebra base);
  /// Free module of the given rank: n*rank-dimensional with block-diagonal
  /// adjoint action; basis named b<i>*<algebra basis>.
  static Module free(Algebra base, std::size_t rank);

  const Algebra& base() const { return base_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_names_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const Vec& action_of_basis(std::size_t i, std::size_t j) const { return action_[i][j]; }

  /// Coordinates of f * m for f in the algebra, m in the module.
  Vec act(const Vec& f, const Vec& m) const;
  /// Matrix of the action operator m -> f * m.
  Matrix action_matrix(const Vec& f) const;

  /// ann_M A = { m : A * m = 0 }, a subspace of the module.
  const Subspace& ann_of_algebra_in_module() const { return ann_in_module_; }
  /// ann_A M = { f : f * M = 0 }, a subspace of the algebra.
  const Subspace& ann_of_module_in_algebra() const { return ann_in_algebra_; }

  bool is_free() const { return free_rank_.has_value(); }
  std::size_t free_rank() const;
  bool is_adjoint() const { return adjoint_; }

  Vec zero_element() const { return Vec(dim(), Rational(0)); }

 private:
  Module() = default;
  void compute_annihilators();
  void detect_structure();

  Algebra base_ = Algebra::validated("", {}, {});
  std::string name_;
  std::vector<std::string> basis_names_;
  std::vector<std::vector<Vec>> action_;
  Subspace ann_in_module_ = Subspace::zero(0);
  Subspace ann_in_algebra_ = Subspace::zero(0);
  std::optional<std::size_t> free_rank_;
  bool adjoint_ = false;
};

}  // namespace modan

#endif
