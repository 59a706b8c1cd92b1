#ifndef MODAN_MULTIPLIER_HPP
#define MODAN_MULTIPLIER_HPP

#include <optional>
#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"
#include "module.hpp"
#include "pairops.hpp"
#include "subspace.hpp"

namespace modan {

/// { R : R(f*g) = f*R(g) } as a subspace of flattened n x n matrices.
/// Closed under composition and contains the identity.
Subspace multiplier_algebra(const Algebra& a);

/// For unital algebras the space above is isomorphic to the algebra itself:
/// R -> R(e) one way, f -> multiplication-by-f back. Throws Error(no_unit).
Vec multiplier_to_element(const Algebra& a, const Matrix& r);
Matrix element_to_multiplier(const Algebra& a, const Vec& f);

/// End_A(M): operators commuting with the action of every algebra element,
/// as a subspace of flattened m x m matrices.
Subspace endomorphism_algebra(const Module& mod);

/// Hom_A(M; W) for an A-stable subspace W of the module: A-linear operators
/// whose image lies inside W.
Subspace hom_into_submodule(const Module& mod, const Subspace& w);

/// Pairs (Delta, R) with Delta A-linear, R a multiplier of the base algebra,
/// and Delta(f*M) = R(f)*M; coordinatized as (vec Delta, vec R).
Subspace module_multipliers(const Module& mod);

/// f -> (action of f, multiplication by f): an algebra map into the pair
/// space whose kernel is ann_A(M).
Vec adjoint_embedding(const Module& mod, const Vec& f);

/// Componentwise lift of a base multiplier over a free module:
/// Delta = diag(R, ..., R). Throws Error(not_free), Error(not_a_multiplier).
Vec lift_free_multiplier(const Module& mod, const Matrix& r);

/// Fiber of the projection (Delta, R) -> R over a given base multiplier.
struct MultiplierFiber {
  Vec base_point;       // one pair over r, in ambient pair coordinates
  Subspace directions;  // pairs with zero bottom, encoded on the top block only (ambient m^2)
};
/// nullopt when r is outside the image of the projection.
/// Throws Error(not_a_multiplier) when r is not a multiplier at all.
std::optional<MultiplierFiber> fiber_over_multiplier(const Module& mod, const Matrix& r);

/// Splitting of a pair over the adjoint module: (Delta, R) =
/// (R, R) + (Delta - R, 0). Throws Error(not_adjoint_module).
struct AdjointSplit {
  Vec diagonal_part;  // (R, R)
  Vec fiber_part;     // (Delta - R, 0)
};
AdjointSplit adjoint_decompose_multiplier(const Module& mod, const Vec& pair);

/// Linear section of the projection: a right inverse defined on the whole
/// base solution space, stored as a matrix between the canonical bases.
class MultiplierSection {
 public:
  /// assignment maps base-space coordinates to pair-space coordinates;
  /// the section property (projection after assignment = identity) is
  /// validated. Throws Error(containment) when it fails.
  MultiplierSection(const Module& mod, Matrix assignment);

  /// Section with Delta acting componentwise over a free module.
  static MultiplierSection free_lift(const Module& mod);

  const Matrix& assignment() const { return assignment_; }
  bool is_a_linear() const { return a_linear_; }

  /// Pair assigned to a base multiplier, in ambient pair coordinates.
  Vec apply(const Matrix& r) const;
  /// Residual of multiplicativity: Delta_{r1 r2} - Delta_{r1} Delta_{r2}.
  Matrix residual(const Matrix& r1, const Matrix& r2) const;
  /// True when the residual vanishes on all base basis pairs.
  bool is_multiplicative() const;

 private:
  Module mod_;
  Subspace base_;
  Subspace total_;
  Matrix assignment_;
  bool a_linear_ = false;
};

}  // namespace modan

#endif
