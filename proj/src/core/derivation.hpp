#ifndef MODAN_DERIVATION_HPP
#define MODAN_DERIVATION_HPP

#include <optional>
#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"
#include "module.hpp"
#include "pairops.hpp"
#include "subspace.hpp"

namespace modan {

/// { X : X(f*g) = Xf*g + f*Xg } as a subspace of flattened n x n matrices.
/// Closed under the commutator bracket.
Subspace derivation_algebra(const Algebra& a);

/// Pairs (nabla, X) with X a derivation of the base algebra and
/// nabla(f*M) = Xf*M + f*nabla(M); nabla is only F-linear, not A-linear.
/// Coordinatized as (vec nabla, vec X).
Subspace module_derivations(const Module& mod);

/// Componentwise lift of a base derivation over a free module:
/// nabla = diag(X, ..., X). Throws Error(not_free), Error(not_a_derivation).
Vec lift_free_derivation(const Module& mod, const Matrix& x);

/// Fiber of the projection (nabla, X) -> X over a given base derivation.
struct DerivationFiber {
  Vec base_point;       // one pair over x, ambient pair coordinates
  Subspace directions;  // pairs with zero bottom, encoded on the top block (ambient m^2)
};
/// nullopt when x is outside the image of the projection.
/// Throws Error(not_a_derivation) when x violates the Leibniz law.
std::optional<DerivationFiber> fiber_over_derivation(const Module& mod, const Matrix& x);

/// Splitting of a pair over the adjoint module: (nabla, X) =
/// (X, X) + (nabla - X, 0). Throws Error(not_adjoint_module).
struct AdjointDerivationSplit {
  Vec diagonal_part;  // (X, X)
  Vec endo_part;      // (nabla - X, 0)
};
AdjointDerivationSplit adjoint_decompose_derivation(const Module& mod, const Vec& pair);

/// Linear section of the projection above, i.e. a choice of nabla for every X.
/// Flags record which structure the section preserves; they are computed,
/// never declared.
class ConnectionSection {
 public:
  /// assignment maps base-space coordinates to pair-space coordinates.
  ConnectionSection(const Module& mod, Matrix assignment);

  /// Componentwise lift over a free module (zero potential).
  static ConnectionSection free_lift(const Module& mod);
  /// Componentwise lift plus a per-basis-derivation A-linear perturbation:
  /// kappa(X_i) = lift(X_i) + (potential_i, 0). Each potential value must lie
  /// in End_A(M); throws Error(potential_not_a_linear) otherwise.
  static ConnectionSection from_potential(const Module& mod, const std::vector<Matrix>& potential);

  const Matrix& assignment() const { return assignment_; }
  bool is_a_linear() const { return a_linear_; }
  /// True when the section preserves brackets on all base basis pairs.
  bool is_lie_morphism() const { return lie_; }

  /// Pair assigned to a base derivation, ambient pair coordinates.
  Vec apply(const Matrix& x) const;
  /// Bracket defect [kappa(x1), kappa(x2)] - kappa([x1, x2]) on the module
  /// block (the bottom blocks always cancel for a section).
  Matrix curvature(const Matrix& x1, const Matrix& x2) const;

 private:
  Module mod_;
  Subspace base_;
  Subspace total_;
  Matrix assignment_;
  bool a_linear_ = false;
  bool lie_ = false;
};

}  // namespace modan

#endif
