#ifndef MODAN_GAUGE_HPP
#define MODAN_GAUGE_HPP

#include <random>

#include "matrix.hpp"
#include "module.hpp"
#include "pairops.hpp"
#include "rational.hpp"

namespace modan {

/// A-linear invertible operator on a module together with its exact inverse.
class ModuleAutomorphism {
 public:
  /// Validates A-linearity and exact invertibility.
  /// Throws Error(not_a_linear), Error(not_invertible).
  ModuleAutomorphism(const Module& mod, Matrix g);

  const Matrix& matrix() const { return g_; }
  const Matrix& inverse_matrix() const { return g_inv_; }

 private:
  Matrix g_;
  Matrix g_inv_;
};

/// Conjugation of the module component: (Delta, R) -> (G Delta G^-1, R).
Vec gauge_multiplier(const Module& mod, const ModuleAutomorphism& g, const Vec& pair);
/// Conjugation of the module component: (nabla, X) -> (G nabla G^-1, X).
Vec gauge_derivation(const Module& mod, const ModuleAutomorphism& g, const Vec& pair);

/// True iff a equals the gauge transform of b under g (same formula for
/// multiplier pairs and derivation pairs).
bool is_equivalent_via(const Module& mod, const ModuleAutomorphism& g, const Vec& a, const Vec& b);

/// Unipotent automorphism: identity plus a random strictly-lower-triangular
/// A-linear perturbation with small rational entries.
ModuleAutomorphism random_automorphism(const Module& mod, std::mt19937_64& rng);

}  // namespace modan

#endif
