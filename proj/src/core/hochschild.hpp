#ifndef MODAN_HOCHSCHILD_HPP
#define MODAN_HOCHSCHILD_HPP

#include <cstddef>
#include <vector>

#include "matrix.hpp"
#include "opspace.hpp"
#include "subspace.hpp"

namespace modan {

/// A multilinear cochain on the multiplier space of one carrier with values
/// in the multiplier space of another. Values are stored in solution
/// coordinates, one vector per argument tuple (row-major over full tuples).
struct Cochain {
  std::size_t degree = 0;
  std::size_t arg_dim = 0;
  std::size_t value_dim = 0;
  std::vector<Vec> values;

  const Vec& at(const std::vector<std::size_t>& tuple) const;
  Vec flat() const;
  bool is_zero() const;
};

/// Cochain spaces C^q of base-algebra-multilinear maps from powers of one
/// multiplier space into another, with the twisted differential attached to
/// a connecting map kappa.
class HochschildComplex {
 public:
  /// Both carriers must share the same base algebra.
  HochschildComplex(MultSpace arg_side, MultSpace value_side);

  const MultSpace& arg_space() const { return u_; }
  const MultSpace& value_space() const { return v_; }

  /// The space C^q inside its flat ambient of dimension arg^q * value.
  const Subspace& space(std::size_t q);
  std::size_t space_dim(std::size_t q);

  Cochain zero_cochain(std::size_t q) const;
  Cochain basis_cochain(std::size_t q, std::size_t index);
  Cochain from_flat(std::size_t q, const Vec& flat) const;
  bool in_space(const Cochain& c);

  /// Composition-valued tensor product of two cochains.
  Cochain tensor(const Cochain& a, const Cochain& b) const;

  /// The differential attached to kappa (a value_dim x arg_dim matrix on
  /// solution coordinates). Raises the degree by one.
  Cochain delta(const Matrix& kappa, const Cochain& c) const;

  /// The degree-two residual measuring failure of kappa to respect
  /// composition: (eta1, eta2) -> kappa(eta1) kappa(eta2) - kappa(eta1 eta2).
  Cochain residual(const Matrix& kappa) const;

  /// Whether kappa itself is a valid degree-one cochain.
  bool kappa_is_linear(const Matrix& kappa);

  /// Matrix of delta restricted to C^q, in the canonical bases.
  Matrix delta_matrix(const Matrix& kappa, std::size_t q);

  struct DegreeRow {
    std::size_t degree;
    std::size_t space_dim;
    std::size_t delta_rank;
    std::size_t cohomology_dim;
  };
  /// Cohomology table for degrees 0..q_max. Refuses when the residual of
  /// kappa is nonzero or kappa is not a valid degree-one cochain.
  std::vector<DegreeRow> cohomology(const Matrix& kappa, std::size_t q_max);

 private:
  void ensure_spaces(std::size_t q);
  std::size_t tuple_count(std::size_t q) const;

  MultSpace u_;
  MultSpace v_;
  std::vector<Subspace> spaces_;
  /// actions_[q][i]: matrix of the base-algebra basis action on C^q coords.
  std::vector<std::vector<Matrix>> actions_;
};

}  // namespace modan

#endif
