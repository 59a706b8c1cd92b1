#ifndef MODAN_DERHAM_HPP
#define MODAN_DERHAM_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "matrix.hpp"
#include "opspace.hpp"
#include "subspace.hpp"

namespace modan {

/// An alternating multilinear form on the derivation space of one carrier.
/// Values live either in the carrier itself or in its base algebra; entries
/// are stored per strictly increasing argument tuple, in lexicographic
/// order.
struct Form {
  enum class Values { carrier, base };

  std::size_t degree = 0;
  std::size_t arg_dim = 0;
  std::size_t value_dim = 0;
  Values kind = Values::carrier;
  std::vector<Vec> values;

  bool is_zero() const;
  Vec flat() const;
};

/// Exterior calculus on a derivation space: form spaces, wedge product,
/// interior product, Lie derivative, and the differential attached to a
/// connecting map kappa between derivation spaces.
class DeRhamComplex {
 public:
  /// Both carriers must share the same base algebra.
  DeRhamComplex(DerSpace arg_side, DerSpace value_side);

  const DerSpace& arg_space() const { return u_; }
  const DerSpace& value_space() const { return v_; }

  /// The space of degree-q forms with the given value kind, inside the flat
  /// ambient of dimension binom(arg_dim, q) * value_dim.
  const Subspace& space(std::size_t q, Form::Values kind = Form::Values::carrier);
  std::size_t space_dim(std::size_t q, Form::Values kind = Form::Values::carrier);

  Form zero_form(std::size_t q, Form::Values kind = Form::Values::carrier) const;
  Form basis_form(std::size_t q, std::size_t index,
                  Form::Values kind = Form::Values::carrier);
  Form from_flat(std::size_t q, const Vec& flat,
                 Form::Values kind = Form::Values::carrier) const;
  bool in_space(const Form& omega);

  /// Evaluate at an arbitrary index tuple (sorted internally with sign;
  /// repeated indices give zero).
  Vec eval(const Form& omega, const std::vector<std::size_t>& tuple) const;

  /// Wedge of a base-algebra-valued form with any form, averaged over
  /// shuffles so that powers of a one-form stay nonzero in any
  /// characteristic-zero convention.
  Form wedge(const Form& lhs_base_valued, const Form& rhs) const;

  /// Interior product with the derivation whose coordinates are xi;
  /// carries the degree factor. Requires degree >= 1.
  Form interior(const Vec& xi, const Form& omega) const;

  /// Lie derivative along xi through the connecting map kappa.
  Form lie(const Matrix& kappa, const Vec& xi, const Form& omega) const;

  /// The differential attached to kappa, with the averaging prefactor
  /// 1/(degree+1).
  Form differential(const Matrix& kappa, const Form& omega) const;

  /// Whether kappa is linear over the base algebra.
  bool kappa_is_linear(const Matrix& kappa) const;

  /// Curvature table of kappa: entry (i, j) holds the coordinates of
  /// [kappa xi_i, kappa xi_j] - kappa [xi_i, xi_j] in the value-side
  /// derivation space.
  std::vector<std::vector<Vec>> curvature(const Matrix& kappa) const;
  bool curvature_is_zero(const Matrix& kappa) const;

  /// Matrix of the differential restricted to degree q, canonical bases.
  Matrix differential_matrix(const Matrix& kappa, std::size_t q);

  struct DegreeRow {
    std::size_t degree;
    std::size_t space_dim;
    std::size_t differential_rank;
    std::size_t cohomology_dim;
  };
  /// Cohomology table for degrees 0..q_max. Refuses when kappa is not
  /// linear over the base algebra or has nonzero curvature.
  std::vector<DegreeRow> cohomology(const Matrix& kappa, std::size_t q_max);

  struct HomotopyRow {
    std::size_t degree;
    bool identity_holds;
    bool lie_identity_holds;
  };
  /// Verifies on every basis form up to q_max that contraction with the
  /// canonical degree operator (identity on module values, zero on the
  /// base) inverts the differential: omega = i(d omega) + d(i omega), and
  /// that the Lie derivative along it is the identity. Module carriers
  /// only, with kappa = identity.
  std::vector<HomotopyRow> homotopy_check(std::size_t q_max);

 private:
  struct Level {
    Subspace space;
    std::vector<Matrix> action;
  };

  std::size_t value_dim(Form::Values kind) const;
  Matrix value_action(Form::Values kind, std::size_t i) const;
  std::vector<Level>& tower(Form::Values kind);
  void ensure_levels(Form::Values kind, std::size_t q);
  void ensure_tuples(std::size_t q);
  const std::vector<std::vector<std::size_t>>& tuples(std::size_t q);
  Vec apply_kappa_column(const Matrix& kappa, std::size_t j, const Vec& value,
                         Form::Values kind) const;
  Vec multiply_value(const Vec& base_coeffs, const Vec& value,
                     Form::Values kind) const;

  DerSpace u_;
  DerSpace v_;
  std::vector<Level> carrier_levels_;
  std::vector<Level> base_levels_;
  std::vector<std::vector<std::vector<std::size_t>>> tuples_;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> tuple_index_;
};

}  // namespace modan

#endif
