#ifndef MODAN_OPSPACE_HPP
#define MODAN_OPSPACE_HPP

#include <cstddef>
#include <vector>

#include "carrier.hpp"
#include "matrix.hpp"
#include "subspace.hpp"

namespace modan {

/// The multiplier space of a carrier, tabulated in solution coordinates:
/// composition, the identity operator, and the base-algebra action are all
/// precomputed as data on the coordinate space. Closure of each table entry
/// inside the solution space is verified during construction.
struct MultSpace {
  Carrier carrier;
  Subspace space;
  /// coord_action[i] is the matrix of "multiply by basis element i" on
  /// solution coordinates.
  std::vector<Matrix> coord_action;
  /// comp_table[i][j] holds the coordinates of basis_i composed with basis_j.
  std::vector<std::vector<Vec>> comp_table;
  Vec identity_coords;

  std::size_t dim() const { return space.dim(); }
  /// Bilinear composition of two coordinate vectors.
  Vec compose(const Vec& x, const Vec& y) const;
  /// Coordinates of the base-algebra action of f on x.
  Vec act(const Vec& f, const Vec& x) const;
};

/// The derivation space of a carrier with bracket and action tables, plus
/// the two ways a derivation applies to values: to carrier values (module
/// component for modules) and to base-algebra values (algebra component).
struct DerSpace {
  Carrier carrier;
  Subspace space;
  std::vector<Matrix> coord_action;
  /// bracket_table[i][j] holds the coordinates of [basis_i, basis_j].
  std::vector<std::vector<Vec>> bracket_table;

  std::size_t dim() const { return space.dim(); }
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec act(const Vec& f, const Vec& x) const;
  /// Apply the derivation with coordinates `op` to a carrier value.
  Vec apply_to_carrier_value(const Vec& op, const Vec& value) const;
  /// Apply it to a base-algebra value instead.
  Vec apply_to_base_value(const Vec& op, const Vec& value) const;
};

MultSpace make_mult_space(const Carrier& carrier);
DerSpace make_der_space(const Carrier& carrier);

}  // namespace modan

#endif
