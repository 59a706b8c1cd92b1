#include "opspace.hpp"

#include "derivation.hpp"
#include "errors.hpp"
#include "multiplier.hpp"
#include "pairops.hpp"

namespace modan {

namespace {

struct OpView {
  Matrix top;
  Matrix bottom;
};

OpView view_op(const Carrier& c, const Vec& flat) {
  if (c.is_module()) {
    OperatorPair p = split_pair(flat, c.module().dim(), c.base().dim());
    return {p.top, p.bottom};
  }
  Matrix m = Matrix::from_flat(flat, c.base().dim(), c.base().dim());
  return {m, m};
}

Vec flatten_op(const Carrier& c, const Matrix& top, const Matrix& bottom) {
  if (c.is_module()) return join_pair(top, bottom);
  return bottom.flat();
}

Vec compose_ambient(const Carrier& c, const Vec& a, const Vec& b) {
  OpView va = view_op(c, a);
  OpView vb = view_op(c, b);
  return flatten_op(c, va.top * vb.top, va.bottom * vb.bottom);
}

Vec bracket_ambient(const Carrier& c, const Vec& a, const Vec& b) {
  OpView va = view_op(c, a);
  OpView vb = view_op(c, b);
  return flatten_op(c, commutator(va.top, vb.top),
                    commutator(va.bottom, vb.bottom));
}

Vec act_ambient(const Carrier& c, std::size_t i, const Vec& op) {
  OpView v = view_op(c, op);
  return flatten_op(c, c.value_mult(i) * v.top, c.base_mult(i) * v.bottom);
}

Vec identity_ambient(const Carrier& c) {
  const std::size_t n = c.base().dim();
  if (!c.is_module()) return Matrix::identity(n).flat();
  return join_pair(Matrix::identity(c.module().dim()), Matrix::identity(n));
}

Vec coords_or_fail(const Subspace& space, const Vec& v, const char* what) {
  auto c = space.coordinates(v);
  if (!c) fail(errc::internal, std::string(what) + " left the solution space");
  return *c;
}

Vec bilinear(const std::vector<std::vector<Vec>>& table, std::size_t out_dim,
             const Vec& x, const Vec& y) {
  Vec result(out_dim, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      const Rational c = x[i] * y[j];
      const Vec& entry = table[i][j];
      for (std::size_t k = 0; k < out_dim; ++k) result[k] += c * entry[k];
    }
  }
  return result;
}

Vec act_by(const std::vector<Matrix>& coord_action, const Vec& f,
           const Vec& x) {
  Vec result(x.size(), Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    Vec part = coord_action[i].apply(x);
    for (std::size_t k = 0; k < x.size(); ++k) result[k] += f[i] * part[k];
  }
  return result;
}

std::vector<Matrix> build_coord_action(const Carrier& carrier,
                                       const Subspace& space) {
  const std::size_t n = carrier.base().dim();
  const std::size_t s = space.dim();
  std::vector<Matrix> action;
  action.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> rows(s, Vec(s, Rational(0)));
    for (std::size_t j = 0; j < s; ++j) {
      Vec col = coords_or_fail(
          space, act_ambient(carrier, i, space.basis_vector(j)),
          "base-algebra action");
      for (std::size_t r = 0; r < s; ++r) rows[r][j] = col[r];
    }
    action.push_back(s == 0 ? Matrix(0, 0) : Matrix::from_rows(rows));
  }
  return action;
}

}  // namespace

Vec MultSpace::compose(const Vec& x, const Vec& y) const {
  return bilinear(comp_table, dim(), x, y);
}

Vec MultSpace::act(const Vec& f, const Vec& x) const {
  return act_by(coord_action, f, x);
}

Vec DerSpace::bracket(const Vec& x, const Vec& y) const {
  return bilinear(bracket_table, dim(), x, y);
}

Vec DerSpace::act(const Vec& f, const Vec& x) const {
  return act_by(coord_action, f, x);
}

Vec DerSpace::apply_to_carrier_value(const Vec& op, const Vec& value) const {
  OpView v = view_op(carrier, space.from_coordinates(op));
  return v.top.apply(value);
}

Vec DerSpace::apply_to_base_value(const Vec& op, const Vec& value) const {
  OpView v = view_op(carrier, space.from_coordinates(op));
  return v.bottom.apply(value);
}

MultSpace make_mult_space(const Carrier& carrier) {
  MultSpace ms{carrier, Subspace::zero(0), {}, {}, {}};
  ms.space = carrier.is_module() ? module_multipliers(carrier.module())
                                 : multiplier_algebra(carrier.base());
  const std::size_t s = ms.space.dim();
  ms.comp_table.assign(s, std::vector<Vec>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      ms.comp_table[i][j] = coords_or_fail(
          ms.space,
          compose_ambient(carrier, ms.space.basis_vector(i),
                          ms.space.basis_vector(j)),
          "multiplier composition");
  ms.coord_action = build_coord_action(carrier, ms.space);
  ms.identity_coords =
      coords_or_fail(ms.space, identity_ambient(carrier), "identity operator");
  return ms;
}

DerSpace make_der_space(const Carrier& carrier) {
  DerSpace ds{carrier, Subspace::zero(0), {}, {}};
  ds.space = carrier.is_module() ? module_derivations(carrier.module())
                                 : derivation_algebra(carrier.base());
  const std::size_t s = ds.space.dim();
  ds.bracket_table.assign(s, std::vector<Vec>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      ds.bracket_table[i][j] = coords_or_fail(
          ds.space,
          bracket_ambient(carrier, ds.space.basis_vector(i),
                          ds.space.basis_vector(j)),
          "derivation bracket");
  ds.coord_action = build_coord_action(carrier, ds.space);
  return ds;
}

}  // namespace modan
