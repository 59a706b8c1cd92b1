#include "derham.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "errors.hpp"
#include "pairops.hpp"

namespace modan {

namespace {

constexpr std::size_t kMaxUnknowns = 4000;
constexpr std::size_t kMaxAmbient = 2'000'000;

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

/// Sorts the tuple, returning the permutation sign, or nullopt when two
/// entries coincide.
std::optional<int> sort_sign(std::vector<std::size_t>& tuple) {
  int sign = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && tuple[j - 1] > tuple[j]) {
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
      --j;
    }
    if (j > 0 && tuple[j - 1] == tuple[j]) return std::nullopt;
  }
  return sign;
}

void add_scaled(Vec& target, const Rational& c, const Vec& src) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] += c * src[i];
}

Vec matrix_column(const Matrix& m, std::size_t j) {
  Vec col(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m.at(i, j);
  return col;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n,
                                                   std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t pos = k;
    while (pos-- > 0) {
      if (cur[pos] + (k - pos) < n) break;
      if (pos == 0) return out;
    }
    if (cur.empty()) return out;
    if (cur[pos] + (k - pos) >= n) return out;
    ++cur[pos];
    for (std::size_t i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
  }
}

}  // namespace

bool Form::is_zero() const {
  for (const Vec& v : values)
    for (const Rational& x : v)
      if (x != 0) return false;
  return true;
}

Vec Form::flat() const {
  Vec out;
  out.reserve(values.size() * value_dim);
  for (const Vec& v : values) out.insert(out.end(), v.begin(), v.end());
  return out;
}

DeRhamComplex::DeRhamComplex(DerSpace arg_side, DerSpace value_side)
    : u_(std::move(arg_side)), v_(std::move(value_side)) {
  if (!u_.carrier.same_base(v_.carrier))
    fail(errc::mixed_base_algebra,
         "argument and value carriers have different base algebras");
}

std::size_t DeRhamComplex::value_dim(Form::Values kind) const {
  return kind == Form::Values::carrier ? v_.carrier.value_dim()
                                       : v_.carrier.base().dim();
}

Matrix DeRhamComplex::value_action(Form::Values kind, std::size_t i) const {
  return kind == Form::Values::carrier ? v_.carrier.value_mult(i)
                                       : v_.carrier.base_mult(i);
}

std::vector<DeRhamComplex::Level>& DeRhamComplex::tower(Form::Values kind) {
  return kind == Form::Values::carrier ? carrier_levels_ : base_levels_;
}

void DeRhamComplex::ensure_tuples(std::size_t q) {
  const std::size_t su = u_.dim();
  while (tuples_.size() <= q) {
    const std::size_t level = tuples_.size();
    tuples_.push_back(combinations(su, level));
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < tuples_.back().size(); ++i)
      index[tuples_.back()[i]] = i;
    tuple_index_.push_back(std::move(index));
  }
}

const std::vector<std::vector<std::size_t>>& DeRhamComplex::tuples(
    std::size_t q) {
  ensure_tuples(q);
  return tuples_[q];
}

void DeRhamComplex::ensure_levels(Form::Values kind, std::size_t q) {
  auto& tw = tower(kind);
  const std::size_t su = u_.dim();
  const std::size_t val = value_dim(kind);
  const std::size_t n = u_.carrier.base().dim();
  if (tw.empty()) {
    Level base_level;
    base_level.space = Subspace::full(val);
    for (std::size_t i = 0; i < n; ++i)
      base_level.action.push_back(value_action(kind, i));
    tw.push_back(std::move(base_level));
  }
  while (tw.size() <= q) {
    const std::size_t level = tw.size();
    const Level& prev = tw[level - 1];
    const std::size_t prev_dim = prev.space.dim();
    const std::size_t unknowns = su * prev_dim;
    if (unknowns > kMaxUnknowns)
      fail(errc::cap_exceeded, "form-space construction exceeds size cap");
    ensure_tuples(level);
    const std::size_t ambient = tuples_[level].size() * val;
    if (ambient > kMaxAmbient)
      fail(errc::cap_exceeded, "form ambient dimension exceeds cap");

    std::vector<Vec> prev_basis;
    prev_basis.reserve(prev_dim);
    for (std::size_t w = 0; w < prev_dim; ++w)
      prev_basis.push_back(prev.space.basis_vector(w));

    // Evaluate a previous-level basis form at (first, rest), component k.
    auto prev_eval = [&](std::size_t w, std::size_t first,
                         const std::vector<std::size_t>& rest,
                         std::size_t k) -> Rational {
      std::vector<std::size_t> tuple;
      tuple.reserve(rest.size() + 1);
      tuple.push_back(first);
      tuple.insert(tuple.end(), rest.begin(), rest.end());
      auto sign = sort_sign(tuple);
      if (!sign) return Rational(0);
      const std::size_t idx = tuple_index_[level - 1].at(tuple);
      Rational out = prev_basis[w][idx * val + k];
      return *sign < 0 ? -out : out;
    };

    std::vector<Vec> rows;
    // Linearity of the first slot over the base algebra.
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix& au = u_.coord_action[i];
      const Matrix& wprev = prev.action[i];
      for (std::size_t j = 0; j < su; ++j) {
        for (std::size_t w = 0; w < prev_dim; ++w) {
          Vec row(unknowns, Rational(0));
          for (std::size_t l = 0; l < su; ++l)
            row[l * prev_dim + w] += au.at(l, j);
          for (std::size_t w2 = 0; w2 < prev_dim; ++w2)
            row[j * prev_dim + w2] -= wprev.at(w, w2);
          rows.push_back(std::move(row));
        }
      }
    }
    // Antisymmetry under swapping the first two slots.
    if (level >= 2) {
      for (std::size_t a = 0; a < su; ++a) {
        for (std::size_t b = a; b < su; ++b) {
          for (const auto& rest : tuples(level - 2)) {
            for (std::size_t k = 0; k < val; ++k) {
              Vec row(unknowns, Rational(0));
              for (std::size_t w = 0; w < prev_dim; ++w) {
                row[a * prev_dim + w] += prev_eval(w, b, rest, k);
                row[b * prev_dim + w] += prev_eval(w, a, rest, k);
              }
              rows.push_back(std::move(row));
            }
          }
        }
      }
    }

    std::vector<Vec> lambda_basis;
    if (rows.empty()) {
      for (std::size_t kk = 0; kk < unknowns; ++kk) {
        Vec e(unknowns, Rational(0));
        e[kk] = Rational(1);
        lambda_basis.push_back(std::move(e));
      }
    } else {
      Matrix kb = kernel_basis(Matrix::from_rows(rows));
      for (std::size_t r = 0; r < kb.rows(); ++r)
        lambda_basis.push_back(kb.row(r));
    }

    std::vector<Vec> expanded;
    expanded.reserve(lambda_basis.size());
    for (const Vec& lambda : lambda_basis) {
      Vec full(ambient, Rational(0));
      for (std::size_t ti = 0; ti < tuples_[level].size(); ++ti) {
        const auto& t = tuples_[level][ti];
        std::vector<std::size_t> rest(t.begin() + 1, t.end());
        const std::size_t ridx = tuple_index_[level - 1].at(rest);
        for (std::size_t w = 0; w < prev_dim; ++w) {
          const Rational& c = lambda[t[0] * prev_dim + w];
          if (c == 0) continue;
          for (std::size_t k = 0; k < val; ++k)
            full[ti * val + k] += c * prev_basis[w][ridx * val + k];
        }
      }
      expanded.push_back(std::move(full));
    }
    Level next;
    next.space = Subspace::span(expanded, ambient);

    const std::size_t d = next.space.dim();
    for (std::size_t i = 0; i < n; ++i) {
      Matrix av = value_action(kind, i);
      std::vector<Vec> act_rows(d, Vec(d, Rational(0)));
      for (std::size_t j = 0; j < d; ++j) {
        Vec moved(ambient, Rational(0));
        const Vec base_vec = next.space.basis_vector(j);
        for (std::size_t t = 0; t * val < ambient; ++t) {
          Vec slot(base_vec.begin() + t * val,
                   base_vec.begin() + (t + 1) * val);
          Vec out = av.apply(slot);
          for (std::size_t k = 0; k < val; ++k) moved[t * val + k] = out[k];
        }
        auto coords = next.space.coordinates(moved);
        if (!coords)
          fail(errc::internal, "base-algebra action left a form space");
        for (std::size_t r = 0; r < d; ++r) act_rows[r][j] = (*coords)[r];
      }
      next.action.push_back(d == 0 ? Matrix(0, 0)
                                   : Matrix::from_rows(act_rows));
    }
    tw.push_back(std::move(next));
  }
}

const Subspace& DeRhamComplex::space(std::size_t q, Form::Values kind) {
  ensure_levels(kind, q);
  return tower(kind)[q].space;
}

std::size_t DeRhamComplex::space_dim(std::size_t q, Form::Values kind) {
  return space(q, kind).dim();
}

Form DeRhamComplex::zero_form(std::size_t q, Form::Values kind) const {
  Form f;
  f.degree = q;
  f.arg_dim = u_.dim();
  f.value_dim = value_dim(kind);
  f.kind = kind;
  f.values.assign(binom(f.arg_dim, q), Vec(f.value_dim, Rational(0)));
  return f;
}

Form DeRhamComplex::basis_form(std::size_t q, std::size_t index,
                               Form::Values kind) {
  return from_flat(q, space(q, kind).basis_vector(index), kind);
}

Form DeRhamComplex::from_flat(std::size_t q, const Vec& flat,
                              Form::Values kind) const {
  Form f = zero_form(q, kind);
  if (flat.size() != f.values.size() * f.value_dim)
    fail(errc::dimension_mismatch, "form array has the wrong length");
  for (std::size_t t = 0; t < f.values.size(); ++t)
    for (std::size_t k = 0; k < f.value_dim; ++k)
      f.values[t][k] = flat[t * f.value_dim + k];
  return f;
}

bool DeRhamComplex::in_space(const Form& omega) {
  return space(omega.degree, omega.kind).contains(omega.flat());
}

Vec DeRhamComplex::eval(const Form& omega,
                        const std::vector<std::size_t>& tuple) const {
  auto* self = const_cast<DeRhamComplex*>(this);
  self->ensure_tuples(omega.degree);
  std::vector<std::size_t> sorted = tuple;
  auto sign = sort_sign(sorted);
  if (!sign) return Vec(omega.value_dim, Rational(0));
  const std::size_t idx = tuple_index_[omega.degree].at(sorted);
  Vec out = omega.values[idx];
  if (*sign < 0)
    for (Rational& x : out) x = -x;
  return out;
}

Vec DeRhamComplex::apply_kappa_column(const Matrix& kappa, std::size_t j,
                                      const Vec& value,
                                      Form::Values kind) const {
  Vec kcol = matrix_column(kappa, j);
  return kind == Form::Values::carrier
             ? v_.apply_to_carrier_value(kcol, value)
             : v_.apply_to_base_value(kcol, value);
}

Vec DeRhamComplex::multiply_value(const Vec& base_coeffs, const Vec& value,
                                  Form::Values kind) const {
  Vec out(value.size(), Rational(0));
  for (std::size_t i = 0; i < base_coeffs.size(); ++i) {
    if (base_coeffs[i] == 0) continue;
    Vec part = value_action(kind, i).apply(value);
    add_scaled(out, base_coeffs[i], part);
  }
  return out;
}

Form DeRhamComplex::wedge(const Form& lhs_base_valued, const Form& rhs) const {
  const Form& lhs = lhs_base_valued;
  if (lhs.kind != Form::Values::base)
    fail(errc::bad_argument, "left wedge factor must be base-algebra valued");
  if (lhs.arg_dim != u_.dim() || rhs.arg_dim != u_.dim())
    fail(errc::dimension_mismatch, "wedge factors live on a different space");
  const std::size_t p = lhs.degree;
  const std::size_t q = rhs.degree;
  Form out = zero_form(p + q, rhs.kind);
  auto* self = const_cast<DeRhamComplex*>(this);
  self->ensure_tuples(p + q);
  const auto combos = combinations(p + q, p);
  const Rational scale =
      Rational(1) / Rational(static_cast<long>(binom(p + q, p)));
  for (std::size_t ti = 0; ti < tuples_[p + q].size(); ++ti) {
    const auto& t = tuples_[p + q][ti];
    Vec acc(out.value_dim, Rational(0));
    for (const auto& subset : combos) {
      int sign = 1;
      std::vector<std::size_t> left, right;
      std::size_t next = 0;
      for (std::size_t pos : subset) {
        if ((pos - left.size()) % 2 == 1) sign = -sign;
        left.push_back(t[pos]);
        while (next < pos) right.push_back(t[next++]);
        ++next;
      }
      while (next < t.size()) right.push_back(t[next++]);
      Vec f = eval(lhs, left);
      Vec w = eval(rhs, right);
      Vec prod = multiply_value(f, w, rhs.kind);
      add_scaled(acc, sign < 0 ? -scale : scale, prod);
    }
    out.values[ti] = std::move(acc);
  }
  return out;
}

Form DeRhamComplex::interior(const Vec& xi, const Form& omega) const {
  if (omega.degree == 0)
    fail(errc::bad_argument, "interior product needs degree at least one");
  const std::size_t q = omega.degree;
  Form out = zero_form(q - 1, omega.kind);
  auto* self = const_cast<DeRhamComplex*>(this);
  self->ensure_tuples(q);
  const Rational factor(static_cast<long>(q));
  for (std::size_t ti = 0; ti < tuples_[q - 1].size(); ++ti) {
    const auto& t = tuples_[q - 1][ti];
    Vec acc(out.value_dim, Rational(0));
    std::vector<std::size_t> full(q);
    std::copy(t.begin(), t.end(), full.begin() + 1);
    for (std::size_t l = 0; l < xi.size(); ++l) {
      if (xi[l] == 0) continue;
      full[0] = l;
      add_scaled(acc, xi[l], eval(omega, full));
    }
    for (Rational& x : acc) x *= factor;
    out.values[ti] = std::move(acc);
  }
  return out;
}

Form DeRhamComplex::lie(const Matrix& kappa, const Vec& xi,
                        const Form& omega) const {
  if (kappa.rows() != v_.dim() || kappa.cols() != u_.dim())
    fail(errc::dimension_mismatch,
         "connecting map has the wrong shape for these derivation spaces");
  const std::size_t q = omega.degree;
  Form out = zero_form(q, omega.kind);
  auto* self = const_cast<DeRhamComplex*>(this);
  self->ensure_tuples(q);
  Vec kxi = kappa.apply(xi);
  for (std::size_t ti = 0; ti < tuples_[q].size(); ++ti) {
    const auto& t = tuples_[q][ti];
    Vec acc = omega.kind == Form::Values::carrier
                  ? v_.apply_to_carrier_value(kxi, omega.values[ti])
                  : v_.apply_to_base_value(kxi, omega.values[ti]);
    for (std::size_t r = 0; r < q; ++r) {
      Vec unit(u_.dim(), Rational(0));
      unit[t[r]] = Rational(1);
      Vec br = u_.bracket(xi, unit);
      std::vector<std::size_t> moved = t;
      for (std::size_t l = 0; l < u_.dim(); ++l) {
        if (br[l] == 0) continue;
        moved[r] = l;
        add_scaled(acc, -br[l], eval(omega, moved));
      }
    }
    out.values[ti] = std::move(acc);
  }
  return out;
}

Form DeRhamComplex::differential(const Matrix& kappa,
                                 const Form& omega) const {
  if (kappa.rows() != v_.dim() || kappa.cols() != u_.dim())
    fail(errc::dimension_mismatch,
         "connecting map has the wrong shape for these derivation spaces");
  const std::size_t q = omega.degree;
  Form out = zero_form(q + 1, omega.kind);
  auto* self = const_cast<DeRhamComplex*>(this);
  self->ensure_tuples(q + 1);
  const Rational scale = Rational(1) / Rational(static_cast<long>(q + 1));
  for (std::size_t ti = 0; ti < tuples_[q + 1].size(); ++ti) {
    const auto& t = tuples_[q + 1][ti];
    Vec acc(out.value_dim, Rational(0));
    for (std::size_t r = 0; r <= q; ++r) {
      std::vector<std::size_t> omitted;
      omitted.reserve(q);
      for (std::size_t p = 0; p <= q; ++p)
        if (p != r) omitted.push_back(t[p]);
      Vec applied = apply_kappa_column(
          kappa, t[r], eval(omega, omitted), omega.kind);
      add_scaled(acc, r % 2 == 0 ? Rational(1) : Rational(-1), applied);
    }
    for (std::size_t r = 0; r <= q; ++r) {
      for (std::size_t s = r + 1; s <= q; ++s) {
        const Vec& br = u_.bracket_table[t[r]][t[s]];
        std::vector<std::size_t> rest;
        rest.reserve(q);
        rest.push_back(0);
        for (std::size_t p = 0; p <= q; ++p)
          if (p != r && p != s) rest.push_back(t[p]);
        const Rational sgn((r + s) % 2 == 0 ? 1 : -1);
        for (std::size_t l = 0; l < u_.dim(); ++l) {
          if (br[l] == 0) continue;
          rest[0] = l;
          add_scaled(acc, sgn * br[l], eval(omega, rest));
        }
      }
    }
    for (Rational& x : acc) x *= scale;
    out.values[ti] = std::move(acc);
  }
  return out;
}

bool DeRhamComplex::kappa_is_linear(const Matrix& kappa) const {
  if (kappa.rows() != v_.dim() || kappa.cols() != u_.dim())
    fail(errc::dimension_mismatch,
         "connecting map has the wrong shape for these derivation spaces");
  for (std::size_t i = 0; i < u_.carrier.base().dim(); ++i)
    if (kappa * u_.coord_action[i] != v_.coord_action[i] * kappa) return false;
  return true;
}

std::vector<std::vector<Vec>> DeRhamComplex::curvature(
    const Matrix& kappa) const {
  const std::size_t su = u_.dim();
  std::vector<std::vector<Vec>> table(su, std::vector<Vec>(su));
  for (std::size_t i = 0; i < su; ++i) {
    for (std::size_t j = 0; j < su; ++j) {
      Vec val =
          v_.bracket(matrix_column(kappa, i), matrix_column(kappa, j));
      const Vec& br = u_.bracket_table[i][j];
      for (std::size_t l = 0; l < su; ++l) {
        if (br[l] == 0) continue;
        add_scaled(val, -br[l], matrix_column(kappa, l));
      }
      table[i][j] = std::move(val);
    }
  }
  return table;
}

bool DeRhamComplex::curvature_is_zero(const Matrix& kappa) const {
  for (const auto& row : curvature(kappa))
    for (const Vec& v : row)
      for (const Rational& x : v)
        if (x != 0) return false;
  return true;
}

Matrix DeRhamComplex::differential_matrix(const Matrix& kappa,
                                          std::size_t q) {
  const Subspace& target = space(q + 1);
  const std::size_t d = space_dim(q);
  std::vector<Vec> cols(d);
  for (std::size_t j = 0; j < d; ++j) {
    Form image = differential(kappa, basis_form(q, j));
    auto coords = target.coordinates(image.flat());
    if (!coords) fail(errc::internal, "differential left the form space");
    cols[j] = std::move(*coords);
  }
  std::vector<Vec> rows(target.dim(), Vec(d, Rational(0)));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t r = 0; r < target.dim(); ++r) rows[r][j] = cols[j][r];
  return target.dim() == 0 || d == 0 ? Matrix(target.dim(), d)
                                     : Matrix::from_rows(rows);
}

std::vector<DeRhamComplex::DegreeRow> DeRhamComplex::cohomology(
    const Matrix& kappa, std::size_t q_max) {
  if (!kappa_is_linear(kappa))
    fail(errc::not_a_linear,
         "connecting map is not linear over the base algebra");
  auto table = curvature(kappa);
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j)
      for (const Rational& x : table[i][j])
        if (x != 0)
          fail(errc::nonzero_curvature,
               "curvature is nonzero at basis pair (" + std::to_string(i) +
                   "," + std::to_string(j) + ")");
  ensure_levels(Form::Values::carrier, q_max + 1);
  std::vector<Matrix> ds;
  std::vector<std::size_t> ranks;
  for (std::size_t q = 0; q <= q_max; ++q) {
    ds.push_back(differential_matrix(kappa, q));
    ranks.push_back(rref(ds.back()).rank);
  }
  for (std::size_t q = 0; q + 1 <= q_max; ++q) {
    Matrix square = ds[q + 1] * ds[q];
    if (!square.is_zero())
      fail(errc::internal, "differential does not square to zero");
  }
  std::vector<DegreeRow> rows;
  for (std::size_t q = 0; q <= q_max; ++q) {
    const std::size_t dim_q = space_dim(q);
    const std::size_t prev_rank = q == 0 ? 0 : ranks[q - 1];
    rows.push_back({q, dim_q, ranks[q], dim_q - ranks[q] - prev_rank});
  }
  return rows;
}

std::vector<DeRhamComplex::HomotopyRow> DeRhamComplex::homotopy_check(
    std::size_t q_max) {
  if (!v_.carrier.is_module())
    fail(errc::bad_argument,
         "the degree-operator identity needs a module carrier");
  if (u_.space != v_.space)
    fail(errc::bad_argument,
         "the degree-operator identity needs matching argument and value "
         "sides");
  const std::size_t m = v_.carrier.module().dim();
  const std::size_t n = v_.carrier.base().dim();
  auto euler = v_.space.coordinates(
      join_pair(Matrix::identity(m), Matrix(n, n)));
  if (!euler)
    fail(errc::internal,
         "identity-on-module pair is not among the module derivations");
  Matrix kappa = Matrix::identity(u_.dim());
  std::vector<HomotopyRow> rows;
  for (std::size_t q = 0; q <= q_max; ++q) {
    bool identity_ok = true;
    bool lie_ok = true;
    for (std::size_t k = 0; k < space_dim(q); ++k) {
      Form omega = basis_form(q, k);
      Form recovered =
          q == 0 ? interior(*euler, differential(kappa, omega))
                 : [&] {
                     Form a = interior(*euler, differential(kappa, omega));
                     Form b = differential(kappa, interior(*euler, omega));
                     Vec sum = a.flat();
                     Vec add = b.flat();
                     for (std::size_t i = 0; i < sum.size(); ++i)
                       sum[i] += add[i];
                     return from_flat(q, sum, omega.kind);
                   }();
      if (recovered.flat() != omega.flat()) identity_ok = false;
      if (lie(kappa, *euler, omega).flat() != omega.flat()) lie_ok = false;
    }
    rows.push_back({q, identity_ok, lie_ok});
  }
  return rows;
}

}  // namespace modan
