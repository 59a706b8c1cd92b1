#include "hochschild.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace modan {

namespace {

constexpr std::size_t kMaxUnknowns = 4000;
constexpr std::size_t kMaxAmbient = 2'000'000;

std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > kMaxAmbient / base)
      fail(errc::cap_exceeded, "cochain ambient dimension exceeds cap");
    result *= base;
  }
  return result;
}

std::size_t flat_index(const std::vector<std::size_t>& tuple,
                       std::size_t arg_dim) {
  std::size_t idx = 0;
  for (std::size_t t : tuple) idx = idx * arg_dim + t;
  return idx;
}

bool next_tuple(std::vector<std::size_t>& tuple, std::size_t arg_dim) {
  for (std::size_t pos = tuple.size(); pos-- > 0;) {
    if (++tuple[pos] < arg_dim) return true;
    tuple[pos] = 0;
  }
  return false;
}

void add_scaled(Vec& target, const Rational& c, const Vec& src) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] += c * src[i];
}

Vec matrix_column(const Matrix& m, std::size_t j) {
  Vec col(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m.at(i, j);
  return col;
}

}  // namespace

const Vec& Cochain::at(const std::vector<std::size_t>& tuple) const {
  return values[flat_index(tuple, arg_dim)];
}

Vec Cochain::flat() const {
  Vec out;
  out.reserve(values.size() * value_dim);
  for (const Vec& v : values) out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool Cochain::is_zero() const {
  for (const Vec& v : values)
    for (const Rational& x : v)
      if (x != 0) return false;
  return true;
}

HochschildComplex::HochschildComplex(MultSpace arg_side, MultSpace value_side)
    : u_(std::move(arg_side)), v_(std::move(value_side)) {
  if (!u_.carrier.same_base(v_.carrier))
    fail(errc::mixed_base_algebra,
         "argument and value carriers have different base algebras");
}

std::size_t HochschildComplex::tuple_count(std::size_t q) const {
  return checked_power(u_.dim(), q);
}

void HochschildComplex::ensure_spaces(std::size_t q) {
  if (spaces_.empty()) {
    spaces_.push_back(Subspace::full(v_.dim()));
    actions_.push_back(v_.coord_action);
  }
  const std::size_t su = u_.dim();
  const std::size_t sv = v_.dim();
  const std::size_t n = u_.carrier.base().dim();
  while (spaces_.size() <= q) {
    const std::size_t level = spaces_.size();
    const std::size_t prev_dim = spaces_[level - 1].dim();
    const std::size_t unknowns = su * prev_dim;
    if (unknowns > kMaxUnknowns)
      fail(errc::cap_exceeded, "cochain construction exceeds size cap");
    const std::size_t ambient = tuple_count(level) * sv;

    // Unknowns lambda[j][w]: coordinates of the first-slot slices in the
    // previous cochain space. Constraints encode linearity of the first
    // slot over the base algebra.
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix& au = u_.coord_action[i];
      const Matrix& wprev = actions_[level - 1][i];
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
    std::vector<Vec> lambda_basis;
    if (rows.empty()) {
      lambda_basis.reserve(unknowns);
      for (std::size_t k = 0; k < unknowns; ++k) {
        Vec e(unknowns, Rational(0));
        e[k] = Rational(1);
        lambda_basis.push_back(std::move(e));
      }
    } else {
      Matrix kb = kernel_basis(Matrix::from_rows(rows));
      lambda_basis.reserve(kb.rows());
      for (std::size_t r = 0; r < kb.rows(); ++r)
        lambda_basis.push_back(kb.row(r));
    }

    // Expand each lambda solution into a full tuple-indexed array.
    std::vector<Vec> expanded;
    expanded.reserve(lambda_basis.size());
    const std::size_t prev_tuples = tuple_count(level - 1);
    for (const Vec& lambda : lambda_basis) {
      Vec full(ambient, Rational(0));
      for (std::size_t j = 0; j < su; ++j) {
        for (std::size_t w = 0; w < prev_dim; ++w) {
          const Rational& c = lambda[j * prev_dim + w];
          if (c == 0) continue;
          const Vec prev = spaces_[level - 1].basis_vector(w);
          for (std::size_t rest = 0; rest < prev_tuples; ++rest)
            for (std::size_t k = 0; k < sv; ++k)
              full[(j * prev_tuples + rest) * sv + k] +=
                  c * prev[rest * sv + k];
        }
      }
      expanded.push_back(std::move(full));
    }
    spaces_.push_back(Subspace::span(expanded, ambient));

    // Tabulate the base-algebra action on the new level.
    const Subspace& here = spaces_.back();
    const std::size_t d = here.dim();
    std::vector<Matrix> acts;
    acts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Vec> act_rows(d, Vec(d, Rational(0)));
      for (std::size_t j = 0; j < d; ++j) {
        Vec moved(ambient, Rational(0));
        const Vec base_vec = here.basis_vector(j);
        const Matrix& av = v_.coord_action[i];
        const std::size_t tuples = ambient / (sv == 0 ? 1 : sv);
        for (std::size_t t = 0; t < tuples; ++t) {
          Vec val(base_vec.begin() + t * sv, base_vec.begin() + (t + 1) * sv);
          Vec out = av.apply(val);
          for (std::size_t k = 0; k < sv; ++k) moved[t * sv + k] = out[k];
        }
        auto coords = here.coordinates(moved);
        if (!coords)
          fail(errc::internal,
               "base-algebra action left a cochain space");
        for (std::size_t r = 0; r < d; ++r) act_rows[r][j] = (*coords)[r];
      }
      acts.push_back(d == 0 ? Matrix(0, 0) : Matrix::from_rows(act_rows));
    }
    actions_.push_back(std::move(acts));
  }
}

const Subspace& HochschildComplex::space(std::size_t q) {
  ensure_spaces(q);
  return spaces_[q];
}

std::size_t HochschildComplex::space_dim(std::size_t q) { return space(q).dim(); }

Cochain HochschildComplex::zero_cochain(std::size_t q) const {
  Cochain c;
  c.degree = q;
  c.arg_dim = u_.dim();
  c.value_dim = v_.dim();
  c.values.assign(checked_power(c.arg_dim, q), Vec(c.value_dim, Rational(0)));
  return c;
}

Cochain HochschildComplex::basis_cochain(std::size_t q, std::size_t index) {
  return from_flat(q, space(q).basis_vector(index));
}

Cochain HochschildComplex::from_flat(std::size_t q, const Vec& flat) const {
  Cochain c = zero_cochain(q);
  if (flat.size() != c.values.size() * c.value_dim)
    fail(errc::dimension_mismatch, "cochain array has the wrong length");
  for (std::size_t t = 0; t < c.values.size(); ++t)
    for (std::size_t k = 0; k < c.value_dim; ++k)
      c.values[t][k] = flat[t * c.value_dim + k];
  return c;
}

bool HochschildComplex::in_space(const Cochain& c) {
  return space(c.degree).contains(c.flat());
}

Cochain HochschildComplex::tensor(const Cochain& a, const Cochain& b) const {
  Cochain out = zero_cochain(a.degree + b.degree);
  std::vector<std::size_t> tuple(out.degree, 0);
  if (out.values.empty()) return out;
  do {
    std::vector<std::size_t> head(tuple.begin(), tuple.begin() + a.degree);
    std::vector<std::size_t> tail(tuple.begin() + a.degree, tuple.end());
    out.values[flat_index(tuple, out.arg_dim)] =
        v_.compose(a.at(head), b.at(tail));
  } while (next_tuple(tuple, out.arg_dim));
  return out;
}

Cochain HochschildComplex::delta(const Matrix& kappa, const Cochain& c) const {
  const std::size_t q = c.degree;
  Cochain out = zero_cochain(q + 1);
  if (out.values.empty()) return out;
  std::vector<std::size_t> tuple(q + 1, 0);
  do {
    Vec acc(v_.dim(), Rational(0));
    // Left composition with kappa of the first argument.
    {
      std::vector<std::size_t> rest(tuple.begin() + 1, tuple.end());
      add_scaled(acc, Rational(1),
                 v_.compose(matrix_column(kappa, tuple[0]), c.at(rest)));
    }
    // Interior contractions of adjacent arguments.
    Rational sign(-1);
    for (std::size_t r = 1; r <= q; ++r) {
      const Vec& comp = u_.comp_table[tuple[r - 1]][tuple[r]];
      std::vector<std::size_t> inner;
      inner.reserve(q);
      for (std::size_t p = 0; p + 1 < r; ++p) inner.push_back(tuple[p]);
      inner.push_back(0);
      for (std::size_t p = r + 1; p <= q; ++p) inner.push_back(tuple[p]);
      for (std::size_t l = 0; l < u_.dim(); ++l) {
        if (comp[l] == 0) continue;
        inner[r - 1] = l;
        add_scaled(acc, sign * comp[l], c.at(inner));
      }
      sign = -sign;
    }
    // Right composition with kappa of the last argument.
    {
      std::vector<std::size_t> rest(tuple.begin(), tuple.end() - 1);
      add_scaled(acc, sign,
                 v_.compose(c.at(rest), matrix_column(kappa, tuple[q])));
    }
    out.values[flat_index(tuple, out.arg_dim)] = std::move(acc);
  } while (next_tuple(tuple, out.arg_dim));
  return out;
}

Cochain HochschildComplex::residual(const Matrix& kappa) const {
  Cochain out = zero_cochain(2);
  for (std::size_t i = 0; i < u_.dim(); ++i) {
    for (std::size_t j = 0; j < u_.dim(); ++j) {
      Vec val = v_.compose(matrix_column(kappa, i), matrix_column(kappa, j));
      const Vec& comp = u_.comp_table[i][j];
      for (std::size_t l = 0; l < u_.dim(); ++l) {
        if (comp[l] == 0) continue;
        add_scaled(val, -comp[l], matrix_column(kappa, l));
      }
      out.values[i * u_.dim() + j] = std::move(val);
    }
  }
  return out;
}

bool HochschildComplex::kappa_is_linear(const Matrix& kappa) {
  if (kappa.rows() != v_.dim() || kappa.cols() != u_.dim())
    fail(errc::dimension_mismatch,
         "connecting map has the wrong shape for these multiplier spaces");
  Cochain as_cochain = zero_cochain(1);
  for (std::size_t j = 0; j < u_.dim(); ++j)
    as_cochain.values[j] = matrix_column(kappa, j);
  return in_space(as_cochain);
}

Matrix HochschildComplex::delta_matrix(const Matrix& kappa, std::size_t q) {
  const Subspace& target = space(q + 1);
  const std::size_t d = space_dim(q);
  std::vector<Vec> cols(d);
  for (std::size_t j = 0; j < d; ++j) {
    Cochain image = delta(kappa, basis_cochain(q, j));
    auto coords = target.coordinates(image.flat());
    if (!coords)
      fail(errc::internal, "differential left the cochain space");
    cols[j] = std::move(*coords);
  }
  std::vector<Vec> rows(target.dim(), Vec(d, Rational(0)));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t r = 0; r < target.dim(); ++r) rows[r][j] = cols[j][r];
  return target.dim() == 0 || d == 0 ? Matrix(target.dim(), d)
                                     : Matrix::from_rows(rows);
}

std::vector<HochschildComplex::DegreeRow> HochschildComplex::cohomology(
    const Matrix& kappa, std::size_t q_max) {
  if (!kappa_is_linear(kappa))
    fail(errc::not_a_linear,
         "connecting map is not linear over the base algebra");
  Cochain g = residual(kappa);
  if (!g.is_zero()) {
    for (std::size_t i = 0; i < u_.dim(); ++i)
      for (std::size_t j = 0; j < u_.dim(); ++j)
        if (!std::all_of(g.values[i * u_.dim() + j].begin(),
                         g.values[i * u_.dim() + j].end(),
                         [](const Rational& x) { return x == 0; }))
          fail(errc::nonzero_residual,
               "composition residual is nonzero at basis pair (" +
                   std::to_string(i) + "," + std::to_string(j) + ")");
  }
  ensure_spaces(q_max + 1);
  std::vector<Matrix> deltas;
  std::vector<std::size_t> ranks;
  for (std::size_t q = 0; q <= q_max; ++q) {
    deltas.push_back(delta_matrix(kappa, q));
    ranks.push_back(rref(deltas.back()).rank);
  }
  for (std::size_t q = 0; q + 1 <= q_max; ++q) {
    Matrix square = deltas[q + 1] * deltas[q];
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

}  // namespace modan
