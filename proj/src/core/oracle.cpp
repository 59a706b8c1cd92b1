#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "carrier.hpp"
#include "derham.hpp"
#include "derivation.hpp"
#include "errors.hpp"
#include "hochschild.hpp"
#include "matrix.hpp"
#include "multiplier.hpp"
#include "opspace.hpp"
#include "pairops.hpp"

namespace modan {

const char* to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::agree:
      return "agree";
    case OracleStatus::mismatch:
      return "mismatch";
    case OracleStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

namespace {

// The oracle keeps its own elimination so that no rank or dimension below
// depends on the primary rref/kernel implementations.

using OMat = std::vector<Vec>;

/// In-place reduction to reduced echelon form; returns the pivot columns.
std::vector<std::size_t> oreduce(OMat& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows; ++col) {
    std::size_t p = next;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[next], a[p]);
    const Rational inv = Rational(1) / a[next][col];
    for (std::size_t t = col; t < cols; ++t) a[next][t] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next) continue;
      const Rational f = a[r][col];
      if (f == 0) continue;
      for (std::size_t t = col; t < cols; ++t) a[r][t] -= f * a[next][t];
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

std::size_t orank(OMat a) { return oreduce(a).size(); }

/// Solution basis of a x = 0 for the given row matrix.
std::vector<Vec> onull(OMat a, std::size_t cols) {
  const std::vector<std::size_t> pivots = oreduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coordinates of target in the span of the given basis vectors.
Vec ocoords(const std::vector<Vec>& basis, const Vec& target) {
  const std::size_t amb = target.size(), s = basis.size();
  OMat a(amb, Vec(s + 1, Rational(0)));
  for (std::size_t r = 0; r < amb; ++r) {
    for (std::size_t c = 0; c < s; ++c) a[r][c] = basis[c][r];
    a[r][s] = target[r];
  }
  const std::vector<std::size_t> pivots = oreduce(a);
  Vec x(s, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == s) fail(errc::internal, "oracle table entry left its solution space");
    x[pivots[r]] = a[r][s];
  }
  return x;
}

Vec unit(std::size_t len, std::size_t i) {
  Vec v(len, Rational(0));
  v[i] = 1;
  return v;
}

void accumulate(Vec& into, const Rational& c, const Vec& v) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += c * v[i];
}

// ---------------------------------------------------------------------------
// carrier view and operator helpers (pairs for modules, plain matrices else)
// ---------------------------------------------------------------------------

struct OCarrier {
  const Algebra* alg = nullptr;
  const Module* mod = nullptr;

  std::size_t base_dim() const { return alg->dim(); }
  std::size_t value_dim() const { return mod ? mod->dim() : alg->dim(); }
  bool pair() const { return mod != nullptr; }
  std::size_t ambient() const {
    const std::size_t v = value_dim();
    return pair() ? v * v + base_dim() * base_dim() : v * v;
  }
  Matrix value_mult(std::size_t i) const {
    const Vec e = unit(base_dim(), i);
    return mod ? mod->action_matrix(e) : alg->mult_matrix(e);
  }
  Matrix base_mult(std::size_t i) const { return alg->mult_matrix(unit(base_dim(), i)); }
};

Matrix op_top(const OCarrier& c, const Vec& op) {
  const std::size_t v = c.value_dim();
  return Matrix::from_flat(Vec(op.begin(), op.begin() + v * v), v, v);
}

Matrix op_bottom(const OCarrier& c, const Vec& op) {
  if (!c.pair()) return op_top(c, op);
  const std::size_t v = c.value_dim(), n = c.base_dim();
  return Matrix::from_flat(Vec(op.begin() + v * v, op.begin() + v * v + n * n), n, n);
}

Vec op_join(const OCarrier& c, const Matrix& top, const Matrix& bottom) {
  Vec out = top.flat();
  if (c.pair()) {
    const Vec b = bottom.flat();
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

Vec op_compose(const OCarrier& c, const Vec& x, const Vec& y) {
  return op_join(c, op_top(c, x) * op_top(c, y), op_bottom(c, x) * op_bottom(c, y));
}

Vec op_bracket(const OCarrier& c, const Vec& x, const Vec& y) {
  return op_join(c, commutator(op_top(c, x), op_top(c, y)), commutator(op_bottom(c, x), op_bottom(c, y)));
}

Vec op_base_act(const OCarrier& c, std::size_t i, const Vec& x) {
  return op_join(c, c.value_mult(i) * op_top(c, x), c.base_mult(i) * op_bottom(c, x));
}

// ---------------------------------------------------------------------------
// solution spaces from unit-vector enumeration of the defining residuals
// ---------------------------------------------------------------------------

std::vector<Vec> residual_nullspace(std::size_t unknowns, const std::function<Vec(const Vec&)>& residual) {
  std::vector<Vec> columns;
  columns.reserve(unknowns);
  std::size_t rows = 0;
  for (std::size_t u = 0; u < unknowns; ++u) {
    columns.push_back(residual(unit(unknowns, u)));
    rows = columns.back().size();
  }
  OMat a(rows, Vec(unknowns, Rational(0)));
  for (std::size_t u = 0; u < unknowns; ++u)
    for (std::size_t r = 0; r < rows; ++r) a[r][u] = columns[u][r];
  if (rows == 0) {
    std::vector<Vec> basis;
    for (std::size_t u = 0; u < unknowns; ++u) basis.push_back(unit(unknowns, u));
    return basis;
  }
  return onull(std::move(a), unknowns);
}

std::vector<Vec> oracle_mult_space(const OCarrier& c) {
  const std::size_t n = c.base_dim(), v = c.value_dim();
  const Algebra& a = *c.alg;
  if (!c.pair()) {
    return residual_nullspace(n * n, [&](const Vec& flat) {
      const Matrix r = Matrix::from_flat(flat, n, n);
      Vec res;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Vec lhs = r.apply(a.product_of_basis(i, j));
          const Vec rhs = a.multiply(unit(n, i), r.apply(unit(n, j)));
          for (std::size_t k = 0; k < n; ++k) res.push_back(lhs[k] - rhs[k]);
        }
      return res;
    });
  }
  const Module& mod = *c.mod;
  return residual_nullspace(c.ambient(), [&](const Vec& flat) {
    const Matrix delta = op_top(c, flat);
    const Matrix r = op_bottom(c, flat);
    Vec res;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < v; ++j) {
        const Vec fm = mod.act(unit(n, i), unit(v, j));
        const Vec linear_lhs = delta.apply(fm);
        const Vec linear_rhs = mod.act(unit(n, i), delta.apply(unit(v, j)));
        const Vec link_rhs = mod.act(r.apply(unit(n, i)), unit(v, j));
        for (std::size_t k = 0; k < v; ++k) {
          res.push_back(linear_lhs[k] - linear_rhs[k]);
          res.push_back(linear_lhs[k] - link_rhs[k]);
        }
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec lhs = r.apply(a.product_of_basis(i, j));
        const Vec rhs = a.multiply(unit(n, i), r.apply(unit(n, j)));
        for (std::size_t k = 0; k < n; ++k) res.push_back(lhs[k] - rhs[k]);
      }
    return res;
  });
}

std::vector<Vec> oracle_der_space(const OCarrier& c) {
  const std::size_t n = c.base_dim(), v = c.value_dim();
  const Algebra& a = *c.alg;
  if (!c.pair()) {
    return residual_nullspace(n * n, [&](const Vec& flat) {
      const Matrix x = Matrix::from_flat(flat, n, n);
      Vec res;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Vec lhs = x.apply(a.product_of_basis(i, j));
          const Vec r1 = a.multiply(x.apply(unit(n, i)), unit(n, j));
          const Vec r2 = a.multiply(unit(n, i), x.apply(unit(n, j)));
          for (std::size_t k = 0; k < n; ++k) res.push_back(lhs[k] - r1[k] - r2[k]);
        }
      return res;
    });
  }
  const Module& mod = *c.mod;
  return residual_nullspace(c.ambient(), [&](const Vec& flat) {
    const Matrix nabla = op_top(c, flat);
    const Matrix x = op_bottom(c, flat);
    Vec res;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec lhs = x.apply(a.product_of_basis(i, j));
        const Vec r1 = a.multiply(x.apply(unit(n, i)), unit(n, j));
        const Vec r2 = a.multiply(unit(n, i), x.apply(unit(n, j)));
        for (std::size_t k = 0; k < n; ++k) res.push_back(lhs[k] - r1[k] - r2[k]);
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < v; ++j) {
        const Vec lhs = nabla.apply(mod.act(unit(n, i), unit(v, j)));
        const Vec r1 = mod.act(x.apply(unit(n, i)), unit(v, j));
        const Vec r2 = mod.act(unit(n, i), nabla.apply(unit(v, j)));
        for (std::size_t k = 0; k < v; ++k) res.push_back(lhs[k] - r1[k] - r2[k]);
      }
    return res;
  });
}

std::vector<Vec> oracle_endo_space(const Module& mod) {
  const std::size_t n = mod.base().dim(), m = mod.dim();
  return residual_nullspace(m * m, [&](const Vec& flat) {
    const Matrix e = Matrix::from_flat(flat, m, m);
    Vec res;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const Vec lhs = e.apply(mod.act(unit(n, i), unit(m, j)));
        const Vec rhs = mod.act(unit(n, i), e.apply(unit(m, j)));
        for (std::size_t k = 0; k < m; ++k) res.push_back(lhs[k] - rhs[k]);
      }
    return res;
  });
}

// ---------------------------------------------------------------------------
// product/bracket/action tables over an oracle basis
// ---------------------------------------------------------------------------

struct OTable {
  std::vector<Vec> basis;                     // flat operators
  std::vector<std::vector<Vec>> pairwise;     // composition or bracket coordinates
  std::vector<std::vector<Vec>> action;       // action[i][j] = coords of basis_i-of-A times basis_j
};

OTable make_table(const OCarrier& c, const std::vector<Vec>& basis, bool use_bracket) {
  OTable t;
  t.basis = basis;
  const std::size_t s = basis.size(), n = c.base_dim();
  t.pairwise.assign(s, std::vector<Vec>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      const Vec prod = use_bracket ? op_bracket(c, basis[i], basis[j]) : op_compose(c, basis[i], basis[j]);
      t.pairwise[i][j] = ocoords(basis, prod);
    }
  t.action.assign(n, std::vector<Vec>(s));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < s; ++j) t.action[i][j] = ocoords(basis, op_base_act(c, i, basis[j]));
  return t;
}

// ---------------------------------------------------------------------------
// full-grid cochain and form spaces
// ---------------------------------------------------------------------------

// Saturates well above every cap so comparisons against the caps stay valid.
std::size_t grid_count(std::size_t s, std::size_t q) {
  constexpr std::size_t limit = std::size_t{1} << 40;
  std::size_t count = 1;
  for (std::size_t i = 0; i < q; ++i) {
    if (s != 0 && count > limit / s) return limit;
    count *= s;
  }
  return count;
}

bool next_tuple(std::vector<std::size_t>& t, std::size_t base) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

std::size_t tuple_index(const std::vector<std::size_t>& t, std::size_t base) {
  std::size_t idx = 0;
  for (std::size_t v : t) idx = idx * base + v;
  return idx;
}

/// Grid of A-multilinear maps {basis tuples}^q -> coordinate space Q^w.
/// `action_on_value` gives the matrix entry (component, j) of the base-algebra
/// action of algebra basis i on the value coordinate space.
std::vector<Vec> grid_multilinear_space(std::size_t s, std::size_t q, std::size_t w, std::size_t n,
                                        const std::vector<std::vector<Vec>>& arg_action,
                                        const std::function<Rational(std::size_t, std::size_t, std::size_t)>& action_on_value,
                                        bool antisymmetric) {
  const std::size_t tuples = grid_count(s, q);
  const std::size_t unknowns = tuples * w;
  if (q == 0) {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < w; ++i) basis.push_back(unit(w, i));
    return basis;
  }
  if (tuples == 0) return {};
  OMat rows;
  std::vector<std::size_t> t(q, 0);
  do {
    const std::size_t ti = tuple_index(t, s);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < q; ++r) {
        std::vector<std::size_t> moved = t;
        for (std::size_t comp = 0; comp < w; ++comp) {
          Vec row(unknowns, Rational(0));
          for (std::size_t l = 0; l < s; ++l) {
            const Rational& coeff = arg_action[i][t[r]][l];
            if (coeff == 0) continue;
            moved[r] = l;
            row[tuple_index(moved, s) * w + comp] += coeff;
          }
          moved[r] = t[r];
          for (std::size_t j = 0; j < w; ++j) row[ti * w + j] -= action_on_value(i, comp, j);
          rows.push_back(std::move(row));
        }
      }
    if (antisymmetric)
      for (std::size_t r = 0; r + 1 < q; ++r) {
        std::vector<std::size_t> swapped = t;
        std::swap(swapped[r], swapped[r + 1]);
        const std::size_t si = tuple_index(swapped, s);
        for (std::size_t comp = 0; comp < w; ++comp) {
          Vec row(unknowns, Rational(0));
          row[ti * w + comp] += 1;
          row[si * w + comp] += 1;
          rows.push_back(std::move(row));
        }
      }
  } while (next_tuple(t, s));
  return onull(std::move(rows), unknowns);
}

/// Differential of a grid cochain (values in multiplier coordinates) with the
/// identity assignment: left/right compositions plus adjacent contractions.
Vec grid_delta(const OTable& mult, std::size_t q, const Vec& cochain) {
  const std::size_t s = mult.basis.size();
  const std::size_t out_tuples = grid_count(s, q + 1);
  Vec out(out_tuples * s, Rational(0));
  if (out_tuples == 0) return out;
  const auto value_at = [&](const std::vector<std::size_t>& tup) {
    return Vec(cochain.begin() + tuple_index(tup, s) * s, cochain.begin() + (tuple_index(tup, s) + 1) * s);
  };
  const auto compose_coords = [&](const Vec& x, const Vec& y) {
    Vec acc(s, Rational(0));
    for (std::size_t i = 0; i < s; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < s; ++j) {
        if (y[j] == 0) continue;
        accumulate(acc, x[i] * y[j], mult.pairwise[i][j]);
      }
    }
    return acc;
  };
  std::vector<std::size_t> t(q + 1, 0);
  do {
    Vec acc(s, Rational(0));
    {
      const std::vector<std::size_t> rest(t.begin() + 1, t.end());
      accumulate(acc, Rational(1), compose_coords(unit(s, t[0]), value_at(rest)));
    }
    Rational sign(-1);
    for (std::size_t r = 1; r <= q; ++r) {
      const Vec& comp = mult.pairwise[t[r - 1]][t[r]];
      std::vector<std::size_t> inner;
      inner.reserve(q);
      for (std::size_t p = 0; p + 1 < r; ++p) inner.push_back(t[p]);
      inner.push_back(0);
      for (std::size_t p = r + 1; p <= q; ++p) inner.push_back(t[p]);
      for (std::size_t l = 0; l < s; ++l) {
        if (comp[l] == 0) continue;
        inner[r - 1] = l;
        accumulate(acc, sign * comp[l], value_at(inner));
      }
      sign = -sign;
    }
    {
      const std::vector<std::size_t> rest(t.begin(), t.end() - 1);
      accumulate(acc, sign, compose_coords(value_at(rest), unit(s, t[q])));
    }
    const std::size_t ti = tuple_index(t, s);
    for (std::size_t k = 0; k < s; ++k) out[ti * s + k] = acc[k];
  } while (next_tuple(t, s));
  return out;
}

/// Differential of a grid form (values in the carrier value space) with the
/// identity assignment, averaged over argument insertions.
Vec grid_d(const OCarrier& c, const OTable& der, std::size_t q, const Vec& form) {
  const std::size_t s = der.basis.size(), val = c.value_dim();
  const std::size_t out_tuples = grid_count(s, q + 1);
  Vec out(out_tuples * val, Rational(0));
  if (out_tuples == 0) return out;
  std::vector<Matrix> tops;
  for (const Vec& b : der.basis) tops.push_back(op_top(c, b));
  const auto value_at = [&](const std::vector<std::size_t>& tup) {
    return Vec(form.begin() + tuple_index(tup, s) * val, form.begin() + (tuple_index(tup, s) + 1) * val);
  };
  const Rational scale = Rational(1) / Rational(static_cast<long>(q + 1));
  std::vector<std::size_t> t(q + 1, 0);
  do {
    Vec acc(val, Rational(0));
    for (std::size_t r = 0; r <= q; ++r) {
      std::vector<std::size_t> omitted;
      omitted.reserve(q);
      for (std::size_t p = 0; p <= q; ++p)
        if (p != r) omitted.push_back(t[p]);
      accumulate(acc, r % 2 == 0 ? Rational(1) : Rational(-1), tops[t[r]].apply(value_at(omitted)));
    }
    for (std::size_t r = 0; r <= q; ++r)
      for (std::size_t u = r + 1; u <= q; ++u) {
        const Vec& br = der.pairwise[t[r]][t[u]];
        std::vector<std::size_t> rest;
        rest.reserve(q);
        rest.push_back(0);
        for (std::size_t p = 0; p <= q; ++p)
          if (p != r && p != u) rest.push_back(t[p]);
        const Rational sgn((r + u) % 2 == 0 ? 1 : -1);
        for (std::size_t l = 0; l < s; ++l) {
          if (br[l] == 0) continue;
          rest[0] = l;
          accumulate(acc, sgn * br[l], value_at(rest));
        }
      }
    const std::size_t ti = tuple_index(t, s);
    for (std::size_t k = 0; k < val; ++k) out[ti * val + k] = scale * acc[k];
  } while (next_tuple(t, s));
  return out;
}

}  // namespace

std::vector<OracleRow> run_oracle(const Algebra& algebra, const std::optional<Module>& module,
                                  const OracleOptions& options) {
  std::vector<OracleRow> out;
  const auto push = [&](std::string statement, std::size_t primary, std::size_t oracle) {
    out.push_back({std::move(statement), primary, oracle,
                   primary == oracle ? OracleStatus::agree : OracleStatus::mismatch});
  };
  const auto push_skipped = [&](std::string statement, std::size_t primary) {
    out.push_back({std::move(statement), primary, 0, OracleStatus::skipped});
  };

  const OCarrier alg_carrier{&algebra, nullptr};
  const std::vector<Vec> o_ma = oracle_mult_space(alg_carrier);
  const std::vector<Vec> o_da = oracle_der_space(alg_carrier);
  std::size_t total = o_ma.size() + o_da.size();

  std::vector<Vec> o_endo, o_mm, o_md;
  if (module) {
    const OCarrier mod_carrier{&algebra, &*module};
    o_endo = oracle_endo_space(*module);
    o_mm = oracle_mult_space(mod_carrier);
    o_md = oracle_der_space(mod_carrier);
    total += o_endo.size() + o_mm.size() + o_md.size();
  }
  if (total > options.dim_cap)
    fail(errc::cap_exceeded, "combined solution dimensions " + std::to_string(total) +
                                 " exceed the oracle cap " + std::to_string(options.dim_cap));

  push("multiplier algebra dimension", multiplier_algebra(algebra).dim(), o_ma.size());
  push("derivation algebra dimension", derivation_algebra(algebra).dim(), o_da.size());
  if (module) {
    push("module endomorphism dimension", endomorphism_algebra(*module).dim(), o_endo.size());
    push("module multiplier dimension", module_multipliers(*module).dim(), o_mm.size());
    push("module derivation dimension", module_derivations(*module).dim(), o_md.size());
  }

  // Complexes live over the module when present, over the algebra otherwise.
  const OCarrier carrier = module ? OCarrier{&algebra, &*module} : alg_carrier;
  const std::vector<Vec>& carrier_mult = module ? o_mm : o_ma;
  const std::vector<Vec>& carrier_der = module ? o_md : o_da;
  const Carrier primary_carrier =
      module ? Carrier::of_module(*module) : Carrier::of_algebra(algebra);
  const std::size_t n = algebra.dim(), val = carrier.value_dim();

  // --- cochain tower ---
  {
    const OTable table = make_table(carrier, carrier_mult, /*use_bracket=*/false);
    const std::size_t s = table.basis.size();
    MultSpace u = make_mult_space(primary_carrier);
    HochschildComplex complex(u, u);
    const auto primary_rows = complex.cohomology(Matrix::identity(u.dim()), options.q_max);

    std::vector<std::vector<Vec>> bases(options.q_max + 1);
    std::vector<bool> have_space(options.q_max + 1, false);
    std::vector<std::size_t> ranks(options.q_max + 1, 0);
    std::vector<bool> have_rank(options.q_max + 1, false);
    for (std::size_t q = 0; q <= options.q_max; ++q) {
      if (grid_count(s, q) * s <= options.grid_cap || q == 0) {
        bases[q] = grid_multilinear_space(
            s, q, s, n, table.action,
            [&](std::size_t i, std::size_t comp, std::size_t j) { return table.action[i][j][comp]; },
            /*antisymmetric=*/false);
        have_space[q] = true;
      }
      if (have_space[q]) {
        OMat image;
        for (const Vec& b : bases[q]) image.push_back(grid_delta(table, q, b));
        ranks[q] = orank(std::move(image));
        have_rank[q] = true;
      }
      const auto& row = primary_rows[q];
      const std::string suffix = " (q=" + std::to_string(q) + ")";
      if (have_space[q])
        push("cochain space dimension" + suffix, row.space_dim, bases[q].size());
      else
        push_skipped("cochain space dimension" + suffix, row.space_dim);
      if (have_rank[q])
        push("cochain differential rank" + suffix, row.delta_rank, ranks[q]);
      else
        push_skipped("cochain differential rank" + suffix, row.delta_rank);
      const bool have_h = have_space[q] && have_rank[q] && (q == 0 || have_rank[q - 1]);
      if (have_h) {
        const std::size_t prev = q == 0 ? 0 : ranks[q - 1];
        push("cochain cohomology dimension" + suffix, row.cohomology_dim, bases[q].size() - ranks[q] - prev);
      } else {
        push_skipped("cochain cohomology dimension" + suffix, row.cohomology_dim);
      }
    }
  }

  // --- form tower ---
  {
    const OTable table = make_table(carrier, carrier_der, /*use_bracket=*/true);
    const std::size_t s = table.basis.size();
    std::vector<Matrix> value_mults;
    for (std::size_t i = 0; i < n; ++i) value_mults.push_back(carrier.value_mult(i));
    DerSpace d = make_der_space(primary_carrier);
    DeRhamComplex complex(d, d);
    const auto primary_rows = complex.cohomology(Matrix::identity(d.dim()), options.q_max);

    std::vector<std::vector<Vec>> bases(options.q_max + 1);
    std::vector<bool> have_space(options.q_max + 1, false);
    std::vector<std::size_t> ranks(options.q_max + 1, 0);
    std::vector<bool> have_rank(options.q_max + 1, false);
    for (std::size_t q = 0; q <= options.q_max; ++q) {
      if (grid_count(s, q) * val <= options.grid_cap || q == 0) {
        bases[q] = grid_multilinear_space(
            s, q, val, n, table.action,
            [&](std::size_t i, std::size_t comp, std::size_t j) { return value_mults[i].at(comp, j); },
            /*antisymmetric=*/true);
        have_space[q] = true;
      }
      if (have_space[q]) {
        OMat image;
        for (const Vec& b : bases[q]) image.push_back(grid_d(carrier, table, q, b));
        ranks[q] = orank(std::move(image));
        have_rank[q] = true;
      }
      const auto& row = primary_rows[q];
      const std::string suffix = " (q=" + std::to_string(q) + ")";
      if (have_space[q])
        push("form space dimension" + suffix, row.space_dim, bases[q].size());
      else
        push_skipped("form space dimension" + suffix, row.space_dim);
      if (have_rank[q])
        push("form differential rank" + suffix, row.differential_rank, ranks[q]);
      else
        push_skipped("form differential rank" + suffix, row.differential_rank);
      const bool have_h = have_space[q] && have_rank[q] && (q == 0 || have_rank[q - 1]);
      if (have_h) {
        const std::size_t prev = q == 0 ? 0 : ranks[q - 1];
        push("form cohomology dimension" + suffix, row.cohomology_dim, bases[q].size() - ranks[q] - prev);
      } else {
        push_skipped("form cohomology dimension" + suffix, row.cohomology_dim);
      }
    }
  }

  return out;
}

}  // namespace modan
