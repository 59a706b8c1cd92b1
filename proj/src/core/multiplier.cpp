#include "multiplier.hpp"

#include <utility>

#include "errors.hpp"

namespace modan {
namespace {

// Index of entry (r, c) of an op-dim x op-dim block starting at offset.
std::size_t idx(std::size_t offset, std::size_t dim, std::size_t r, std::size_t c) {
  return offset + r * dim + c;
}

// Rows forcing phi (m x m at the given offset) to commute with every action
// matrix of the module's base algebra.
void append_commuting_rows(std::vector<Vec>& rows, const Module& mod, std::size_t offset,
                           std::size_t width) {
  const std::size_t m = mod.dim();
  for (std::size_t i = 0; i < mod.base().dim(); ++i) {
    Vec bi(mod.base().dim(), Rational(0));
    bi[i] = 1;
    const Matrix act = mod.action_matrix(bi);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < m; ++j) {
        Vec row(width, Rational(0));
        for (std::size_t l = 0; l < m; ++l) {
          row[idx(offset, m, k, l)] += act.at(l, j);
          row[idx(offset, m, l, j)] -= act.at(k, l);
        }
        rows.push_back(std::move(row));
      }
  }
}

// Rows forcing R (n x n at the given offset) to satisfy R(f*g) = f*R(g).
void append_multiplier_rows(std::vector<Vec>& rows, const Algebra& a, std::size_t offset,
                            std::size_t width) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(width, Rational(0));
        const Vec& prod = a.product_of_basis(i, j);
        for (std::size_t p = 0; p < n; ++p) row[idx(offset, n, k, p)] += prod[p];
        for (std::size_t l = 0; l < n; ++l) row[idx(offset, n, l, j)] -= a.product_of_basis(i, l)[k];
        rows.push_back(std::move(row));
      }
}

}  // namespace

Subspace multiplier_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vec> rows;
  append_multiplier_rows(rows, a, 0, n * n);
  if (rows.empty()) return Subspace::full(n * n);
  return kernel_space(Matrix::from_rows(std::move(rows)));
}

Vec multiplier_to_element(const Algebra& a, const Matrix& r) {
  if (!a.unit()) fail(errc::no_unit, "the correspondence with elements needs a unit");
  return r.apply(*a.unit());
}

Matrix element_to_multiplier(const Algebra& a, const Vec& f) {
  if (!a.unit()) fail(errc::no_unit, "the correspondence with elements needs a unit");
  return a.mult_matrix(f);
}

Subspace endomorphism_algebra(const Module& mod) {
  const std::size_t m = mod.dim();
  std::vector<Vec> rows;
  append_commuting_rows(rows, mod, 0, m * m);
  if (rows.empty()) return Subspace::full(m * m);
  return kernel_space(Matrix::from_rows(std::move(rows)));
}

Subspace hom_into_submodule(const Module& mod, const Subspace& w) {
  const std::size_t m = mod.dim();
  if (w.ambient() != m) fail(errc::dimension_mismatch, "target subspace lives outside the module");
  std::vector<Vec> rows;
  append_commuting_rows(rows, mod, 0, m * m);
  const Matrix n = w.constraint_matrix();
  for (std::size_t t = 0; t < n.rows(); ++t)
    for (std::size_t j = 0; j < m; ++j) {
      Vec row(m * m, Rational(0));
      for (std::size_t k = 0; k < m; ++k) row[idx(0, m, k, j)] = n.at(t, k);
      rows.push_back(std::move(row));
    }
  if (rows.empty()) return Subspace::full(m * m);
  return kernel_space(Matrix::from_rows(std::move(rows)));
}

Subspace module_multipliers(const Module& mod) {
  const std::size_t m = mod.dim(), n = mod.base().dim();
  const std::size_t width = m * m + n * n;
  std::vector<Vec> rows;
  append_commuting_rows(rows, mod, 0, width);
  append_multiplier_rows(rows, mod.base(), m * m, width);
  // linkage Delta(b_i * m_j) = R(b_i) * m_j
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec& aij = mod.action_of_basis(i, j);
      for (std::size_t k = 0; k < m; ++k) {
        Vec row(width, Rational(0));
        for (std::size_t p = 0; p < m; ++p) row[idx(0, m, k, p)] += aij[p];
        for (std::size_t l = 0; l < n; ++l) row[idx(m * m, n, l, i)] -= mod.action_of_basis(l, j)[k];
        rows.push_back(std::move(row));
      }
    }
  if (rows.empty()) return Subspace::full(width);
  return kernel_space(Matrix::from_rows(std::move(rows)));
}

Vec adjoint_embedding(const Module& mod, const Vec& f) {
  return join_pair(mod.action_matrix(f), mod.base().mult_matrix(f));
}

Vec lift_free_multiplier(const Module& mod, const Matrix& r) {
  const std::size_t rank = mod.free_rank();  // throws when not free
  const std::size_t n = mod.base().dim();
  if (r.rows() != n || r.cols() != n) fail(errc::dimension_mismatch, "base operator has the wrong size");
  if (!multiplier_algebra(mod.base()).contains(r.flat()))
    fail(errc::not_a_multiplier, "componentwise lift needs a multiplier of the base algebra");
  Matrix delta(n * rank, n * rank);
  for (std::size_t b = 0; b < rank; ++b)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) delta.at(b * n + i, b * n + j) = r.at(i, j);
  return join_pair(delta, r);
}

std::optional<MultiplierFiber> fiber_over_multiplier(const Module& mod, const Matrix& r) {
  const std::size_t m = mod.dim(), n = mod.base().dim();
  if (!multiplier_algebra(mod.base()).contains(r.flat()))
    fail(errc::not_a_multiplier, "fiber requested over an operator violating the multiplier law");
  const Subspace total = module_multipliers(mod);
  const std::size_t s = total.dim();
  // bottom blocks of the solution basis, one column per basis element
  Matrix bottom(n * n, s);
  for (std::size_t i = 0; i < s; ++i) {
    const Vec v = total.basis_vector(i);
    for (std::size_t t = 0; t < n * n; ++t) bottom.at(t, i) = v[m * m + t];
  }
  auto coords = solve(bottom, r.flat());
  if (!coords) return std::nullopt;
  MultiplierFiber fiber;
  fiber.base_point = total.from_coordinates(*coords);
  const Matrix ker = kernel_basis(bottom);
  std::vector<Vec> tops;
  for (std::size_t kr = 0; kr < ker.rows(); ++kr) {
    const Vec pair = total.from_coordinates(ker.row(kr));
    tops.emplace_back(pair.begin(), pair.begin() + m * m);
  }
  fiber.directions = Subspace::span(tops, m * m);
  return fiber;
}

AdjointSplit adjoint_decompose_multiplier(const Module& mod, const Vec& pair) {
  if (!mod.is_adjoint()) fail(errc::not_adjoint_module, "splitting is defined on the adjoint module");
  const std::size_t n = mod.base().dim();
  OperatorPair p = split_pair(pair, n, n);
  AdjointSplit split;
  split.diagonal_part = join_pair(p.bottom, p.bottom);
  split.fiber_part = join_pair(p.top - p.bottom, Matrix(n, n));
  return split;
}

MultiplierSection::MultiplierSection(const Module& mod, Matrix assignment)
    : mod_(mod),
      base_(multiplier_algebra(mod.base())),
      total_(module_multipliers(mod)),
      assignment_(std::move(assignment)) {
  const std::size_t m = mod.dim(), n = mod.base().dim();
  if (assignment_.rows() != total_.dim() || assignment_.cols() != base_.dim())
    fail(errc::dimension_mismatch, "section matrix does not match the two solution spaces");
  for (std::size_t j = 0; j < base_.dim(); ++j) {
    Vec unit(base_.dim(), Rational(0));
    unit[j] = 1;
    const Vec pair = total_.from_coordinates(assignment_.apply(unit));
    const Vec bottom(pair.begin() + m * m, pair.end());
    if (bottom != base_.basis_vector(j))
      fail(errc::containment, "assignment is not a right inverse of the projection");
  }
  // A-linearity: section(f*R) = f*section(R) on basis pairs
  a_linear_ = true;
  for (std::size_t i = 0; i < n && a_linear_; ++i) {
    Vec bi(n, Rational(0));
    bi[i] = 1;
    const Matrix mult = mod.base().mult_matrix(bi);
    const Matrix act = mod.action_matrix(bi);
    for (std::size_t j = 0; j < base_.dim() && a_linear_; ++j) {
      const Matrix r = Matrix::from_flat(base_.basis_vector(j), n, n);
      if (!base_.contains((mult * r).flat())) {
        a_linear_ = false;
        break;
      }
      const Vec lhs = apply(mult * r);
      OperatorPair p = split_pair(apply(r), m, n);
      const Vec rhs = join_pair(act * p.top, mult * p.bottom);
      a_linear_ = lhs == rhs;
    }
  }
}

MultiplierSection MultiplierSection::free_lift(const Module& mod) {
  const Subspace base = multiplier_algebra(mod.base());
  const Subspace total = module_multipliers(mod);
  Matrix assignment(total.dim(), base.dim());
  for (std::size_t j = 0; j < base.dim(); ++j) {
    const Vec pair = lift_free_multiplier(mod, Matrix::from_flat(base.basis_vector(j),
                                                                 mod.base().dim(), mod.base().dim()));
    auto coords = total.coordinates(pair);
    if (!coords) fail(errc::internal, "componentwise lift fell outside the pair solution space");
    for (std::size_t i = 0; i < total.dim(); ++i) assignment.at(i, j) = (*coords)[i];
  }
  return MultiplierSection(mod, std::move(assignment));
}

Vec MultiplierSection::apply(const Matrix& r) const {
  auto coords = base_.coordinates(r.flat());
  if (!coords) fail(errc::not_a_multiplier, "section applied outside the base solution space");
  return total_.from_coordinates(assignment_.apply(*coords));
}

Matrix MultiplierSection::residual(const Matrix& r1, const Matrix& r2) const {
  const std::size_t m = mod_.dim(), n = mod_.base().dim();
  const OperatorPair composed = split_pair(apply(r1 * r2), m, n);
  const OperatorPair p1 = split_pair(apply(r1), m, n);
  const OperatorPair p2 = split_pair(apply(r2), m, n);
  return composed.top - p1.top * p2.top;
}

bool MultiplierSection::is_multiplicative() const {
  const std::size_t n = mod_.base().dim();
  for (std::size_t i = 0; i < base_.dim(); ++i)
    for (std::size_t j = 0; j < base_.dim(); ++j) {
      const Matrix r1 = Matrix::from_flat(base_.basis_vector(i), n, n);
      const Matrix r2 = Matrix::from_flat(base_.basis_vector(j), n, n);
      if (!residual(r1, r2).is_zero()) return false;
    }
  return true;
}

}  // namespace modan
