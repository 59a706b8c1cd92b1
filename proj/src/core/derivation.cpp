#include "derivation.hpp"

#include <utility>

#include "errors.hpp"
#include "multiplier.hpp"

namespace modan {
namespace {

std::size_t idx(std::size_t offset, std::size_t dim, std::size_t r, std::size_t c) {
  return offset + r * dim + c;
}

// Rows forcing X (n x n at the given offset) to satisfy the Leibniz law
// X(f*g) = Xf*g + f*Xg on basis pairs.
void append_leibniz_rows(std::vector<Vec>& rows, const Algebra& a, std::size_t offset,
                         std::size_t width) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(width, Rational(0));
        const Vec& prod = a.product_of_basis(i, j);
        for (std::size_t p = 0; p < n; ++p) row[idx(offset, n, k, p)] += prod[p];
        for (std::size_t l = 0; l < n; ++l) {
          row[idx(offset, n, l, i)] -= a.product_of_basis(l, j)[k];
          row[idx(offset, n, l, j)] -= a.product_of_basis(i, l)[k];
        }
        rows.push_back(std::move(row));
      }
}

}  // namespace

Subspace derivation_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vec> rows;
  append_leibniz_rows(rows, a, 0, n * n);
  if (rows.empty()) return Subspace::full(n * n);
  return kernel_space(Matrix::from_rows(std::move(rows)));
}

Subspace module_derivations(const Module& mod) {
  const std::size_t m = mod.dim(), n = mod.base().dim();
  const std::size_t width = m * m + n * n;
  std::vector<Vec> rows;
  append_leibniz_rows(rows, mod.base(), m * m, width);
  // linkage nabla(b_i * m_j) = X(b_i) * m_j + b_i * nabla(m_j)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec& aij = mod.action_of_basis(i, j);
      for (std::size_t k = 0; k < m; ++k) {
        Vec row(width, Rational(0));
        for (std::size_t p = 0; p < m; ++p) row[idx(0, m, k, p)] += aij[p];
        for (std::size_t l = 0; l < n; ++l) row[idx(m * m, n, l, i)] -= mod.action_of_basis(l, j)[k];
        for (std::size_t l = 0; l < m; ++l) row[idx(0, m, l, j)] -= mod.action_of_basis(i, l)[k];
        rows.push_back(std::move(row));
      }
    }
  if (rows.empty()) return Subspace::full(width);
  return kernel_space(Matrix::from_rows(std::move(rows)));
}

Vec lift_free_derivation(const Module& mod, const Matrix& x) {
  const std::size_t rank = mod.free_rank();  // throws when not free
  const std::size_t n = mod.base().dim();
  if (x.rows() != n || x.cols() != n) fail(errc::dimension_mismatch, "base operator has the wrong size");
  if (!derivation_algebra(mod.base()).contains(x.flat()))
    fail(errc::not_a_derivation, "componentwise lift needs a derivation of the base algebra");
  Matrix nabla(n * rank, n * rank);
  for (std::size_t b = 0; b < rank; ++b)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) nabla.at(b * n + i, b * n + j) = x.at(i, j);
  return join_pair(nabla, x);
}

std::optional<DerivationFiber> fiber_over_derivation(const Module& mod, const Matrix& x) {
  const std::size_t m = mod.dim(), n = mod.base().dim();
  if (!derivation_algebra(mod.base()).contains(x.flat()))
    fail(errc::not_a_derivation, "fiber requested over an operator violating the Leibniz law");
  const Subspace total = module_derivations(mod);
  const std::size_t s = total.dim();
  Matrix bottom(n * n, s);
  for (std::size_t i = 0; i < s; ++i) {
    const Vec v = total.basis_vector(i);
    for (std::size_t t = 0; t < n * n; ++t) bottom.at(t, i) = v[m * m + t];
  }
  auto coords = solve(bottom, x.flat());
  if (!coords) return std::nullopt;
  DerivationFiber fiber;
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

AdjointDerivationSplit adjoint_decompose_derivation(const Module& mod, const Vec& pair) {
  if (!mod.is_adjoint()) fail(errc::not_adjoint_module, "splitting is defined on the adjoint module");
  const std::size_t n = mod.base().dim();
  OperatorPair p = split_pair(pair, n, n);
  AdjointDerivationSplit split;
  split.diagonal_part = join_pair(p.bottom, p.bottom);
  split.endo_part = join_pair(p.top - p.bottom, Matrix(n, n));
  return split;
}

ConnectionSection::ConnectionSection(const Module& mod, Matrix assignment)
    : mod_(mod),
      base_(derivation_algebra(mod.base())),
      total_(module_derivations(mod)),
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
  a_linear_ = true;
  for (std::size_t i = 0; i < n && a_linear_; ++i) {
    Vec bi(n, Rational(0));
    bi[i] = 1;
    const Matrix mult = mod.base().mult_matrix(bi);
    const Matrix act = mod.action_matrix(bi);
    for (std::size_t j = 0; j < base_.dim() && a_linear_; ++j) {
      const Matrix x = Matrix::from_flat(base_.basis_vector(j), n, n);
      if (!base_.contains((mult * x).flat())) {
        a_linear_ = false;
        break;
      }
      const Vec lhs = apply(mult * x);
      OperatorPair p = split_pair(apply(x), m, n);
      const Vec rhs = join_pair(act * p.top, mult * p.bottom);
      a_linear_ = lhs == rhs;
    }
  }
  lie_ = true;
  for (std::size_t i = 0; i < base_.dim() && lie_; ++i)
    for (std::size_t j = 0; j < base_.dim() && lie_; ++j) {
      const Matrix x1 = Matrix::from_flat(base_.basis_vector(i), n, n);
      const Matrix x2 = Matrix::from_flat(base_.basis_vector(j), n, n);
      lie_ = curvature(x1, x2).is_zero();
    }
}

ConnectionSection ConnectionSection::free_lift(const Module& mod) {
  return from_potential(mod, std::vector<Matrix>(derivation_algebra(mod.base()).dim(),
                                                 Matrix(mod.dim(), mod.dim())));
}

ConnectionSection ConnectionSection::from_potential(const Module& mod,
                                                    const std::vector<Matrix>& potential) {
  const Subspace base = derivation_algebra(mod.base());
  const Subspace total = module_derivations(mod);
  const Subspace endos = endomorphism_algebra(mod);
  if (potential.size() != base.dim())
    fail(errc::dimension_mismatch, "potential needs one value per base-derivation basis element");
  Matrix assignment(total.dim(), base.dim());
  for (std::size_t j = 0; j < base.dim(); ++j) {
    const Matrix x = Matrix::from_flat(base.basis_vector(j), mod.base().dim(), mod.base().dim());
    if (potential[j].rows() != mod.dim() || potential[j].cols() != mod.dim() ||
        !endos.contains(potential[j].flat()))
      fail(errc::potential_not_a_linear, "potential value " + std::to_string(j) +
                                             " is not an A-linear endomorphism of the module");
    OperatorPair lifted = split_pair(lift_free_derivation(mod, x), mod.dim(), mod.base().dim());
    const Vec pair = join_pair(lifted.top + potential[j], lifted.bottom);
    auto coords = total.coordinates(pair);
    if (!coords) fail(errc::internal, "perturbed lift fell outside the pair solution space");
    for (std::size_t i = 0; i < total.dim(); ++i) assignment.at(i, j) = (*coords)[i];
  }
  return ConnectionSection(mod, std::move(assignment));
}

Vec ConnectionSection::apply(const Matrix& x) const {
  auto coords = base_.coordinates(x.flat());
  if (!coords) fail(errc::not_a_derivation, "section applied outside the base solution space");
  return total_.from_coordinates(assignment_.apply(*coords));
}

Matrix ConnectionSection::curvature(const Matrix& x1, const Matrix& x2) const {
  const std::size_t m = mod_.dim(), n = mod_.base().dim();
  const OperatorPair p1 = split_pair(apply(x1), m, n);
  const OperatorPair p2 = split_pair(apply(x2), m, n);
  const OperatorPair pb = split_pair(apply(commutator(x1, x2)), m, n);
  return commutator(p1.top, p2.top) - pb.top;
}

}  // namespace modan
