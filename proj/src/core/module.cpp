#include "module.hpp"

#include <utility>

#include "errors.hpp"

namespace modan {

Module Module::validated(Algebra base, std::string name, std::vector<std::string> basis_names,
                         std::vector<std::vector<Vec>> action) {
  const std::size_t n = base.dim();
  const std::size_t m = basis_names.size();
  if (action.size() != n) fail(errc::parse, "action tensor has wrong outer size");
  for (const auto& row : action) {
    if (row.size() != m) fail(errc::parse, "action tensor has a ragged row");
    for (const auto& entry : row)
      if (entry.size() != m) fail(errc::parse, "action tensor image has wrong length");
  }

  Module mod;
  mod.base_ = std::move(base);
  mod.name_ = std::move(name);
  mod.basis_names_ = std::move(basis_names);
  mod.action_ = std::move(action);

  // compatibility on basis triples: b_i * (b_j * m_k) = (b_i b_j) * m_k
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Vec lhs(m, Rational(0)), rhs(m, Rational(0));
        for (std::size_t p = 0; p < m; ++p) {
          const Rational& al = mod.action_[j][k][p];
          if (al != 0)
            for (std::size_t q = 0; q < m; ++q) lhs[q] += al * mod.action_[i][p][q];
        }
        const Vec prod = mod.base_.product_of_basis(i, j);
        for (std::size_t p = 0; p < n; ++p) {
          if (prod[p] != 0)
            for (std::size_t q = 0; q < m; ++q) rhs[q] += prod[p] * mod.action_[p][k][q];
        }
        if (lhs != rhs)
          fail(errc::not_a_module,
               "action is incompatible with the product at (" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k) + ")");
      }

  mod.compute_annihilators();
  mod.detect_structure();
  return mod;
}

void Module::detect_structure() {
  const std::size_t n = base_.dim(), m = dim();
  // adjoint shape: the action tensor literally repeats the product tensor
  if (n == m) {
    adjoint_ = true;
    for (std::size_t i = 0; i < n && adjoint_; ++i)
      for (std::size_t j = 0; j < n && adjoint_; ++j)
        adjoint_ = action_[i][j] == base_.product_of_basis(i, j);
  }
  // free shape: block-diagonal copies of the adjoint action, in basis order
  if (n == 0) {
    if (m == 0) free_rank_ = 0;
    return;
  }
  if (m % n != 0) return;
  const std::size_t rank = m / n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < rank; ++b)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          const Rational expected = (k >= b * n && k < (b + 1) * n)
                                        ? base_.product_of_basis(i, j)[k - b * n]
                                        : Rational(0);
          if (action_[i][b * n + j][k] != expected) return;
        }
  free_rank_ = rank;
}

Module Module::adjoint(Algebra base) {
  const std::size_t n = base.dim();
  std::vector<std::vector<Vec>> action(n);
  for (std::size_t i = 0; i < n; ++i) {
    action[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) action[i].push_back(base.product_of_basis(i, j));
  }
  return validated(base, base.name() + "_adj", base.basis_names(), std::move(action));
}

Module Module::free(Algebra base, std::size_t rank) {
  const std::size_t n = base.dim();
  std::vector<std::string> names;
  names.reserve(n * rank);
  for (std::size_t b = 0; b < rank; ++b)
    for (std::size_t j = 0; j < n; ++j)
      names.push_back("b" + std::to_string(b + 1) + "*" + base.basis_names()[j]);

  // block-diagonal adjoint action: basis index b*n + j means b_b tensor (algebra basis_j)
  std::vector<std::vector<Vec>> action(n);
  for (std::size_t i = 0; i < n; ++i) {
    action[i].assign(rank * n, Vec(rank * n, Rational(0)));
    for (std::size_t b = 0; b < rank; ++b)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec& prod = base.product_of_basis(i, j);
        for (std::size_t k = 0; k < n; ++k) action[i][b * n + j][b * n + k] = prod[k];
      }
  }
  std::string name = base.name() + "_free" + std::to_string(rank);
  return validated(std::move(base), std::move(name), std::move(names), std::move(action));
}

std::size_t Module::free_rank() const {
  if (!free_rank_) fail(errc::not_free, "module was not constructed as a free module");
  return *free_rank_;
}

Vec Module::act(const Vec& f, const Vec& m) const {
  const std::size_t n = base_.dim(), md = dim();
  if (f.size() != n || m.size() != md) fail(errc::dimension_mismatch, "element length mismatch in module action");
  Vec out(md, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < md; ++j) {
      if (m[j] == 0) continue;
      const Rational coeff = f[i] * m[j];
      for (std::size_t k = 0; k < md; ++k) out[k] += coeff * action_[i][j][k];
    }
  }
  return out;
}

Matrix Module::action_matrix(const Vec& f) const {
  const std::size_t n = base_.dim(), md = dim();
  if (f.size() != n) fail(errc::dimension_mismatch, "element length differs from algebra dimension");
  Matrix mat(md, md);
  for (std::size_t j = 0; j < md; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (f[i] == 0) continue;
      for (std::size_t k = 0; k < md; ++k) mat.at(k, j) += f[i] * action_[i][j][k];
    }
  return mat;
}

void Module::compute_annihilators() {
  const std::size_t n = base_.dim(), m = dim();
  // ann_M A: m with b_i * m = 0 for all i
  Matrix stacked_m(n * m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < m; ++j) stacked_m.at(i * m + k, j) = action_[i][j][k];
  ann_in_module_ = kernel_space(stacked_m);

  // ann_A M: f with f * m_j = 0 for all j
  Matrix stacked_a(m * m, n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < n; ++i) stacked_a.at(j * m + k, i) = action_[i][j][k];
  ann_in_algebra_ = kernel_space(stacked_a);
}

}  // namespace modan
