#include "algebra.hpp"

#include <utility>

#include "errors.hpp"

namespace modan {
namespace {

std::string witness(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

}  // namespace

Algebra Algebra::validated(std::string name, std::vector<std::string> basis_names,
                           std::vector<std::vector<Vec>> structure) {
  const std::size_t n = basis_names.size();
  if (structure.size() != n) fail(errc::parse, "structure tensor has wrong outer size");
  for (const auto& row : structure) {
    if (row.size() != n) fail(errc::parse, "structure tensor has a ragged row");
    for (const auto& entry : row)
      if (entry.size() != n) fail(errc::parse, "structure tensor product has wrong length");
  }

  Algebra a;
  a.name_ = std::move(name);
  a.basis_names_ = std::move(basis_names);
  a.structure_ = std::move(structure);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.structure_[i][j] != a.structure_[j][i])
        fail(errc::not_commutative, "basis products differ at " + witness({i, j}));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // (b_i b_j) b_k vs b_i (b_j b_k), expanded through the tensor
        Vec lhs(n, Rational(0)), rhs(n, Rational(0));
        for (std::size_t p = 0; p < n; ++p) {
          const Rational& cl = a.structure_[i][j][p];
          if (cl != 0)
            for (std::size_t q = 0; q < n; ++q) lhs[q] += cl * a.structure_[p][k][q];
          const Rational& cr = a.structure_[j][k][p];
          if (cr != 0)
            for (std::size_t q = 0; q < n; ++q) rhs[q] += cr * a.structure_[i][p][q];
        }
        if (lhs != rhs) fail(errc::not_associative, "associator is nonzero at " + witness({i, j, k}));
      }

  // ann A: f with f * b_j = 0 for every j; stack the maps f -> f * b_j.
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) stacked.at(j * n + k, i) = a.structure_[i][j][k];
  a.annihilator_ = kernel_space(stacked);

  // unit: e with e * b_j = b_j for every j (commutativity gives the other side).
  Vec rhs(n * n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) rhs[j * n + j] = 1;
  if (auto e = solve(stacked, rhs)) {
    bool really_unit = true;
    for (std::size_t j = 0; j < n && really_unit; ++j) {
      Vec bj(n, Rational(0));
      bj[j] = 1;
      really_unit = a.multiply(*e, bj) == bj;
    }
    if (really_unit) a.unit_ = std::move(*e);
  }
  if (n == 0) a.unit_ = Vec{};  // the empty element is vacuously a unit

  return a;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) fail(errc::dimension_mismatch, "element length differs from algebra dimension");
  Vec out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Rational coeff = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += coeff * structure_[i][j][k];
    }
  }
  return out;
}

Matrix Algebra::mult_matrix(const Vec& f) const {
  const std::size_t n = dim();
  if (f.size() != n) fail(errc::dimension_mismatch, "element length differs from algebra dimension");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (f[i] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) m.at(k, j) += f[i] * structure_[i][j][k];
    }
  return m;
}

Algebra algebra_field() {
  return Algebra::validated("A1", {"e"}, {{{Rational(1)}}});
}

Algebra algebra_dual_numbers() {
  const Rational z(0), o(1);
  // e*e = e, e*x = x, x*x = 0
  return Algebra::validated("A2", {"e", "x"},
                            {{{o, z}, {z, o}}, {{z, o}, {z, z}}});
}

Algebra algebra_nilpotent_pair() {
  const Rational z(0), o(1);
  // u*u = v, u*v = v*u = v*v = 0
  return Algebra::validated("A3", {"u", "v"},
                            {{{z, o}, {z, z}}, {{z, z}, {z, z}}});
}

}  // namespace modan
