#include "gauge.hpp"

#include <utility>

#include "errors.hpp"
#include "multiplier.hpp"
#include "subspace.hpp"

namespace modan {

ModuleAutomorphism::ModuleAutomorphism(const Module& mod, Matrix g) : g_(std::move(g)) {
  const std::size_t m = mod.dim();
  if (g_.rows() != m || g_.cols() != m) fail(errc::dimension_mismatch, "operator size differs from module dimension");
  if (!endomorphism_algebra(mod).contains(g_.flat()))
    fail(errc::not_a_linear, "automorphism candidate does not commute with the algebra action");
  auto inv = inverse(g_);
  if (!inv) fail(errc::not_invertible, "automorphism candidate is singular");
  g_inv_ = std::move(*inv);
}

namespace {

Vec conjugate_top(const Module& mod, const ModuleAutomorphism& g, const Vec& pair) {
  OperatorPair p = split_pair(pair, mod.dim(), mod.base().dim());
  return join_pair(g.matrix() * p.top * g.inverse_matrix(), p.bottom);
}

}  // namespace

Vec gauge_multiplier(const Module& mod, const ModuleAutomorphism& g, const Vec& pair) {
  return conjugate_top(mod, g, pair);
}

Vec gauge_derivation(const Module& mod, const ModuleAutomorphism& g, const Vec& pair) {
  return conjugate_top(mod, g, pair);
}

bool is_equivalent_via(const Module& mod, const ModuleAutomorphism& g, const Vec& a, const Vec& b) {
  return a == conjugate_top(mod, g, b);
}

ModuleAutomorphism random_automorphism(const Module& mod, std::mt19937_64& rng) {
  const std::size_t m = mod.dim();
  // strictly-lower-triangular matrices as a subspace of flattened operators
  std::vector<Vec> lower;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      Vec v(m * m, Rational(0));
      v[r * m + c] = 1;
      lower.push_back(std::move(v));
    }
  const Subspace candidates = endomorphism_algebra(mod).intersect(Subspace::span(lower, m * m));
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  Vec flat(m * m, Rational(0));
  for (std::size_t i = 0; i < candidates.dim(); ++i) {
    const Rational coeff = Rational(num(rng)) / den(rng);
    flat = vec_add(flat, vec_scale(coeff, candidates.basis_vector(i)));
  }
  return ModuleAutomorphism(mod, Matrix::identity(m) + Matrix::from_flat(flat, m, m));
}

}  // namespace modan
