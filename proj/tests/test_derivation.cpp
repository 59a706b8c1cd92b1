#include <doctest.h>

#include <random>

#include "core/algebra.hpp"
#include "core/derivation.hpp"
#include "core/errors.hpp"
#include "core/module.hpp"
#include "core/multiplier.hpp"
#include "helpers.hpp"

using namespace modan;
using modan::testing::random_element;

namespace {

const Rational z(0), o(1);

Matrix basis_matrix(const Subspace& s, std::size_t i, std::size_t n) {
  return Matrix::from_flat(s.basis_vector(i), n, n);
}

}  // namespace

TEST_CASE("derivation spaces of the fixtures") {
  CHECK(derivation_algebra(algebra_field()).dim() == 0);

  Subspace d2 = derivation_algebra(algebra_dual_numbers());
  REQUIRE(d2.dim() == 1);
  // the scaling derivation e -> 0, x -> x
  CHECK(d2.basis_vector(0) == Vec{z, z, z, o});

  Subspace d3 = derivation_algebra(algebra_nilpotent_pair());
  REQUIRE(d3.dim() == 2);
  // u -> u, v -> 2v and u -> v, v -> 0
  CHECK(d3.basis_vector(0) == Vec{o, z, z, Rational(2)});
  CHECK(d3.basis_vector(1) == Vec{z, z, o, z});
}

TEST_CASE("brackets close and satisfy the Lie laws") {
  for (Algebra a : {algebra_dual_numbers(), algebra_nilpotent_pair()}) {
    CAPTURE(a.name());
    Subspace space = derivation_algebra(a);
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < space.dim(); ++i) {
      Matrix xi = basis_matrix(space, i, n);
      CHECK(commutator(xi, xi).is_zero());
      for (std::size_t j = 0; j < space.dim(); ++j) {
        Matrix xj = basis_matrix(space, j, n);
        CHECK(space.contains(commutator(xi, xj).flat()));
        for (std::size_t k = 0; k < space.dim(); ++k) {
          Matrix xk = basis_matrix(space, k, n);
          Matrix jacobi = commutator(xi, commutator(xj, xk)) + commutator(xj, commutator(xk, xi)) +
                          commutator(xk, commutator(xi, xj));
          CHECK(jacobi.is_zero());
        }
      }
    }
  }
}

TEST_CASE("the bracket of the two nilpotent-pair derivations") {
  Subspace d3 = derivation_algebra(algebra_nilpotent_pair());
  Matrix x1 = basis_matrix(d3, 0, 2);
  Matrix x2 = basis_matrix(d3, 1, 2);
  CHECK(commutator(x1, x2) == x2);
}

TEST_CASE("derivation kernels are subalgebras and annihilators are stable") {
  for (Algebra a : {algebra_dual_numbers(), algebra_nilpotent_pair()}) {
    CAPTURE(a.name());
    Subspace space = derivation_algebra(a);
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < space.dim(); ++i) {
      Matrix x = basis_matrix(space, i, n);
      Subspace ker = kernel_space(x);
      Subspace img = Subspace::span(image_basis(x), n);
      for (std::size_t p = 0; p < ker.dim(); ++p)
        for (std::size_t q = 0; q < ker.dim(); ++q)
          CHECK(ker.contains(a.multiply(ker.basis_vector(p), ker.basis_vector(q))));
      // the image is stable under multiplication by kernel elements
      for (std::size_t p = 0; p < ker.dim(); ++p)
        for (std::size_t q = 0; q < img.dim(); ++q)
          CHECK(img.contains(a.multiply(ker.basis_vector(p), img.basis_vector(q))));
      for (std::size_t v = 0; v < a.annihilator().dim(); ++v)
        CHECK(a.annihilator().contains(x.apply(a.annihilator().basis_vector(v))));
    }
  }
}

TEST_CASE("multipliers and derivations match under the mixed bracket") {
  // [X, R o Y] = [X, R] o Y + R o [X, Y], and [X, R] is again a multiplier
  for (Algebra a : {algebra_dual_numbers(), algebra_nilpotent_pair()}) {
    CAPTURE(a.name());
    Subspace ders = derivation_algebra(a);
    Subspace mults = multiplier_algebra(a);
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < ders.dim(); ++i)
      for (std::size_t j = 0; j < mults.dim(); ++j)
        for (std::size_t k = 0; k < ders.dim(); ++k) {
          Matrix x = basis_matrix(ders, i, n);
          Matrix r = basis_matrix(mults, j, n);
          Matrix y = basis_matrix(ders, k, n);
          CHECK(mults.contains(commutator(x, r).flat()));
          CHECK(commutator(x, r * y) == commutator(x, r) * y + r * commutator(x, y));
        }
  }
}

TEST_CASE("module derivation pairs of the fixtures") {
  CHECK(module_derivations(Module::adjoint(algebra_dual_numbers())).dim() == 3);
  CHECK(module_derivations(Module::adjoint(algebra_nilpotent_pair())).dim() == 4);
  CHECK(module_derivations(Module::free(algebra_dual_numbers(), 2)).dim() == 9);
  // over the ground field the bottom component is forced to zero
  Module k3 = Module::free(algebra_field(), 3);
  Subspace pairs = module_derivations(k3);
  CHECK(pairs.dim() == 9);
  for (std::size_t i = 0; i < pairs.dim(); ++i)
    CHECK(split_pair(pairs.basis_vector(i), 3, 1).bottom.is_zero());
}

TEST_CASE("pair brackets close componentwise") {
  for (Module mod : {Module::adjoint(algebra_dual_numbers()), Module::adjoint(algebra_nilpotent_pair())}) {
    CAPTURE(mod.name());
    Subspace pairs = module_derivations(mod);
    const std::size_t m = mod.dim(), n = mod.base().dim();
    for (std::size_t i = 0; i < pairs.dim(); ++i)
      for (std::size_t j = 0; j < pairs.dim(); ++j) {
        OperatorPair a = split_pair(pairs.basis_vector(i), m, n);
        OperatorPair b = split_pair(pairs.basis_vector(j), m, n);
        CHECK(pairs.contains(join_pair(commutator(a.top, b.top), commutator(a.bottom, b.bottom))));
      }
  }
}

TEST_CASE("pairs act on pairs: composition and bracket rules") {
  for (Module mod : {Module::adjoint(algebra_dual_numbers()), Module::adjoint(algebra_nilpotent_pair())}) {
    CAPTURE(mod.name());
    Subspace mults = module_multipliers(mod);
    Subspace ders = module_derivations(mod);
    const std::size_t m = mod.dim(), n = mod.base().dim();
    for (std::size_t i = 0; i < mults.dim(); ++i)
      for (std::size_t j = 0; j < ders.dim(); ++j) {
        OperatorPair r = split_pair(mults.basis_vector(i), m, n);
        OperatorPair x = split_pair(ders.basis_vector(j), m, n);
        // R o X is again a module derivation, [X, R] a module multiplier
        CHECK(ders.contains(join_pair(r.top * x.top, r.bottom * x.bottom)));
        CHECK(mults.contains(join_pair(commutator(x.top, r.top), commutator(x.bottom, r.bottom))));
      }
  }
}

TEST_CASE("kernel and image of a pair derivation behave over the base kernel") {
  Module ad3 = Module::adjoint(algebra_nilpotent_pair());
  Subspace pairs = module_derivations(ad3);
  const std::size_t m = 2, n = 2;
  for (std::size_t i = 0; i < pairs.dim(); ++i) {
    OperatorPair p = split_pair(pairs.basis_vector(i), m, n);
    Subspace ker_x = kernel_space(p.bottom);
    Subspace ker_nabla = kernel_space(p.top);
    Subspace img_nabla = Subspace::span(image_basis(p.top), m);
    for (std::size_t a = 0; a < ker_x.dim(); ++a) {
      for (std::size_t b = 0; b < ker_nabla.dim(); ++b)
        CHECK(ker_nabla.contains(ad3.act(ker_x.basis_vector(a), ker_nabla.basis_vector(b))));
      for (std::size_t b = 0; b < img_nabla.dim(); ++b)
        CHECK(img_nabla.contains(ad3.act(ker_x.basis_vector(a), img_nabla.basis_vector(b))));
    }
    // nabla preserves ann_M A; X preserves ann_A M
    for (std::size_t b = 0; b < ad3.ann_of_algebra_in_module().dim(); ++b)
      CHECK(ad3.ann_of_algebra_in_module().contains(
          p.top.apply(ad3.ann_of_algebra_in_module().basis_vector(b))));
    for (std::size_t b = 0; b < ad3.ann_of_module_in_algebra().dim(); ++b)
      CHECK(ad3.ann_of_module_in_algebra().contains(
          p.bottom.apply(ad3.ann_of_module_in_algebra().basis_vector(b))));
  }
}

TEST_CASE("fibers over base derivations") {
  Module m2 = Module::adjoint(algebra_dual_numbers());
  Matrix euler = Matrix::from_rows({{z, z}, {z, o}});
  auto fib = fiber_over_derivation(m2, euler);
  REQUIRE(fib.has_value());
  CHECK(fib->directions == endomorphism_algebra(m2));
  CHECK(fib->directions.dim() == 2);
  OperatorPair base = split_pair(fib->base_point, 2, 2);
  CHECK(base.bottom == euler);

  Module ad3 = Module::adjoint(algebra_nilpotent_pair());
  Matrix x1 = Matrix::from_rows({{o, z}, {z, Rational(2)}});
  auto fib3 = fiber_over_derivation(ad3, x1);
  REQUIRE(fib3.has_value());
  CHECK(fib3->directions == endomorphism_algebra(ad3));
  CHECK(fib3->directions.dim() == 2);

  // the fiber over zero is exactly the A-linear endomorphism block
  auto fib0 = fiber_over_derivation(ad3, Matrix(2, 2));
  REQUIRE(fib0.has_value());
  CHECK(split_pair(fib0->base_point, 2, 2).top.is_zero());
  CHECK(split_pair(fib0->base_point, 2, 2).bottom.is_zero());
  CHECK(fib0->directions == endomorphism_algebra(ad3));

  CHECK_THROWS_AS(fiber_over_derivation(m2, Matrix::identity(2)), Error);
}

TEST_CASE("fiber directions form an ideal inside the pair Lie algebra") {
  for (Module mod : {Module::adjoint(algebra_dual_numbers()), Module::adjoint(algebra_nilpotent_pair())}) {
    CAPTURE(mod.name());
    Subspace pairs = module_derivations(mod);
    Subspace endos = endomorphism_algebra(mod);
    const std::size_t m = mod.dim(), n = mod.base().dim();
    // (rho, 0) pairs are exactly the kernel of the bottom projection
    std::vector<Vec> injected;
    for (std::size_t i = 0; i < endos.dim(); ++i) {
      Vec pair = join_pair(Matrix::from_flat(endos.basis_vector(i), m, m), Matrix(n, n));
      CHECK(pairs.contains(pair));
      injected.push_back(pair);
    }
    Subspace image = Subspace::span(injected, m * m + n * n);
    for (std::size_t i = 0; i < pairs.dim(); ++i) {
      OperatorPair x = split_pair(pairs.basis_vector(i), m, n);
      if (x.bottom.is_zero()) CHECK(image.contains(pairs.basis_vector(i)));
      for (std::size_t j = 0; j < image.dim(); ++j) {
        OperatorPair rho = split_pair(image.basis_vector(j), m, n);
        CHECK(image.contains(join_pair(commutator(x.top, rho.top), Matrix(n, n))));
      }
    }
  }
}

TEST_CASE("free componentwise derivation lift") {
  Module r2 = Module::free(algebra_dual_numbers(), 2);
  Matrix euler = Matrix::from_rows({{z, z}, {z, o}});
  Vec pair = lift_free_derivation(r2, euler);
  OperatorPair p = split_pair(pair, 4, 2);
  CHECK(p.bottom == euler);
  CHECK(p.top.at(1, 1) == o);
  CHECK(p.top.at(3, 3) == o);
  CHECK(p.top.at(0, 0) == z);
  CHECK(module_derivations(r2).contains(pair));
  CHECK(lift_free_derivation(r2, Matrix(2, 2)) == Vec(20, z));

  // rank-1 lift is the diagonal pair
  Module rank1 = Module::free(algebra_dual_numbers(), 1);
  CHECK(lift_free_derivation(rank1, euler) == join_pair(euler, euler));

  CHECK_THROWS_AS(lift_free_derivation(r2, Matrix::identity(2)), Error);
}

TEST_CASE("adjoint derivation splitting") {
  Module ad3 = Module::adjoint(algebra_nilpotent_pair());
  Subspace pairs = module_derivations(ad3);
  Subspace endos = endomorphism_algebra(ad3);
  for (std::size_t i = 0; i < pairs.dim(); ++i) {
    Vec pair = pairs.basis_vector(i);
    AdjointDerivationSplit split = adjoint_decompose_derivation(ad3, pair);
    CHECK(vec_add(split.diagonal_part, split.endo_part) == pair);
    CHECK(pairs.contains(split.diagonal_part));
    OperatorPair ep = split_pair(split.endo_part, 2, 2);
    CHECK(ep.bottom.is_zero());
    CHECK(endos.contains(ep.top.flat()));
  }
  CHECK(pairs.dim() == derivation_algebra(algebra_nilpotent_pair()).dim() + endos.dim());

  Module m2 = Module::adjoint(algebra_dual_numbers());
  CHECK(module_derivations(m2).dim() ==
        derivation_algebra(algebra_dual_numbers()).dim() + endomorphism_algebra(m2).dim());
}

TEST_CASE("connection sections from potentials") {
  Module m2 = Module::adjoint(algebra_dual_numbers());
  ConnectionSection lift = ConnectionSection::free_lift(m2);
  CHECK(lift.is_a_linear());
  CHECK(lift.is_lie_morphism());
  Matrix euler = Matrix::from_rows({{z, z}, {z, o}});
  CHECK(lift.apply(euler) == join_pair(euler, euler));

  // perturb by multiplication with x
  Matrix ad_x = Matrix::from_rows({{z, z}, {o, z}});
  ConnectionSection bent = ConnectionSection::from_potential(m2, {ad_x});
  CHECK(bent.apply(euler) == join_pair(euler + ad_x, euler));
  CHECK(bent.is_a_linear());
  CHECK(bent.is_lie_morphism());  // one-dimensional base: brackets vanish

  // a potential value outside End_A(M) is rejected
  CHECK_THROWS_AS(ConnectionSection::from_potential(m2, {Matrix::from_rows({{z, o}, {z, z}})}),
                  Error);
  // wrong arity is rejected
  CHECK_THROWS_AS(ConnectionSection::from_potential(m2, {}), Error);
}

TEST_CASE("curvature of perturbed connections over the nilpotent pair") {
  Module ad3 = Module::adjoint(algebra_nilpotent_pair());
  REQUIRE(ad3.free_rank() == 1);
  Subspace d3 = derivation_algebra(algebra_nilpotent_pair());
  Matrix x1 = basis_matrix(d3, 0, 2);
  Matrix x2 = basis_matrix(d3, 1, 2);
  Matrix ad_u = Matrix::from_rows({{z, z}, {o, z}});

  // potential X1 -> ad_u, X2 -> 0: curvature still cancels
  ConnectionSection flat = ConnectionSection::from_potential(ad3, {ad_u, Matrix(2, 2)});
  CHECK(flat.curvature(x1, x2).is_zero());
  CHECK(flat.is_lie_morphism());

  // potential X2 -> identity: curvature picks up -identity on (X1, X2)
  ConnectionSection curved = ConnectionSection::from_potential(ad3, {Matrix(2, 2), Matrix::identity(2)});
  CHECK(curved.curvature(x1, x2) == -Matrix::identity(2));
  CHECK_FALSE(curved.is_lie_morphism());
}
