#include <doctest.h>

#include <random>

#include "core/algebra.hpp"
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

TEST_CASE("multiplier spaces of the fixtures") {
  CHECK(multiplier_algebra(algebra_field()).dim() == 1);

  Subspace m2 = multiplier_algebra(algebra_dual_numbers());
  CHECK(m2.dim() == 2);
  // canonical basis: identity and the shift e -> x
  CHECK(m2.basis_vector(0) == Vec{o, z, z, o});
  CHECK(m2.basis_vector(1) == Vec{z, z, o, z});

  Subspace m3 = multiplier_algebra(algebra_nilpotent_pair());
  CHECK(m3.dim() == 2);
  CHECK(m3.basis_vector(0) == Vec{o, z, z, o});
  CHECK(m3.basis_vector(1) == Vec{z, z, o, z});
}

TEST_CASE("multiplier spaces compose and contain the identity") {
  for (Algebra a : {algebra_field(), algebra_dual_numbers(), algebra_nilpotent_pair()}) {
    CAPTURE(a.name());
    Subspace space = multiplier_algebra(a);
    CHECK(space.contains(Matrix::identity(a.dim()).flat()));
    for (std::size_t i = 0; i < space.dim(); ++i)
      for (std::size_t j = 0; j < space.dim(); ++j) {
        Matrix prod = basis_matrix(space, i, a.dim()) * basis_matrix(space, j, a.dim());
        CHECK(space.contains(prod.flat()));
      }
  }
}

TEST_CASE("multiplier kernels and images are ideals and the annihilator is stable") {
  for (Algebra a : {algebra_dual_numbers(), algebra_nilpotent_pair()}) {
    CAPTURE(a.name());
    Subspace space = multiplier_algebra(a);
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < space.dim(); ++i) {
      Matrix r = basis_matrix(space, i, n);
      Subspace ker = kernel_space(r);
      Subspace img = Subspace::span(image_basis(r), n);
      for (std::size_t b = 0; b < n; ++b) {
        Vec bb(n, z);
        bb[b] = o;
        for (std::size_t v = 0; v < ker.dim(); ++v)
          CHECK(ker.contains(a.multiply(bb, ker.basis_vector(v))));
        for (std::size_t v = 0; v < img.dim(); ++v)
          CHECK(img.contains(a.multiply(bb, img.basis_vector(v))));
      }
      for (std::size_t v = 0; v < a.annihilator().dim(); ++v)
        CHECK(a.annihilator().contains(r.apply(a.annihilator().basis_vector(v))));
    }
  }
}

TEST_CASE("multiplier commutators land in the annihilator") {
  for (Algebra a : {algebra_dual_numbers(), algebra_nilpotent_pair()}) {
    CAPTURE(a.name());
    Subspace space = multiplier_algebra(a);
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < space.dim(); ++i)
      for (std::size_t j = 0; j < space.dim(); ++j) {
        Matrix comm = commutator(basis_matrix(space, i, n), basis_matrix(space, j, n));
        for (std::size_t b = 0; b < n; ++b) {
          Vec bb(n, z);
          bb[b] = o;
          CHECK(a.annihilator().contains(comm.apply(bb)));
        }
        if (a.annihilator().dim() == 0) CHECK(comm.is_zero());
      }
  }
}

TEST_CASE("unital correspondence with the algebra") {
  Algebra a = algebra_dual_numbers();
  CHECK(multiplier_to_element(a, Matrix::identity(2)) == Vec{o, z});
  Matrix shift = Matrix::from_rows({{z, z}, {o, z}});  // e -> x
  CHECK(multiplier_to_element(a, shift) == Vec{z, o});
  CHECK(element_to_multiplier(a, Vec{z, o}) == shift);

  // multiplicativity and the round trips
  std::mt19937_64 rng(5);
  Subspace space = multiplier_algebra(a);
  for (int trial = 0; trial < 10; ++trial) {
    Vec c1 = random_element(rng, space.dim());
    Vec c2 = random_element(rng, space.dim());
    Matrix r1 = Matrix::from_flat(space.from_coordinates(c1), 2, 2);
    Matrix r2 = Matrix::from_flat(space.from_coordinates(c2), 2, 2);
    CHECK(multiplier_to_element(a, r1 * r2) ==
          a.multiply(multiplier_to_element(a, r1), multiplier_to_element(a, r2)));
    CHECK(element_to_multiplier(a, multiplier_to_element(a, r1)) == r1);
  }
  Vec f = random_element(rng, 2);
  CHECK(multiplier_to_element(a, element_to_multiplier(a, f)) == f);

  CHECK_THROWS_AS(multiplier_to_element(algebra_nilpotent_pair(), Matrix::identity(2)), Error);
}

TEST_CASE("endomorphism spaces of the fixtures") {
  Module m2 = Module::adjoint(algebra_dual_numbers());
  Subspace end2 = endomorphism_algebra(m2);
  CHECK(end2.dim() == 2);
  CHECK(end2.basis_vector(0) == Vec{o, z, z, o});
  CHECK(end2.basis_vector(1) == Vec{z, z, o, z});

  Module ad3 = Module::adjoint(algebra_nilpotent_pair());
  CHECK(endomorphism_algebra(ad3).dim() == 2);
  CHECK(endomorphism_algebra(Module::free(algebra_dual_numbers(), 2)).dim() == 8);
}

TEST_CASE("homomorphisms into the annihilator") {
  Module ad3 = Module::adjoint(algebra_nilpotent_pair());
  Subspace hom = hom_into_submodule(ad3, ad3.ann_of_algebra_in_module());
  CHECK(hom.dim() == 1);
  CHECK(hom.basis_vector(0) == Vec{z, z, o, z});  // u -> v, v -> 0

  Module m2 = Module::adjoint(algebra_dual_numbers());
  CHECK(hom_into_submodule(m2, m2.ann_of_algebra_in_module()).dim() == 0);
  CHECK(hom_into_submodule(m2, Subspace::full(2)) == endomorphism_algebra(m2));
}

TEST_CASE("module multiplier pairs of the fixtures") {
  CHECK(module_multipliers(Module::adjoint(algebra_dual_numbers())).dim() == 2);
  CHECK(module_multipliers(Module::free(algebra_dual_numbers(), 2)).dim() == 2);

  Subspace pairs = module_multipliers(Module::adjoint(algebra_nilpotent_pair()));
  CHECK(pairs.dim() == 3);
  // every pair: Delta(u) = a u + d v, Delta(v) = a v, R(u) = a u + b v, R(v) = a v
  for (std::size_t i = 0; i < pairs.dim(); ++i) {
    OperatorPair p = split_pair(pairs.basis_vector(i), 2, 2);
    CHECK(p.top.at(0, 1) == z);
    CHECK(p.top.at(0, 0) == p.top.at(1, 1));
    CHECK(p.bottom.at(0, 0) == p.top.at(0, 0));
    CHECK(p.bottom.at(1, 1) == p.top.at(0, 0));
  }
}

TEST_CASE("pair spaces compose and contain the identity pair") {
  for (Module mod : {Module::adjoint(algebra_dual_numbers()), Module::adjoint(algebra_nilpotent_pair()),
                     Module::free(algebra_dual_numbers(), 2)}) {
    CAPTURE(mod.name());
    Subspace pairs = module_multipliers(mod);
    const std::size_t m = mod.dim(), n = mod.base().dim();
    CHECK(pairs.contains(join_pair(Matrix::identity(m), Matrix::identity(n))));
    for (std::size_t i = 0; i < pairs.dim(); ++i)
      for (std::size_t j = 0; j < pairs.dim(); ++j) {
        OperatorPair a = split_pair(pairs.basis_vector(i), m, n);
        OperatorPair b = split_pair(pairs.basis_vector(j), m, n);
        CHECK(pairs.contains(join_pair(a.top * b.top, a.bottom * b.bottom)));
      }
  }
}

TEST_CASE("pair commutators kill the acted part of the module") {
  // [Delta', Delta''] applied to f*M vanishes
  for (Module mod : {Module::adjoint(algebra_nilpotent_pair()), Module::adjoint(algebra_dual_numbers())}) {
    CAPTURE(mod.name());
    Subspace pairs = module_multipliers(mod);
    const std::size_t m = mod.dim(), n = mod.base().dim();
    std::mt19937_64 rng(13);
    for (std::size_t i = 0; i < pairs.dim(); ++i)
      for (std::size_t j = 0; j < pairs.dim(); ++j) {
        Matrix comm = commutator(split_pair(pairs.basis_vector(i), m, n).top,
                                 split_pair(pairs.basis_vector(j), m, n).top);
        for (int trial = 0; trial < 4; ++trial) {
          Vec acted = mod.act(random_element(rng, n), random_element(rng, m));
          CHECK(comm.apply(acted) == Vec(m, z));
        }
      }
  }
}

TEST_CASE("adjoint embedding lands in the pair space with the right kernel") {
  for (Module mod : {Module::adjoint(algebra_dual_numbers()), Module::adjoint(algebra_nilpotent_pair())}) {
    CAPTURE(mod.name());
    Subspace pairs = module_multipliers(mod);
    const std::size_t n = mod.base().dim();
    std::vector<Vec> images;
    for (std::size_t i = 0; i < n; ++i) {
      Vec bi(n, z);
      bi[i] = o;
      Vec pair = adjoint_embedding(mod, bi);
      CHECK(pairs.contains(pair));
      images.push_back(pair);
    }
    // kernel of f -> (action f, mult f) equals ann_A(M)
    Matrix assembled(images.empty() ? 0 : images[0].size(), n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < images[c].size(); ++r) assembled.at(r, c) = images[c][r];
    CHECK(kernel_space(assembled) == mod.ann_of_module_in_algebra());
  }
}

TEST_CASE("fibers over base multipliers") {
  Module m2 = Module::adjoint(algebra_dual_numbers());
  auto fib = fiber_over_multiplier(m2, Matrix::identity(2));
  REQUIRE(fib.has_value());
  CHECK(fib->base_point == join_pair(Matrix::identity(2), Matrix::identity(2)));
  CHECK(fib->directions.dim() == 0);
  // independent computation of the direction space
  CHECK(fib->directions == hom_into_submodule(m2, m2.ann_of_algebra_in_module()));

  Module ad3 = Module::adjoint(algebra_nilpotent_pair());
  auto fib3 = fiber_over_multiplier(ad3, Matrix::identity(2));
  REQUIRE(fib3.has_value());
  OperatorPair base = split_pair(fib3->base_point, 2, 2);
  CHECK(base.bottom == Matrix::identity(2));
  CHECK(module_multipliers(ad3).contains(fib3->base_point));
  CHECK(fib3->directions == hom_into_submodule(ad3, ad3.ann_of_algebra_in_module()));
  CHECK(fib3->directions.dim() == 1);
  // every direction added to the base point stays in the solution space
  for (std::size_t i = 0; i < fib3->directions.dim(); ++i) {
    Matrix dir = Matrix::from_flat(fib3->directions.basis_vector(i), 2, 2);
    CHECK(module_multipliers(ad3).contains(join_pair(base.top + dir, base.bottom)));
  }

  CHECK_THROWS_AS(fiber_over_multiplier(m2, Matrix::from_rows({{z, o}, {z, z}})), Error);
}

TEST_CASE("fiber over the empty-algebra module takes everything") {
  Algebra empty = Algebra::validated("A0", {}, {});
  Module mod = Module::validated(empty, "plane", {"p", "q"}, {});
  auto fib = fiber_over_multiplier(mod, Matrix(0, 0));
  REQUIRE(fib.has_value());
  CHECK(fib->directions == Subspace::full(4));
}

TEST_CASE("free componentwise lift") {
  Module r2 = Module::free(algebra_dual_numbers(), 2);
  Matrix shift = Matrix::from_rows({{z, z}, {o, z}});
  Vec pair = lift_free_multiplier(r2, shift);
  OperatorPair p = split_pair(pair, 4, 2);
  CHECK(p.bottom == shift);
  for (std::size_t b = 0; b < 2; ++b) {
    CHECK(p.top.at(b * 2 + 1, b * 2 + 0) == o);
    CHECK(p.top.at(b * 2 + 0, b * 2 + 0) == z);
  }
  CHECK(module_multipliers(r2).contains(pair));

  CHECK(lift_free_multiplier(r2, Matrix::identity(2)) ==
        join_pair(Matrix::identity(4), Matrix::identity(2)));
  CHECK_THROWS_AS(lift_free_multiplier(r2, Matrix::from_rows({{z, o}, {z, z}})), Error);
}

TEST_CASE("adjoint pair splitting") {
  Module ad3 = Module::adjoint(algebra_nilpotent_pair());
  Subspace pairs = module_multipliers(ad3);
  for (std::size_t i = 0; i < pairs.dim(); ++i) {
    Vec pair = pairs.basis_vector(i);
    AdjointSplit split = adjoint_decompose_multiplier(ad3, pair);
    CHECK(vec_add(split.diagonal_part, split.fiber_part) == pair);
    CHECK(pairs.contains(split.diagonal_part));
    OperatorPair fp = split_pair(split.fiber_part, 2, 2);
    CHECK(fp.bottom.is_zero());
    CHECK(hom_into_submodule(ad3, ad3.ann_of_algebra_in_module()).contains(fp.top.flat()));
  }
  // the total space splits 2 + 1
  CHECK(pairs.dim() == multiplier_algebra(algebra_nilpotent_pair()).dim() +
                           hom_into_submodule(ad3, ad3.ann_of_algebra_in_module()).dim());

  CHECK_THROWS_AS(adjoint_decompose_multiplier(Module::free(algebra_dual_numbers(), 2),
                                               Vec(4 * 4 + 2 * 2, z)),
                  Error);
}

TEST_CASE("sections over free modules are multiplicative") {
  for (Module mod : {Module::free(algebra_dual_numbers(), 2), Module::adjoint(algebra_dual_numbers())}) {
    CAPTURE(mod.name());
    MultiplierSection lift = MultiplierSection::free_lift(mod);
    CHECK(lift.is_a_linear());
    CHECK(lift.is_multiplicative());
  }
}

TEST_CASE("a shifted section has a nonzero residual") {
  Module ad3 = Module::adjoint(algebra_nilpotent_pair());
  Subspace base = multiplier_algebra(algebra_nilpotent_pair());
  Subspace total = module_multipliers(ad3);
  REQUIRE(base.dim() == 2);

  // plain section: R -> (R, R); shifted: add the fiber direction u -> v on the
  // identity basis element only
  Matrix rho = Matrix::from_rows({{z, z}, {o, z}});
  Matrix plain(total.dim(), base.dim());
  Matrix shifted(total.dim(), base.dim());
  for (std::size_t j = 0; j < base.dim(); ++j) {
    Matrix r = Matrix::from_flat(base.basis_vector(j), 2, 2);
    auto coords = total.coordinates(join_pair(r, r));
    REQUIRE(coords.has_value());
    for (std::size_t i = 0; i < total.dim(); ++i) plain.at(i, j) = (*coords)[i];
    Matrix top = j == 0 ? r + rho : r;
    auto shifted_coords = total.coordinates(join_pair(top, r));
    REQUIRE(shifted_coords.has_value());
    for (std::size_t i = 0; i < total.dim(); ++i) shifted.at(i, j) = (*shifted_coords)[i];
  }

  MultiplierSection diagonal(ad3, plain);
  CHECK(diagonal.is_multiplicative());

  MultiplierSection bent(ad3, shifted);
  CHECK_FALSE(bent.is_multiplicative());
  Matrix id = Matrix::identity(2);
  // residual on (identity, identity): Delta_{id} = id + rho, so the defect is -rho
  CHECK(bent.residual(id, id) == -rho);
  // the residual pair projects to zero and is A-linear
  CHECK(module_multipliers(ad3).contains(join_pair(bent.residual(id, id), Matrix(2, 2))));
}
