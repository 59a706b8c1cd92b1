// Acceptance gate: one self-contained criterion per line, PASS/FAIL verdicts,
// exit status zero only when every criterion holds. All arithmetic is exact.
#include <cstddef>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/carrier.hpp"
#include "core/derham.hpp"
#include "core/derivation.hpp"
#include "core/errors.hpp"
#include "core/gauge.hpp"
#include "core/hochschild.hpp"
#include "core/io.hpp"
#include "core/matrix.hpp"
#include "core/module.hpp"
#include "core/multiplier.hpp"
#include "core/opspace.hpp"
#include "core/oracle.hpp"
#include "core/pairops.hpp"
#include "core/subspace.hpp"

using namespace modan;

namespace {

/// nullopt means the criterion holds; otherwise the failure reason.
using Verdict = std::optional<std::string>;

WorkspaceData load(const std::string& name) {
  const std::string path = std::string(MODAN_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_workspace(buffer.str());
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

bool vec_zero(const Vec& v) {
  for (const auto& entry : v)
    if (entry != 0) return false;
  return true;
}

Vec add_vec(Vec x, const Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

Rational small_rational(std::mt19937_64& rng) {
  const int num = static_cast<int>(rng() % 7) - 3;
  const int den = 1 + static_cast<int>(rng() % 3);
  return Rational(num) / Rational(den);
}

Vec random_in(std::mt19937_64& rng, const Subspace& s) {
  Vec v(s.ambient(), Rational(0));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Rational c = small_rational(rng);
    const Vec b = s.basis_vector(i);
    for (std::size_t t = 0; t < v.size(); ++t) v[t] += c * b[t];
  }
  return v;
}

Cochain cochain_combine(Cochain x, const Cochain& y, const Rational& c) {
  for (std::size_t t = 0; t < x.values.size(); ++t)
    for (std::size_t k = 0; k < x.values[t].size(); ++k) x.values[t][k] += c * y.values[t][k];
  return x;
}

Form form_combine(Form x, const Form& y, const Rational& c) {
  for (std::size_t t = 0; t < x.values.size(); ++t)
    for (std::size_t k = 0; k < x.values[t].size(); ++k) x.values[t][k] += c * y.values[t][k];
  return x;
}

std::vector<Matrix> basis_matrices(const Subspace& s, std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(Matrix::from_flat(s.basis_vector(i), n, n));
  return out;
}

// ---------------------------------------------------------------------------
// 1. multipliers of a unital algebra are exactly its elements
// ---------------------------------------------------------------------------

Verdict unital_correspondence() {
  for (const std::string name : {"A1.json", "A2.json"}) {
    const Algebra a = load(name).algebra;
    const std::size_t n = a.dim();
    const Subspace s = multiplier_algebra(a);
    if (s.dim() != n) return name + ": multiplier dimension differs from the algebra dimension";
    for (const Matrix& r : basis_matrices(s, n)) {
      const Vec f = multiplier_to_element(a, r);
      if (element_to_multiplier(a, f) != r)
        return name + ": element-to-operator does not invert operator-to-element";
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Vec f = unit_vec(n, j);
      const Matrix r = element_to_multiplier(a, f);
      if (!s.contains(r.flat())) return name + ": multiplication operator is not a multiplier";
      if (multiplier_to_element(a, r) != f)
        return name + ": operator-to-element does not invert element-to-operator";
    }
  }
  const Algebra a3 = load("A3.json").algebra;
  const Subspace s3 = multiplier_algebra(a3);
  try {
    multiplier_to_element(a3, Matrix::from_flat(s3.basis_vector(0), a3.dim(), a3.dim()));
    return std::string("A3.json: unitless algebra did not refuse the correspondence");
  } catch (const Error& e) {
    if (e.code() != errc::no_unit) return std::string("A3.json: wrong refusal category");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 2. multiplier spaces: unital, composition-closed, annihilator-stable,
//    commutators vanish on products, kernels and images are ideals
// ---------------------------------------------------------------------------

Verdict multiplier_structure() {
  for (const std::string name : {"A2.json", "A3.json"}) {
    const Algebra a = load(name).algebra;
    const std::size_t n = a.dim();
    const Subspace s = multiplier_algebra(a);
    if (!s.contains(Matrix::identity(n).flat())) return name + ": identity operator missing";
    const std::vector<Matrix> ops = basis_matrices(s, n);
    for (const Matrix& r : ops)
      for (const Matrix& t : ops)
        if (!s.contains((r * t).flat())) return name + ": composition leaves the space";
    for (const Matrix& r : ops)
      for (std::size_t i = 0; i < a.annihilator().dim(); ++i)
        if (!a.annihilator().contains(r.apply(a.annihilator().basis_vector(i))))
          return name + ": a multiplier moved the annihilator";
    for (const Matrix& r : ops)
      for (const Matrix& t : ops) {
        const Matrix c = commutator(r, t);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (!vec_zero(c.apply(a.product_of_basis(i, j))))
              return name + ": commutator of multipliers is nonzero on a product";
      }
    for (const Matrix& r : ops) {
      const Subspace ker = kernel_space(r);
      const Subspace img = Subspace::span(image_basis(r), n);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < ker.dim(); ++i)
          if (!ker.contains(a.multiply(unit_vec(n, j), ker.basis_vector(i))))
            return name + ": kernel of a multiplier is not an ideal";
        for (std::size_t i = 0; i < img.dim(); ++i)
          if (!img.contains(a.multiply(unit_vec(n, j), img.basis_vector(i))))
            return name + ": image of a multiplier is not an ideal";
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 3. kernel of f -> multiplication-by-f is ann A; kernel of the pair
//    embedding f -> (action, multiplication) is ann_A(M)
// ---------------------------------------------------------------------------

Verdict embedding_kernels() {
  const Algebra a = load("A3.json").algebra;
  const std::size_t n = a.dim();
  Matrix embed(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec col = a.mult_matrix(unit_vec(n, j)).flat();
    for (std::size_t r = 0; r < col.size(); ++r) embed.at(r, j) = col[r];
  }
  if (kernel_space(embed) != a.annihilator())
    return std::string("A3.json: kernel of the multiplication embedding is not the annihilator");
  if (a.annihilator().dim() != 1)
    return std::string("A3.json: annihilator dimension is not 1");

  const WorkspaceData ws = load("A3_AD3.json");
  const Module& mod = *ws.module;
  const std::size_t bn = mod.base().dim();
  const std::size_t ambient = mod.dim() * mod.dim() + bn * bn;
  Matrix pair_embed(ambient, bn);
  for (std::size_t j = 0; j < bn; ++j) {
    const Vec col = adjoint_embedding(mod, unit_vec(bn, j));
    for (std::size_t r = 0; r < col.size(); ++r) pair_embed.at(r, j) = col[r];
  }
  if (kernel_space(pair_embed) != mod.ann_of_module_in_algebra())
    return std::string("A3_AD3.json: kernel of the pair embedding is not ann_A(M)");
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 4. fibers of the bundle projections: affine over Hom(M, ann_M A) on the
//    multiplier side and over End_A(M) on the derivation side
// ---------------------------------------------------------------------------

Verdict fiber_geometry() {
  struct Case {
    const char* file;
    std::size_t mult_fiber_dim;
    std::size_t der_fiber_dim;
  };
  for (const Case c : {Case{"A2_M2.json", 0, 2}, Case{"A3_AD3.json", 1, 2}}) {
    const WorkspaceData ws = load(c.file);
    const Module& mod = *ws.module;
    const std::size_t m = mod.dim(), n = mod.base().dim();
    const std::string name = c.file;

    const Subspace hom = hom_into_submodule(mod, mod.ann_of_algebra_in_module());
    if (hom.dim() != c.mult_fiber_dim) return name + ": unexpected Hom(M, ann_M A) dimension";
    const Subspace endo = endomorphism_algebra(mod);
    if (endo.dim() != c.der_fiber_dim) return name + ": unexpected End_A(M) dimension";
    const Subspace mm = module_multipliers(mod);
    const Subspace md = module_derivations(mod);

    const Subspace base_mult = multiplier_algebra(mod.base());
    for (const Matrix& r : basis_matrices(base_mult, n)) {
      const auto fiber = fiber_over_multiplier(mod, r);
      if (!fiber) return name + ": a base multiplier has an empty fiber";
      if (fiber->directions != hom) return name + ": multiplier fiber directions differ from Hom";
      if (!mm.contains(fiber->base_point)) return name + ": fiber point is not a pair member";
      if (split_pair(fiber->base_point, m, n).bottom != r)
        return name + ": fiber point does not sit over its base multiplier";
      for (std::size_t i = 0; i < hom.dim(); ++i) {
        const Vec shifted = add_vec(
            fiber->base_point,
            join_pair(Matrix::from_flat(hom.basis_vector(i), m, m), Matrix(n, n)));
        if (!mm.contains(shifted)) return name + ": fiber direction leaves the pair space";
      }
    }

    const Subspace base_der = derivation_algebra(mod.base());
    for (const Matrix& x : basis_matrices(base_der, n)) {
      const auto fiber = fiber_over_derivation(mod, x);
      if (!fiber) return name + ": a base derivation has an empty fiber";
      if (fiber->directions != endo) return name + ": derivation fiber directions differ from End";
      if (!md.contains(fiber->base_point)) return name + ": fiber point is not a pair member";
      if (split_pair(fiber->base_point, m, n).bottom != x)
        return name + ": fiber point does not sit over its base derivation";
      for (std::size_t i = 0; i < endo.dim(); ++i) {
        const Vec shifted = add_vec(
            fiber->base_point,
            join_pair(Matrix::from_flat(endo.basis_vector(i), m, m), Matrix(n, n)));
        if (!md.contains(shifted)) return name + ": fiber direction leaves the pair space";
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 5. dimension splittings base + fiber; free lifts and adjoint
//    decompositions are sections of the projection
// ---------------------------------------------------------------------------

Verdict splittings_and_lifts() {
  {
    const Module m2 = *load("A2_M2.json").module;
    if (module_derivations(m2).dim() != 3 ||
        derivation_algebra(m2.base()).dim() + endomorphism_algebra(m2).dim() != 3)
      return std::string("A2_M2.json: derivation pairs do not split as 1 + 2");
    if (module_multipliers(m2).dim() != 2 ||
        multiplier_algebra(m2.base()).dim() +
                hom_into_submodule(m2, m2.ann_of_algebra_in_module()).dim() !=
            2)
      return std::string("A2_M2.json: multiplier pairs do not split as 2 + 0");
  }
  {
    const Module ad3 = *load("A3_AD3.json").module;
    if (module_derivations(ad3).dim() != 4 ||
        derivation_algebra(ad3.base()).dim() + endomorphism_algebra(ad3).dim() != 4)
      return std::string("A3_AD3.json: derivation pairs do not split as 2 + 2");
    if (module_multipliers(ad3).dim() != 3 ||
        multiplier_algebra(ad3.base()).dim() +
                hom_into_submodule(ad3, ad3.ann_of_algebra_in_module()).dim() !=
            3)
      return std::string("A3_AD3.json: multiplier pairs do not split as 2 + 1");
  }

  for (const std::string name : {"A2_M2.json", "A2_M2r2.json"}) {
    const Module mod = *load(name).module;
    const std::size_t m = mod.dim(), n = mod.base().dim();
    const Subspace mm = module_multipliers(mod);
    const Subspace md = module_derivations(mod);
    for (const Matrix& r : basis_matrices(multiplier_algebra(mod.base()), n)) {
      const Vec lifted = lift_free_multiplier(mod, r);
      if (!mm.contains(lifted)) return name + ": free multiplier lift is not a pair member";
      if (split_pair(lifted, m, n).bottom != r) return name + ": free multiplier lift moved the base";
    }
    for (const Matrix& x : basis_matrices(derivation_algebra(mod.base()), n)) {
      const Vec lifted = lift_free_derivation(mod, x);
      if (!md.contains(lifted)) return name + ": free derivation lift is not a pair member";
      if (split_pair(lifted, m, n).bottom != x) return name + ": free derivation lift moved the base";
    }
  }

  const Module ad3 = *load("A3_AD3.json").module;
  const std::size_t m = ad3.dim(), n = ad3.base().dim();
  const Subspace mm = module_multipliers(ad3);
  for (std::size_t i = 0; i < mm.dim(); ++i) {
    const Vec p = mm.basis_vector(i);
    const AdjointSplit split = adjoint_decompose_multiplier(ad3, p);
    if (add_vec(split.diagonal_part, split.fiber_part) != p)
      return std::string("A3_AD3.json: multiplier parts do not sum back");
    const OperatorPair diag = split_pair(split.diagonal_part, m, n);
    if (diag.top != diag.bottom) return std::string("A3_AD3.json: diagonal part is not diagonal");
    if (!split_pair(split.fiber_part, m, n).bottom.is_zero())
      return std::string("A3_AD3.json: fiber part has a nonzero base block");
    if (!mm.contains(split.diagonal_part) || !mm.contains(split.fiber_part))
      return std::string("A3_AD3.json: multiplier parts leave the pair space");
  }
  const Subspace md = module_derivations(ad3);
  for (std::size_t i = 0; i < md.dim(); ++i) {
    const Vec p = md.basis_vector(i);
    const AdjointDerivationSplit split = adjoint_decompose_derivation(ad3, p);
    if (add_vec(split.diagonal_part, split.endo_part) != p)
      return std::string("A3_AD3.json: derivation parts do not sum back");
    const OperatorPair diag = split_pair(split.diagonal_part, m, n);
    if (diag.top != diag.bottom) return std::string("A3_AD3.json: diagonal part is not diagonal");
    if (!split_pair(split.endo_part, m, n).bottom.is_zero())
      return std::string("A3_AD3.json: endomorphism part has a nonzero base block");
    if (!md.contains(split.diagonal_part) || !md.contains(split.endo_part))
      return std::string("A3_AD3.json: derivation parts leave the pair space");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 6. cochain complex on algebra carriers: flat identity assignment,
//    square-zero differential, graded product rule, unital cohomology
// ---------------------------------------------------------------------------

Verdict cochain_complex() {
  for (const std::string name : {"A1.json", "A2.json"}) {
    const Algebra a = load(name).algebra;
    MultSpace u = make_mult_space(Carrier::of_algebra(a));
    HochschildComplex complex(u, u);
    const Matrix id = Matrix::identity(u.dim());
    if (!complex.kappa_is_linear(id)) return name + ": identity assignment is not linear";
    if (!complex.residual(id).is_zero()) return name + ": identity assignment has a residual";

    for (std::size_t q = 0; q <= 2; ++q)
      if (!(complex.delta_matrix(id, q + 1) * complex.delta_matrix(id, q)).is_zero())
        return name + ": differential does not square to zero at degree " + std::to_string(q);

    std::mt19937_64 rng(2024);
    const Cochain a1 = complex.from_flat(1, random_in(rng, complex.space(1)));
    const Cochain b1 = complex.from_flat(1, random_in(rng, complex.space(1)));
    const Cochain b2 = complex.from_flat(2, random_in(rng, complex.space(2)));
    const Cochain lhs1 = complex.delta(id, complex.tensor(a1, b1));
    const Cochain rhs1 = cochain_combine(complex.tensor(complex.delta(id, a1), b1),
                                         complex.tensor(a1, complex.delta(id, b1)), Rational(-1));
    if (lhs1.values != rhs1.values) return name + ": product rule fails for degree-1 factors";
    const Cochain lhs2 = complex.delta(id, complex.tensor(a1, b2));
    const Cochain rhs2 = cochain_combine(complex.tensor(complex.delta(id, a1), b2),
                                         complex.tensor(a1, complex.delta(id, b2)), Rational(-1));
    if (lhs2.values != rhs2.values) return name + ": product rule fails for mixed degrees";

    const auto rows = complex.cohomology(id, 3);
    if (rows[0].cohomology_dim != a.dim())
      return name + ": degree-0 cohomology differs from the algebra dimension";
    for (std::size_t q = 1; q <= 3; ++q)
      if (rows[q].cohomology_dim != 0)
        return name + ": cohomology is nonzero at degree " + std::to_string(q);

    const auto oracle_rows = run_oracle(a, std::nullopt, OracleOptions{});
    for (std::size_t q = 0; q <= 3; ++q) {
      const std::string statement = "cochain cohomology dimension (q=" + std::to_string(q) + ")";
      bool found = false;
      for (const OracleRow& row : oracle_rows)
        if (row.statement == statement) {
          found = true;
          if (row.status != OracleStatus::agree || row.primary != rows[q].cohomology_dim)
            return name + ": oracle disagrees at " + statement;
        }
      if (!found) return name + ": oracle reported no row for " + statement;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 7. form calculus: square-zero differential, homotopy formula, product
//    rules for contraction / Lie derivative / differential, cohomology
// ---------------------------------------------------------------------------

Verdict form_calculus() {
  for (const std::string name : {"A2.json", "A2_M2.json"}) {
    const WorkspaceData ws = load(name);
    const Carrier carrier =
        ws.module ? Carrier::of_module(*ws.module) : Carrier::of_algebra(ws.algebra);
    DerSpace d = make_der_space(carrier);
    DeRhamComplex cx(d, d);
    const Matrix id = Matrix::identity(d.dim());
    const std::size_t s = d.dim();
    if (!cx.kappa_is_linear(id)) return name + ": identity assignment is not linear";
    if (!cx.curvature_is_zero(id)) return name + ": identity assignment has curvature";

    for (std::size_t q = 0; q <= 2; ++q)
      if (!(cx.differential_matrix(id, q + 1) * cx.differential_matrix(id, q)).is_zero())
        return name + ": differential does not square to zero at degree " + std::to_string(q);

    for (std::size_t dir = 0; dir < s; ++dir) {
      const Vec xi = unit_vec(s, dir);
      for (std::size_t q = 0; q <= 3; ++q)
        for (std::size_t i = 0; i < cx.space_dim(q); ++i) {
          const Form omega = cx.basis_form(q, i);
          const Form lie = cx.lie(id, xi, omega);
          Form rhs = cx.interior(xi, cx.differential(id, omega));
          if (q > 0) rhs = form_combine(rhs, cx.differential(id, cx.interior(xi, omega)), Rational(1));
          if (lie.values != rhs.values)
            return name + ": homotopy formula fails at degree " + std::to_string(q);
          const Form lhs_c = cx.lie(id, xi, cx.differential(id, omega));
          const Form rhs_c = cx.differential(id, cx.lie(id, xi, omega));
          if (lhs_c.values != rhs_c.values)
            return name + ": Lie derivative does not commute with the differential";
        }
    }

    for (std::size_t d1 = 0; d1 < s; ++d1)
      for (std::size_t d2 = 0; d2 < s; ++d2)
        for (std::size_t i = 0; i < cx.space_dim(2); ++i) {
          const Form omega = cx.basis_form(2, i);
          const Form sum =
              form_combine(cx.interior(unit_vec(s, d1), cx.interior(unit_vec(s, d2), omega)),
                           cx.interior(unit_vec(s, d2), cx.interior(unit_vec(s, d1), omega)),
                           Rational(1));
          if (!sum.is_zero()) return name + ": contractions do not anticommute";
        }

    for (std::size_t p = 0; p < cx.space_dim(1, Form::Values::base); ++p)
      for (std::size_t w = 0; w < cx.space_dim(1); ++w) {
        const Form phi = cx.basis_form(1, p, Form::Values::base);
        const Form omega = cx.basis_form(1, w);
        for (std::size_t dir = 0; dir < s; ++dir) {
          const Vec xi = unit_vec(s, dir);
          const Form i_lhs = cx.interior(xi, cx.wedge(phi, omega));
          const Form i_rhs = form_combine(cx.wedge(cx.interior(xi, phi), omega),
                                          cx.wedge(phi, cx.interior(xi, omega)), Rational(-1));
          if (i_lhs.values != i_rhs.values) return name + ": contraction violates the product rule";
          const Form l_lhs = cx.lie(id, xi, cx.wedge(phi, omega));
          const Form l_rhs = form_combine(cx.wedge(cx.lie(id, xi, phi), omega),
                                          cx.wedge(phi, cx.lie(id, xi, omega)), Rational(1));
          if (l_lhs.values != l_rhs.values)
            return name + ": Lie derivative violates the product rule";
        }
        const Form d_lhs = cx.differential(id, cx.wedge(phi, omega));
        const Form d_rhs = form_combine(cx.wedge(cx.differential(id, phi), omega),
                                        cx.wedge(phi, cx.differential(id, omega)), Rational(-1));
        if (d_lhs.values != d_rhs.values) return name + ": differential violates the product rule";
      }
  }

  const Algebra a2 = load("A2.json").algebra;
  DerSpace d2 = make_der_space(Carrier::of_algebra(a2));
  DeRhamComplex cx2(d2, d2);
  const auto rows = cx2.cohomology(Matrix::identity(d2.dim()), 2);
  if (rows[0].cohomology_dim != 1 || rows[1].cohomology_dim != 0 || rows[2].cohomology_dim != 0)
    return std::string("A2.json: form cohomology differs from (1, 0, 0)");
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 8. module-carrier form complexes are exact and admit an explicit
//    contracting homotopy
// ---------------------------------------------------------------------------

Verdict module_exactness() {
  for (const std::string name : {"A2_M2.json", "A3_AD3.json"}) {
    const Module mod = *load(name).module;
    DerSpace d = make_der_space(Carrier::of_module(mod));
    DeRhamComplex cx(d, d);
    const auto rows = cx.cohomology(Matrix::identity(d.dim()), 3);
    for (const auto& row : rows)
      if (row.cohomology_dim != 0)
        return name + ": cohomology is nonzero at degree " + std::to_string(row.degree);
    for (const auto& row : cx.homotopy_check(3))
      if (!row.identity_holds || !row.lie_identity_holds)
        return name + ": contracting homotopy fails at degree " + std::to_string(row.degree);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 9. gauge transforms: explicit unipotent shear formula, group action,
//    membership preservation, fixed base block
// ---------------------------------------------------------------------------

Verdict gauge_action() {
  {
    const Module mod = *load("A2_M2.json").module;
    const Algebra& a = mod.base();
    const std::size_t m = mod.dim(), n = a.dim();
    if (!a.unit() || *a.unit() != unit_vec(n, 0))
      return std::string("A2_M2.json: unexpected unit element");
    const Vec x = unit_vec(n, 1);
    const ModuleAutomorphism g(mod, mod.action_matrix(add_vec(unit_vec(n, 0), x)));

    Matrix top(m, m);
    top.at(1, 1) = 1;
    const Vec nabla = join_pair(top, top);
    const Subspace md = module_derivations(mod);
    if (!md.contains(nabla)) return std::string("A2_M2.json: test pair is not a derivation pair");
    const Vec out = gauge_derivation(mod, g, nabla);
    if (!md.contains(out)) return std::string("A2_M2.json: transform left the derivation pairs");
    const Vec expected = join_pair(top - mod.action_matrix(x), top);
    if (out != expected)
      return std::string("A2_M2.json: shear transform differs from the closed formula");
    if (!is_equivalent_via(mod, g, out, nabla))
      return std::string("A2_M2.json: equivalence test rejects its own transform");
  }

  for (const std::string name : {"A2_M2.json", "A3_AD3.json"}) {
    const Module mod = *load(name).module;
    const std::size_t m = mod.dim(), n = mod.base().dim();
    const Subspace mm = module_multipliers(mod);
    const Subspace md = module_derivations(mod);
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 2; ++trial) {
      const ModuleAutomorphism g1 = random_automorphism(mod, rng);
      const ModuleAutomorphism g2 = random_automorphism(mod, rng);
      const ModuleAutomorphism g12(mod, g1.matrix() * g2.matrix());
      const ModuleAutomorphism g1_inv(mod, g1.inverse_matrix());
      for (std::size_t i = 0; i < mm.dim(); ++i) {
        const Vec p = mm.basis_vector(i);
        const Vec t = gauge_multiplier(mod, g1, p);
        if (!mm.contains(t)) return name + ": multiplier transform left the pair space";
        if (split_pair(t, m, n).bottom != split_pair(p, m, n).bottom)
          return name + ": multiplier transform moved the base block";
        if (gauge_multiplier(mod, g1, gauge_multiplier(mod, g2, p)) !=
            gauge_multiplier(mod, g12, p))
          return name + ": transforms do not compose as a group action";
        if (gauge_multiplier(mod, g1_inv, t) != p) return name + ": inverse transform fails";
      }
      for (std::size_t i = 0; i < md.dim(); ++i) {
        const Vec p = md.basis_vector(i);
        const Vec t = gauge_derivation(mod, g1, p);
        if (!md.contains(t)) return name + ": derivation transform left the pair space";
        if (split_pair(t, m, n).bottom != split_pair(p, m, n).bottom)
          return name + ": derivation transform moved the base block";
        if (gauge_derivation(mod, g1, gauge_derivation(mod, g2, p)) !=
            gauge_derivation(mod, g12, p))
          return name + ": transforms do not compose as a group action";
        if (gauge_derivation(mod, g1_inv, t) != p) return name + ": inverse transform fails";
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 10. the independent oracle agrees with the primary solver everywhere
// ---------------------------------------------------------------------------

Verdict oracle_agreement() {
  struct Job {
    const char* file;
    std::size_t q_max;
  };
  for (const Job job : {Job{"A1.json", 3}, Job{"A2.json", 3}, Job{"A3.json", 3},
                        Job{"A2_M2.json", 3}, Job{"A3_AD3.json", 3}, Job{"A2_M2r2.json", 2}}) {
    const WorkspaceData ws = load(job.file);
    OracleOptions options;
    options.q_max = job.q_max;
    const auto rows = run_oracle(ws.algebra, ws.module, options);
    if (rows.empty()) return std::string(job.file) + ": oracle produced no statements";
    for (const OracleRow& row : rows)
      if (row.status != OracleStatus::agree)
        return std::string(job.file) + ": disagreement on '" + row.statement + "'";
  }
  return std::nullopt;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Verdict()> body;
  };
  const std::vector<Criterion> criteria = {
      {"multipliers of a unital algebra correspond to its elements", unital_correspondence},
      {"multiplier spaces are unital, composition-closed, with ideal kernels and images",
       multiplier_structure},
      {"kernels of the multiplication and pair embeddings are the annihilators",
       embedding_kernels},
      {"bundle fibers are affine over the Hom and End solution spaces", fiber_geometry},
      {"pair spaces split as base plus fiber and free lifts are sections", splittings_and_lifts},
      {"cochain complex is flat, square-zero, multiplicative, with unital cohomology",
       cochain_complex},
      {"form calculus satisfies the contraction, Lie, and differential laws", form_calculus},
      {"module-carrier form complexes are exact with a contracting homotopy", module_exactness},
      {"gauge transforms form a group fixing the base and match the shear formula", gauge_action},
      {"independent oracle agrees with the primary solver on every workspace", oracle_agreement},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict verdict;
    try {
      verdict = criteria[i].body();
    } catch (const std::exception& e) {
      verdict = std::string("exception: ") + e.what();
    }
    std::cout << (verdict ? "FAIL" : "PASS") << "  " << (i + 1) << ". " << criteria[i].title;
    if (verdict) std::cout << "  -- " << *verdict;
    std::cout << "\n";
    if (verdict) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria hold" : "ACCEPTANCE FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
