#include "checks.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include "carrier.hpp"
#include "derham.hpp"
#include "derivation.hpp"
#include "errors.hpp"
#include "gauge.hpp"
#include "hochschild.hpp"
#include "matrix.hpp"
#include "multiplier.hpp"
#include "opspace.hpp"
#include "pairops.hpp"

namespace modan {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skip:
      return "skip";
  }
  return "unknown";
}

namespace {

Rational small_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 7) - 3;
  const long den = static_cast<long>(rng() % 3) + 1;
  return Rational(num) / Rational(den);
}

Rational nonzero_rational(std::mt19937_64& rng) {
  Rational r = small_rational(rng);
  while (r == 0) r = small_rational(rng);
  return r;
}

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  Vec v(n, Rational(0));
  for (auto& entry : v) entry = small_rational(rng);
  return v;
}

Vec random_in(std::mt19937_64& rng, const Subspace& s) {
  Vec v(s.ambient(), Rational(0));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Rational c = small_rational(rng);
    const Vec& b = s.basis_vector(i);
    for (std::size_t t = 0; t < v.size(); ++t) v[t] += c * b[t];
  }
  return v;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = small_rational(rng);
  return m;
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

Vec add_vec(Vec x, const Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

Vec compose_pair(const Vec& p, const Vec& q, std::size_t m, std::size_t n) {
  const OperatorPair a = split_pair(p, m, n), b = split_pair(q, m, n);
  return join_pair(a.top * b.top, a.bottom * b.bottom);
}

Vec bracket_pair(const Vec& p, const Vec& q, std::size_t m, std::size_t n) {
  const OperatorPair a = split_pair(p, m, n), b = split_pair(q, m, n);
  return join_pair(commutator(a.top, b.top), commutator(a.bottom, b.bottom));
}

Vec algebra_times_pair(const Module& mod, const Vec& f, const Vec& p) {
  const OperatorPair a = split_pair(p, mod.dim(), mod.base().dim());
  return join_pair(mod.action_matrix(f) * a.top, mod.base().mult_matrix(f) * a.bottom);
}

Subspace image_space(const Matrix& m) {
  const Matrix im = image_basis(m);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < im.rows(); ++r) rows.push_back(im.row(r));
  return Subspace::span(rows, m.rows());
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

/// Shared context: the spaces every suite keeps re-using, computed once.
struct Ctx {
  const Algebra& a;
  const std::optional<Module>& mod;
  CheckOptions opt;

  Subspace ma;  // multipliers of the algebra
  Subspace da;  // derivations of the algebra
  Subspace endo = Subspace::zero(0);
  Subspace mm = Subspace::zero(0);
  Subspace md = Subspace::zero(0);

  Ctx(const Algebra& a_in, const std::optional<Module>& mod_in, const CheckOptions& opt_in)
      : a(a_in), mod(mod_in), opt(opt_in), ma(multiplier_algebra(a_in)), da(derivation_algebra(a_in)) {
    if (mod) {
      endo = endomorphism_algebra(*mod);
      mm = module_multipliers(*mod);
      md = module_derivations(*mod);
    }
  }

  std::mt19937_64 rng() const { return std::mt19937_64(opt.seed); }
  std::size_t n() const { return a.dim(); }
  std::size_t m() const { return mod ? mod->dim() : 0; }
  Matrix ma_matrix(std::size_t i) const {
    return Matrix::from_flat(ma.basis_vector(i), a.dim(), a.dim());
  }
  Matrix da_matrix(std::size_t i) const {
    return Matrix::from_flat(da.basis_vector(i), a.dim(), a.dim());
  }
};

struct Runner {
  Ctx& ctx;
  std::vector<CheckResult> results;

  void record(std::string tag, CheckStatus status, std::string detail) {
    results.push_back({std::move(tag), status, std::move(detail)});
  }

  void run(const std::string& tag, const std::function<CheckResult()>& body) {
    try {
      CheckResult r = body();
      r.tag = tag;
      results.push_back(std::move(r));
    } catch (const Error& e) {
      record(tag, CheckStatus::fail, std::string("unexpected error: ") + e.what());
    }
  }
};

CheckResult passed(std::string detail) { return {"", CheckStatus::pass, std::move(detail)}; }
CheckResult failed(std::string detail) { return {"", CheckStatus::fail, std::move(detail)}; }
CheckResult skipped(std::string detail) { return {"", CheckStatus::skip, std::move(detail)}; }

// ---------------------------------------------------------------------------
// linear-algebra substrate
// ---------------------------------------------------------------------------

void add_linalg_checks(Runner& r) {
  Ctx& c = r.ctx;

  r.run("linalg.rref-idempotent", [&] {
    auto rng = c.rng();
    for (int t = 0; t < 3; ++t) {
      const Matrix m = random_matrix(rng, 3, 4);
      const Matrix once = rref(m).reduced;
      if (rref(once).reduced != once) return failed("rref changed an already reduced matrix");
    }
    return passed("3 random 3x4 matrices");
  });

  r.run("linalg.rank-nullity", [&] {
    auto rng = c.rng();
    for (int t = 0; t < 3; ++t) {
      const Matrix m = random_matrix(rng, 3, 5);
      const std::size_t rank = rref(m).rank;
      const std::size_t nullity = kernel_basis(m).rows();
      if (rank + nullity != m.cols())
        return failed("rank " + std::to_string(rank) + " + nullity " + std::to_string(nullity) +
                      " != " + std::to_string(m.cols()));
    }
    return passed("3 random 3x5 matrices");
  });

  r.run("linalg.kernel-annihilates", [&] {
    auto rng = c.rng();
    for (int t = 0; t < 3; ++t) {
      const Matrix m = random_matrix(rng, 4, 4);
      const Matrix kb = kernel_basis(m);
      for (std::size_t i = 0; i < kb.rows(); ++i)
        if (!is_zero_vec(m.apply(kb.row(i)))) return failed("matrix times kernel vector is nonzero");
    }
    return passed("3 random 4x4 matrices");
  });

  r.run("linalg.quotient-dimension", [&] {
    const std::size_t n = c.n();
    const Subspace full_alg = Subspace::full(n);
    if (full_alg.quotient_dim(c.a.annihilator()) + c.a.annihilator().dim() != n)
      return failed("annihilator quotient dimension is inconsistent");
    const Subspace full_ops = Subspace::full(n * n);
    for (const Subspace* s : {&c.ma, &c.da})
      if (full_ops.quotient_dim(*s) + s->dim() != n * n)
        return failed("operator-space quotient dimension is inconsistent");
    return passed("annihilator, multiplier and derivation spaces against their ambients");
  });

  r.run("linalg.exact-arithmetic", [&] {
    auto rng = c.rng();
    for (int t = 0; t < 10; ++t) {
      const Rational x = nonzero_rational(rng), y = nonzero_rational(rng);
      if ((x / y) * (y / x) != 1) return failed("(x/y)*(y/x) != 1");
    }
    return passed("10 random nonzero rationals");
  });
}

// ---------------------------------------------------------------------------
// algebra axioms and multiplication operators
// ---------------------------------------------------------------------------

void add_algebra_checks(Runner& r) {
  Ctx& c = r.ctx;
  const std::size_t n = c.n();

  r.run("algebra.commutative", [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (c.a.product_of_basis(i, j) != c.a.product_of_basis(j, i))
          return failed("products differ at basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return passed("all " + std::to_string(n * n) + " basis pairs");
  });

  r.run("algebra.associative", [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Vec bi = unit_vec(n, i), bj = unit_vec(n, j), bk = unit_vec(n, k);
          if (c.a.multiply(c.a.multiply(bi, bj), bk) != c.a.multiply(bi, c.a.multiply(bj, bk)))
            return failed("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")");
        }
    return passed("all " + std::to_string(n * n * n) + " basis triples");
  });

  r.run("algebra.mult-morphism", [&] {
    auto rng = c.rng();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec f = unit_vec(n, i), g = unit_vec(n, j);
        if (c.a.mult_matrix(c.a.multiply(f, g)) != c.a.mult_matrix(f) * c.a.mult_matrix(g))
          return failed("multiplication operator of a product differs from the composition on basis pair (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
      }
    for (int t = 0; t < 3; ++t) {
      const Vec f = random_vec(rng, n), g = random_vec(rng, n);
      if (c.a.mult_matrix(c.a.multiply(f, g)) != c.a.mult_matrix(f) * c.a.mult_matrix(g))
        return failed("multiplication operator of a product differs from the composition on a random pair");
    }
    return passed("basis pairs and 3 random pairs");
  });

  r.run("algebra.annihilator-is-mult-kernel", [&] {
    Matrix k(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec col = c.a.mult_matrix(unit_vec(n, i)).flat();
      for (std::size_t t = 0; t < n * n; ++t) k.at(t, i) = col[t];
    }
    if (kernel_space(k) != c.a.annihilator())
      return failed("kernel of the assembled multiplication map differs from the annihilator");
    return passed("kernel of f -> mult(f) equals the annihilator");
  });

  r.run("algebra.unit-mult-identity", [&] {
    if (n == 0) return skipped("empty algebra");
    if (c.a.unit()) {
      if (c.a.mult_matrix(*c.a.unit()) != Matrix::identity(n))
        return failed("reported unit does not multiply as the identity");
      if (c.a.annihilator().dim() != 0) return failed("unital algebra has a nonzero annihilator");
      return passed("unit multiplies as the identity and the annihilator is trivial");
    }
    Matrix k(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec col = c.a.mult_matrix(unit_vec(n, i)).flat();
      for (std::size_t t = 0; t < n * n; ++t) k.at(t, i) = col[t];
    }
    if (solve(k, Matrix::identity(n).flat()))
      return failed("an element multiplies as the identity but no unit was reported");
    return passed("no element multiplies as the identity, matching the absent unit");
  });

  r.run("algebra.product-through-tensor", [&] {
    auto rng = c.rng();
    for (int t = 0; t < 4; ++t) {
      const Vec f = random_vec(rng, n), g = random_vec(rng, n);
      if (c.a.multiply(f, g) != c.a.mult_matrix(f).apply(g))
        return failed("structure-tensor product differs from the multiplication operator");
    }
    return passed("4 random pairs");
  });
}

// ---------------------------------------------------------------------------
// module axioms
// ---------------------------------------------------------------------------

void add_module_checks(Runner& r) {
  Ctx& c = r.ctx;

  r.run("module.action-associative", [&] {
    if (!c.mod) return skipped("workspace has no module");
    const std::size_t n = c.n(), m = c.m();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          const Vec f = unit_vec(n, i), g = unit_vec(n, j), w = unit_vec(m, k);
          if (c.mod->act(f, c.mod->act(g, w)) != c.mod->act(c.a.multiply(f, g), w))
            return failed("action compatibility fails at basis triple (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ")");
        }
    auto rng = c.rng();
    for (int t = 0; t < 3; ++t) {
      const Vec f = random_vec(rng, n), g = random_vec(rng, n), w = random_vec(rng, m);
      if (c.mod->act(f, c.mod->act(g, w)) != c.mod->act(c.a.multiply(f, g), w))
        return failed("action compatibility fails on a random triple");
    }
    return passed("basis triples and 3 random triples");
  });

  r.run("module.annihilators-unital", [&] {
    if (!c.mod) return skipped("workspace has no module");
    if (!c.a.unit()) return skipped("base algebra has no unit");
    if (c.mod->action_matrix(*c.a.unit()) != Matrix::identity(c.m()))
      return skipped("unit does not act as the identity on the module");
    if (c.mod->ann_of_algebra_in_module().dim() != 0)
      return failed("module vectors killed by the whole algebra exist despite a unital action");
    if (!c.a.annihilator().contains(c.mod->ann_of_module_in_algebra()))
      return failed("algebra elements acting as zero are not all in the annihilator");
    return passed("module annihilator trivial; zero-acting elements lie in the algebra annihilator");
  });
}

// ---------------------------------------------------------------------------
// multiplier suite
// ---------------------------------------------------------------------------

void add_multiplier_checks(Runner& r) {
  Ctx& c = r.ctx;
  const std::size_t n = c.n();

  r.run("multiplier.closure", [&] {
    if (n > 0 && !c.ma.contains(Matrix::identity(n).flat()))
      return failed("identity operator is not a multiplier");
    for (std::size_t i = 0; i < c.ma.dim(); ++i)
      for (std::size_t j = 0; j < c.ma.dim(); ++j)
        if (!c.ma.contains((c.ma_matrix(i) * c.ma_matrix(j)).flat()))
          return failed("composition of basis multipliers " + std::to_string(i) + "," + std::to_string(j) +
                        " left the space");
    return passed("identity membership and all basis compositions");
  });

  r.run("multiplier.unital-isomorphism", [&] {
    if (!c.a.unit()) return skipped("algebra has no unit");
    if (c.ma.dim() != n)
      return failed("multiplier space dimension " + std::to_string(c.ma.dim()) +
                    " differs from the algebra dimension " + std::to_string(n));
    for (std::size_t i = 0; i < c.ma.dim(); ++i) {
      const Matrix rm = c.ma_matrix(i);
      if (element_to_multiplier(c.a, multiplier_to_element(c.a, rm)) != rm)
        return failed("round trip multiplier -> element -> multiplier moved basis " + std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Vec f = unit_vec(n, i);
      if (multiplier_to_element(c.a, element_to_multiplier(c.a, f)) != f)
        return failed("round trip element -> multiplier -> element moved basis " + std::to_string(i));
    }
    return passed("mutually inverse on both bases; dimensions agree");
  });

  r.run("multiplier.kernel-image-ideals", [&] {
    for (std::size_t i = 0; i < c.ma.dim(); ++i) {
      const Matrix rm = c.ma_matrix(i);
      const Subspace ker = kernel_space(rm);
      const Subspace im = image_space(rm);
      for (std::size_t f = 0; f < n; ++f) {
        const Matrix mult = c.a.mult_matrix(unit_vec(n, f));
        for (std::size_t t = 0; t < ker.dim(); ++t)
          if (!ker.contains(mult.apply(ker.basis_vector(t))))
            return failed("kernel of basis multiplier " + std::to_string(i) + " is not an ideal");
        for (std::size_t t = 0; t < im.dim(); ++t)
          if (!im.contains(mult.apply(im.basis_vector(t))))
            return failed("image of basis multiplier " + std::to_string(i) + " is not an ideal");
      }
    }
    return passed("kernels and images of all basis multipliers are ideals");
  });

  r.run("multiplier.annihilator-stable", [&] {
    const Subspace& ann = c.a.annihilator();
    for (std::size_t i = 0; i < c.ma.dim(); ++i)
      for (std::size_t t = 0; t < ann.dim(); ++t)
        if (!ann.contains(c.ma_matrix(i).apply(ann.basis_vector(t))))
          return failed("basis multiplier " + std::to_string(i) + " moved the annihilator");
    return passed("all basis multipliers preserve the annihilator");
  });

  r.run("multiplier.commutator-into-annihilator", [&] {
    const Subspace& ann = c.a.annihilator();
    for (std::size_t i = 0; i < c.ma.dim(); ++i)
      for (std::size_t j = 0; j < c.ma.dim(); ++j) {
        const Matrix comm = commutator(c.ma_matrix(i), c.ma_matrix(j));
        for (std::size_t t = 0; t < n; ++t)
          if (!ann.contains(comm.apply(unit_vec(n, t))))
            return failed("commutator of basis multipliers " + std::to_string(i) + "," + std::to_string(j) +
                          " maps outside the annihilator");
      }
    return passed("all basis commutators map the algebra into the annihilator");
  });

  r.run("multiplier.module-closure", [&] {
    if (!c.mod) return skipped("workspace has no module");
    const std::size_t m = c.m();
    if (!c.mm.contains(join_pair(Matrix::identity(m), Matrix::identity(n))))
      return failed("identity pair is not a module multiplier");
    for (std::size_t i = 0; i < c.mm.dim(); ++i)
      for (std::size_t j = 0; j < c.mm.dim(); ++j)
        if (!c.mm.contains(compose_pair(c.mm.basis_vector(i), c.mm.basis_vector(j), m, n)))
          return failed("componentwise composition of basis pairs left the space");
    return passed("identity pair membership and all basis compositions");
  });

  r.run("multiplier.module-kernel-image-submodules", [&] {
    if (!c.mod) return skipped("workspace has no module");
    const std::size_t m = c.m();
    const Subspace& ann_m = c.mod->ann_of_algebra_in_module();
    for (std::size_t i = 0; i < c.mm.dim(); ++i) {
      const Matrix delta = split_pair(c.mm.basis_vector(i), m, n).top;
      const Subspace ker = kernel_space(delta);
      const Subspace im = image_space(delta);
      for (std::size_t f = 0; f < n; ++f) {
        const Matrix act = c.mod->action_matrix(unit_vec(n, f));
        for (std::size_t t = 0; t < ker.dim(); ++t)
          if (!ker.contains(act.apply(ker.basis_vector(t))))
            return failed("kernel of a module multiplier is not a submodule");
        for (std::size_t t = 0; t < im.dim(); ++t)
          if (!im.contains(act.apply(im.basis_vector(t))))
            return failed("image of a module multiplier is not a submodule");
      }
      for (std::size_t t = 0; t < ann_m.dim(); ++t)
        if (!ann_m.contains(delta.apply(ann_m.basis_vector(t))))
          return failed("a module multiplier moved the annihilated submodule");
    }
    return passed("kernels/images are submodules; the annihilated submodule is preserved");
  });

  r.run("multiplier.module-commutator-kills-products", [&] {
    if (!c.mod) return skipped("workspace has no module");
    const std::size_t m = c.m();
    for (std::size_t i = 0; i < c.mm.dim(); ++i)
      for (std::size_t j = 0; j < c.mm.dim(); ++j) {
        const Matrix comm = commutator(split_pair(c.mm.basis_vector(i), m, n).top,
                                       split_pair(c.mm.basis_vector(j), m, n).top);
        for (std::size_t f = 0; f < n; ++f)
          for (std::size_t w = 0; w < m; ++w)
            if (!is_zero_vec(comm.apply(c.mod->act(unit_vec(n, f), unit_vec(m, w)))))
              return failed("a commutator of module multipliers is nonzero on an action product");
      }
    return passed("all basis commutators vanish on algebra-times-module products");
  });

  r.run("multiplier.free-lift-membership", [&] {
    if (!c.mod) return skipped("workspace has no module");
    if (!c.mod->is_free()) return skipped("module is not free");
    for (std::size_t i = 0; i < c.ma.dim(); ++i)
      if (!c.mm.contains(lift_free_multiplier(*c.mod, c.ma_matrix(i))))
        return failed("componentwise lift of basis multiplier " + std::to_string(i) + " is not a pair");
    const MultiplierSection section = MultiplierSection::free_lift(*c.mod);
    if (!section.is_a_linear()) return failed("free-lift section is not linear over the algebra");
    if (!section.is_multiplicative()) return failed("free-lift section is not multiplicative");
    return passed("lifted basis multipliers are pairs; the section is linear and multiplicative");
  });

  r.run("multiplier.fiber-points-valid", [&] {
    if (!c.mod) return skipped("workspace has no module");
    const std::size_t m = c.m();
    std::size_t outside = 0;
    for (std::size_t i = 0; i < c.ma.dim(); ++i) {
      const Matrix rm = c.ma_matrix(i);
      const auto fiber = fiber_over_multiplier(*c.mod, rm);
      if (!fiber) {
        ++outside;
        continue;
      }
      if (!c.mm.contains(fiber->base_point)) return failed("fiber base point is not a pair");
      if (split_pair(fiber->base_point, m, n).bottom != rm)
        return failed("fiber base point does not project to its base multiplier");
      for (std::size_t t = 0; t < fiber->directions.dim(); ++t) {
        const Matrix dir = Matrix::from_flat(fiber->directions.basis_vector(t), m, m);
        if (!c.mm.contains(add_vec(fiber->base_point, join_pair(dir, Matrix(n, n)))))
          return failed("fiber base point plus a direction left the pair space");
      }
    }
    return passed("fibers over " + std::to_string(c.ma.dim() - outside) + " of " + std::to_string(c.ma.dim()) +
                  " basis multipliers are affine inside the pair space");
  });

  r.run("multiplier.fiber-directions-equal-hom", [&] {
    if (!c.mod) return skipped("workspace has no module");
    const Subspace hom = hom_into_submodule(*c.mod, c.mod->ann_of_algebra_in_module());
    std::size_t inspected = 0;
    for (std::size_t i = 0; i < c.ma.dim(); ++i) {
      const auto fiber = fiber_over_multiplier(*c.mod, c.ma_matrix(i));
      if (!fiber) continue;
      ++inspected;
      if (fiber->directions != hom)
        return failed("fiber directions differ from the linear maps into the annihilated submodule");
    }
    return passed("direction space matches on " + std::to_string(inspected) + " fibers");
  });

  r.run("multiplier.adjoint-splitting", [&] {
    if (!c.mod) return skipped("workspace has no module");
    if (!c.mod->is_adjoint()) return skipped("module is not the adjoint module");
    const std::size_t m = c.m();
    const Subspace hom = hom_into_submodule(*c.mod, c.mod->ann_of_algebra_in_module());
    auto rng = c.rng();
    std::vector<Vec> samples;
    for (std::size_t i = 0; i < c.mm.dim(); ++i) samples.push_back(c.mm.basis_vector(i));
    for (int t = 0; t < 2; ++t) samples.push_back(random_in(rng, c.mm));
    for (const Vec& p : samples) {
      const AdjointSplit split = adjoint_decompose_multiplier(*c.mod, p);
      if (add_vec(split.diagonal_part, split.fiber_part) != p)
        return failed("splitting parts do not sum back to the pair");
      const OperatorPair diag = split_pair(split.diagonal_part, m, n);
      if (diag.top != diag.bottom) return failed("diagonal part has unequal blocks");
      const OperatorPair fib = split_pair(split.fiber_part, m, n);
      if (!fib.bottom.is_zero()) return failed("fiber part has a nonzero base block");
      if (!c.mm.contains(split.diagonal_part)) return failed("diagonal part is not a pair");
      if (!hom.contains(fib.top.flat()))
        return failed("fiber part is not a linear map into the annihilated submodule");
    }
    return passed(std::to_string(samples.size()) + " pairs split into diagonal plus vertical parts");
  });
}

// ---------------------------------------------------------------------------
// derivation suite
// ---------------------------------------------------------------------------

void add_derivation_checks(Runner& r) {
  Ctx& c = r.ctx;
  const std::size_t n = c.n();

  r.run("derivation.leibniz-verified", [&] {
    for (std::size_t d = 0; d < c.da.dim(); ++d) {
      const Matrix x = c.da_matrix(d);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Vec bi = unit_vec(n, i), bj = unit_vec(n, j);
          const Vec lhs = x.apply(c.a.multiply(bi, bj));
          const Vec rhs = add_vec(c.a.multiply(x.apply(bi), bj), c.a.multiply(bi, x.apply(bj)));
          if (lhs != rhs)
            return failed("basis derivation " + std::to_string(d) + " violates the Leibniz law at (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    return passed("all basis derivations on all basis pairs");
  });

  r.run("derivation.closure-bracket", [&] {
    for (std::size_t i = 0; i < c.da.dim(); ++i)
      for (std::size_t j = 0; j < c.da.dim(); ++j)
        if (!c.da.contains(commutator(c.da_matrix(i), c.da_matrix(j)).flat()))
          return failed("bracket of basis derivations left the space");
    return passed("all basis brackets stay in the space");
  });

  r.run("derivation.jacobi", [&] {
    for (std::size_t i = 0; i < c.da.dim(); ++i)
      for (std::size_t j = 0; j < c.da.dim(); ++j)
        for (std::size_t k = 0; k < c.da.dim(); ++k) {
          const Matrix xi = c.da_matrix(i), xj = c.da_matrix(j), xk = c.da_matrix(k);
          const Matrix total = commutator(commutator(xi, xj), xk) + commutator(commutator(xj, xk), xi) +
                               commutator(commutator(xk, xi), xj);
          if (!total.is_zero()) return failed("Jacobi identity fails on a basis triple");
        }
    return passed("all basis triples");
  });

  r.run("derivation.kernel-subalgebra", [&] {
    for (std::size_t d = 0; d < c.da.dim(); ++d) {
      const Subspace ker = kernel_space(c.da_matrix(d));
      for (std::size_t i = 0; i < ker.dim(); ++i)
        for (std::size_t j = 0; j < ker.dim(); ++j)
          if (!ker.contains(c.a.multiply(ker.basis_vector(i), ker.basis_vector(j))))
            return failed("kernel of basis derivation " + std::to_string(d) + " is not closed under products");
    }
    return passed("kernels of all basis derivations are subalgebras");
  });

  r.run("derivation.image-kernel-module", [&] {
    for (std::size_t d = 0; d < c.da.dim(); ++d) {
      const Matrix x = c.da_matrix(d);
      const Subspace ker = kernel_space(x);
      const Subspace im = image_space(x);
      for (std::size_t i = 0; i < ker.dim(); ++i)
        for (std::size_t j = 0; j < im.dim(); ++j)
          if (!im.contains(c.a.multiply(ker.basis_vector(i), im.basis_vector(j))))
            return failed("image of basis derivation " + std::to_string(d) +
                          " is not stable under its kernel");
    }
    return passed("images are modules over the kernels for all basis derivations");
  });

  r.run("derivation.annihilator-stable", [&] {
    const Subspace& ann = c.a.annihilator();
    for (std::size_t d = 0; d < c.da.dim(); ++d)
      for (std::size_t t = 0; t < ann.dim(); ++t)
        if (!ann.contains(c.da_matrix(d).apply(ann.basis_vector(t))))
          return failed("basis derivation " + std::to_string(d) + " moved the annihilator");
    return passed("all basis derivations preserve the annihilator");
  });

  r.run("derivation.matching-condition", [&] {
    for (std::size_t a = 0; a < c.ma.dim(); ++a)
      for (std::size_t i = 0; i < c.da.dim(); ++i) {
        const Matrix rm = c.ma_matrix(a), xi = c.da_matrix(i);
        if (!c.ma.contains(commutator(xi, rm).flat()))
          return failed("bracket of a derivation with a multiplier is not a multiplier");
        for (std::size_t j = 0; j < c.da.dim(); ++j) {
          const Matrix yj = c.da_matrix(j);
          const Matrix lhs = commutator(xi, rm * yj);
          const Matrix rhs = commutator(xi, rm) * yj + rm * commutator(xi, yj);
          if (lhs != rhs) return failed("matching condition fails on a basis triple");
        }
      }
    return passed("bracket lands in multipliers; matching condition on all basis triples");
  });

  r.run("derivation.free-lift-structure", [&] {
    if (!c.mod) return skipped("workspace has no module");
    if (!c.mod->is_free()) return skipped("module is not free");
    for (std::size_t i = 0; i < c.da.dim(); ++i)
      if (!c.md.contains(lift_free_derivation(*c.mod, c.da_matrix(i))))
        return failed("componentwise lift of basis derivation " + std::to_string(i) + " is not a pair");
    const ConnectionSection section = ConnectionSection::free_lift(*c.mod);
    if (!section.is_a_linear()) return failed("free-lift section is not linear over the algebra");
    if (!section.is_lie_morphism()) return failed("free-lift section does not preserve brackets");
    return passed("lifted basis derivations are pairs; the section is linear and bracket-preserving");
  });

  r.run("derivation.module-bracket-closure", [&] {
    if (!c.mod) return skipped("workspace has no module");
    const std::size_t m = c.m();
    for (std::size_t i = 0; i < c.md.dim(); ++i)
      for (std::size_t j = 0; j < c.md.dim(); ++j)
        if (!c.md.contains(bracket_pair(c.md.basis_vector(i), c.md.basis_vector(j), m, n)))
          return failed("componentwise bracket of basis pairs left the space");
    return passed("all basis brackets stay in the pair space");
  });

  r.run("derivation.pair-composition-rule", [&] {
    if (!c.mod) return skipped("workspace has no module");
    const std::size_t m = c.m();
    for (std::size_t p = 0; p < c.mm.dim(); ++p)
      for (std::size_t x = 0; x < c.md.dim(); ++x) {
        const Vec rp = c.mm.basis_vector(p), xx = c.md.basis_vector(x);
        if (!c.md.contains(compose_pair(rp, xx, m, n)))
          return failed("multiplier-then-derivation composition is not a derivation pair");
        if (!c.mm.contains(bracket_pair(xx, rp, m, n)))
          return failed("bracket of a derivation pair with a multiplier pair is not a multiplier pair");
        for (std::size_t y = 0; y < c.md.dim(); ++y) {
          const Vec yy = c.md.basis_vector(y);
          const Vec lhs = bracket_pair(xx, compose_pair(rp, yy, m, n), m, n);
          const Vec rhs = add_vec(compose_pair(bracket_pair(xx, rp, m, n), yy, m, n),
                                  compose_pair(rp, bracket_pair(xx, yy, m, n), m, n));
          if (lhs != rhs) return failed("componentwise matching condition fails on a basis triple");
        }
      }
    return passed("composition and bracket rules on all basis combinations");
  });

  r.run("derivation.module-kernel-stability", [&] {
    if (!c.mod) return skipped("workspace has no module");
    const std::size_t m = c.m();
    const Subspace& ann_m = c.mod->ann_of_algebra_in_module();
    const Subspace& ann_a = c.mod->ann_of_module_in_algebra();
    for (std::size_t d = 0; d < c.md.dim(); ++d) {
      const OperatorPair pair = split_pair(c.md.basis_vector(d), m, n);
      const Subspace ker_x = kernel_space(pair.bottom);
      const Subspace ker_nabla = kernel_space(pair.top);
      const Subspace im_nabla = image_space(pair.top);
      for (std::size_t i = 0; i < ker_x.dim(); ++i) {
        const Matrix act = c.mod->action_matrix(ker_x.basis_vector(i));
        for (std::size_t j = 0; j < ker_nabla.dim(); ++j)
          if (!ker_nabla.contains(act.apply(ker_nabla.basis_vector(j))))
            return failed("kernel of the module component is not stable under the base kernel");
        for (std::size_t j = 0; j < im_nabla.dim(); ++j)
          if (!im_nabla.contains(act.apply(im_nabla.basis_vector(j))))
            return failed("image of the module component is not stable under the base kernel");
      }
      for (std::size_t t = 0; t < ann_m.dim(); ++t)
        if (!ann_m.contains(pair.top.apply(ann_m.basis_vector(t))))
          return failed("module component moved the annihilated submodule");
      for (std::size_t t = 0; t < ann_a.dim(); ++t)
        if (!ann_a.contains(pair.bottom.apply(ann_a.basis_vector(t))))
          return failed("base component moved the zero-acting elements");
    }
    return passed("kernel/image stability and both annihilator stabilities on all basis pairs");
  });

  r.run("derivation.vertical-kernel-ideal", [&] {
    if (!c.mod) return skipped("workspace has no module");
    const std::size_t m = c.m();
    const auto fiber0 = fiber_over_derivation(*c.mod, Matrix(n, n));
    if (!fiber0) return failed("the zero derivation has no fiber");
    if (fiber0->directions != c.endo)
      return failed("vertical directions differ from the commuting endomorphisms");
    for (std::size_t d = 0; d < c.md.dim(); ++d)
      for (std::size_t e = 0; e < c.endo.dim(); ++e) {
        const Vec vertical = join_pair(Matrix::from_flat(c.endo.basis_vector(e), m, m), Matrix(n, n));
        const Vec br = bracket_pair(c.md.basis_vector(d), vertical, m, n);
        const OperatorPair parts = split_pair(br, m, n);
        if (!parts.bottom.is_zero()) return failed("bracket with a vertical pair has a nonzero base block");
        if (!c.endo.contains(parts.top.flat()))
          return failed("bracket with a vertical pair left the vertical space");
      }
    return passed("vertical space equals the commuting endomorphisms and absorbs brackets");
  });

  r.run("derivation.fiber-affine-structure", [&] {
    if (!c.mod) return skipped("workspace has no module");
    const std::size_t m = c.m();
    std::size_t outside = 0;
    for (std::size_t i = 0; i < c.da.dim(); ++i) {
      const Matrix x = c.da_matrix(i);
      const auto fiber = fiber_over_derivation(*c.mod, x);
      if (!fiber) {
        ++outside;
        continue;
      }
      if (!c.md.contains(fiber->base_point)) return failed("fiber base point is not a pair");
      if (split_pair(fiber->base_point, m, n).bottom != x)
        return failed("fiber base point does not project to its base derivation");
      if (fiber->directions != c.endo)
        return failed("fiber directions differ from the commuting endomorphisms");
      for (std::size_t e = 0; e < c.endo.dim(); ++e) {
        const Vec vertical = join_pair(Matrix::from_flat(c.endo.basis_vector(e), m, m), Matrix(n, n));
        if (!c.md.contains(add_vec(fiber->base_point, vertical)))
          return failed("fiber base point plus an endomorphism left the pair space");
      }
    }
    return passed("fibers over " + std::to_string(c.da.dim() - outside) + " of " + std::to_string(c.da.dim()) +
                  " basis derivations are affine with endomorphism directions");
  });
}

// ---------------------------------------------------------------------------
// gauge suite
// ---------------------------------------------------------------------------

void add_gauge_checks(Runner& r) {
  Ctx& c = r.ctx;

  const auto with_module = [&](const std::function<CheckResult(std::mt19937_64&)>& body) {
    return [&c, body]() -> CheckResult {
      if (!c.mod) return skipped("workspace has no module");
      auto rng = c.rng();
      return body(rng);
    };
  };

  r.run("gauge.multiplier-homomorphism", with_module([&c](std::mt19937_64& rng) {
          const std::size_t m = c.m(), n = c.n();
          for (int t = 0; t < 2; ++t) {
            const ModuleAutomorphism g = random_automorphism(*c.mod, rng);
            const Vec p = random_in(rng, c.mm), q = random_in(rng, c.mm);
            const Vec lhs = gauge_multiplier(*c.mod, g, compose_pair(p, q, m, n));
            const Vec rhs = compose_pair(gauge_multiplier(*c.mod, g, p), gauge_multiplier(*c.mod, g, q), m, n);
            if (lhs != rhs) return failed("transform of a composition differs from composed transforms");
          }
          return passed("2 random automorphisms on random multiplier pairs");
        }));

  r.run("gauge.derivation-lie", with_module([&c](std::mt19937_64& rng) {
          const std::size_t m = c.m(), n = c.n();
          for (int t = 0; t < 2; ++t) {
            const ModuleAutomorphism g = random_automorphism(*c.mod, rng);
            const Vec x = random_in(rng, c.md), y = random_in(rng, c.md);
            const Vec lhs = gauge_derivation(*c.mod, g, bracket_pair(x, y, m, n));
            const Vec rhs = bracket_pair(gauge_derivation(*c.mod, g, x), gauge_derivation(*c.mod, g, y), m, n);
            if (lhs != rhs) return failed("transform of a bracket differs from the bracket of transforms");
          }
          return passed("2 random automorphisms on random derivation pairs");
        }));

  r.run("gauge.action-linear", with_module([&c](std::mt19937_64& rng) {
          for (int t = 0; t < 2; ++t) {
            const ModuleAutomorphism g = random_automorphism(*c.mod, rng);
            const Vec f = random_vec(rng, c.n());
            const Vec x = random_in(rng, c.md);
            const Vec lhs = gauge_derivation(*c.mod, g, algebra_times_pair(*c.mod, f, x));
            const Vec rhs = algebra_times_pair(*c.mod, f, gauge_derivation(*c.mod, g, x));
            if (lhs != rhs) return failed("transform does not commute with the algebra action");
          }
          return passed("2 random automorphisms, random scalars and pairs");
        }));

  r.run("gauge.mixed-identities", with_module([&c](std::mt19937_64& rng) {
          const std::size_t m = c.m(), n = c.n();
          for (int t = 0; t < 2; ++t) {
            const ModuleAutomorphism g = random_automorphism(*c.mod, rng);
            const Vec p = random_in(rng, c.mm), x = random_in(rng, c.md);
            const Vec lhs1 = gauge_derivation(*c.mod, g, compose_pair(p, x, m, n));
            const Vec rhs1 =
                compose_pair(gauge_multiplier(*c.mod, g, p), gauge_derivation(*c.mod, g, x), m, n);
            if (lhs1 != rhs1) return failed("transform of multiplier-times-derivation differs");
            const Vec lhs2 = gauge_multiplier(*c.mod, g, bracket_pair(x, p, m, n));
            const Vec rhs2 =
                bracket_pair(gauge_derivation(*c.mod, g, x), gauge_multiplier(*c.mod, g, p), m, n);
            if (lhs2 != rhs2) return failed("transform of a derivation-multiplier bracket differs");
          }
          return passed("2 random automorphisms on mixed products and brackets");
        }));

  r.run("gauge.group-action", with_module([&c](std::mt19937_64& rng) {
          for (int t = 0; t < 2; ++t) {
            const ModuleAutomorphism g = random_automorphism(*c.mod, rng);
            const ModuleAutomorphism h = random_automorphism(*c.mod, rng);
            const ModuleAutomorphism gh(*c.mod, g.matrix() * h.matrix());
            const ModuleAutomorphism ginv(*c.mod, g.inverse_matrix());
            const Vec p = random_in(rng, c.mm), x = random_in(rng, c.md);
            if (gauge_multiplier(*c.mod, gh, p) != gauge_multiplier(*c.mod, g, gauge_multiplier(*c.mod, h, p)))
              return failed("composite automorphism acts differently from the composition on multipliers");
            if (gauge_derivation(*c.mod, gh, x) != gauge_derivation(*c.mod, g, gauge_derivation(*c.mod, h, x)))
              return failed("composite automorphism acts differently from the composition on derivations");
            if (gauge_multiplier(*c.mod, ginv, gauge_multiplier(*c.mod, g, p)) != p)
              return failed("inverse automorphism does not invert the transform");
          }
          return passed("2 random automorphism pairs; composition and inversion laws");
        }));

  r.run("gauge.base-component-fixed", with_module([&c](std::mt19937_64& rng) {
          const std::size_t m = c.m(), n = c.n();
          for (int t = 0; t < 2; ++t) {
            const ModuleAutomorphism g = random_automorphism(*c.mod, rng);
            const Vec p = random_in(rng, c.mm), x = random_in(rng, c.md);
            if (split_pair(gauge_multiplier(*c.mod, g, p), m, n).bottom != split_pair(p, m, n).bottom)
              return failed("multiplier transform changed the base block");
            if (split_pair(gauge_derivation(*c.mod, g, x), m, n).bottom != split_pair(x, m, n).bottom)
              return failed("derivation transform changed the base block");
          }
          return passed("base blocks unchanged under 2 random automorphisms");
        }));
}

// ---------------------------------------------------------------------------
// cochain-complex suite
// ---------------------------------------------------------------------------

void add_hochschild_checks(Runner& r) {
  Ctx& c = r.ctx;
  const std::size_t q_max = c.opt.q_max;

  // Complexes over the carrier (the module when present, the algebra itself
  // otherwise), with the identity assignment on the multiplier space.
  auto make_complex = [&]() {
    const Carrier carrier = c.mod ? Carrier::of_module(*c.mod) : Carrier::of_algebra(c.a);
    MultSpace u = make_mult_space(carrier);
    return HochschildComplex(u, u);
  };

  r.run("hochschild.identity-section-flat", [&] {
    HochschildComplex complex = make_complex();
    const Matrix id = Matrix::identity(complex.arg_space().dim());
    if (!complex.kappa_is_linear(id)) return failed("identity assignment is not linear over the algebra");
    if (!complex.residual(id).is_zero()) return failed("identity assignment has a nonzero residual");
    return passed("identity assignment is linear with zero residual");
  });

  r.run("hochschild.differential-squares-to-zero", [&] {
    if (q_max == 0) return skipped("q_max = 0");
    HochschildComplex complex = make_complex();
    const Matrix id = Matrix::identity(complex.arg_space().dim());
    const std::size_t top = std::min<std::size_t>(q_max, 2);
    for (std::size_t q = 0; q <= top; ++q)
      for (std::size_t i = 0; i < complex.space_dim(q); ++i) {
        const Cochain twice = complex.delta(id, complex.delta(id, complex.basis_cochain(q, i)));
        if (!twice.is_zero()) return failed("square of the differential is nonzero on a basis cochain");
      }
    return passed("on every basis cochain through degree " + std::to_string(top));
  });

  r.run("hochschild.graded-leibniz", [&] {
    if (q_max < 2) return skipped("needs q_max >= 2");
    HochschildComplex complex = make_complex();
    const Matrix id = Matrix::identity(complex.arg_space().dim());
    auto rng = c.rng();
    const Cochain a1 = complex.from_flat(1, random_in(rng, complex.space(1)));
    const Cochain b1 = complex.from_flat(1, random_in(rng, complex.space(1)));
    // degree-1 left factor: delta(a (x) b) = delta(a) (x) b - a (x) delta(b)
    const Cochain lhs = complex.delta(id, complex.tensor(a1, b1));
    const Cochain rhs =
        cochain_combine(complex.tensor(complex.delta(id, a1), b1), complex.tensor(a1, complex.delta(id, b1)), Rational(-1));
    if (lhs.values != rhs.values) return failed("product rule fails for degree-1 factors");
    if (q_max >= 3) {
      const Cochain b2 = complex.from_flat(2, random_in(rng, complex.space(2)));
      const Cochain lhs2 = complex.delta(id, complex.tensor(a1, b2));
      const Cochain rhs2 = cochain_combine(complex.tensor(complex.delta(id, a1), b2),
                                           complex.tensor(a1, complex.delta(id, b2)), Rational(-1));
      if (lhs2.values != rhs2.values) return failed("product rule fails for degree 1 times degree 2");
    }
    return passed("random tensor factors up to total degree " + std::to_string(std::min<std::size_t>(q_max, 3)));
  });

  r.run("hochschild.basis-invariance", [&] {
    if (q_max == 0) return skipped("q_max = 0");
    const std::size_t n = c.n();
    const std::size_t depth = std::min<std::size_t>(q_max, 3);
    MultSpace u = make_mult_space(Carrier::of_algebra(c.a));
    HochschildComplex original(u, u);
    const auto rows = original.cohomology(Matrix::identity(u.dim()), depth);

    // the same algebra with its basis listed in reverse order
    std::vector<std::string> names(c.a.basis_names().rbegin(), c.a.basis_names().rend());
    std::vector<std::vector<Vec>> structure(n, std::vector<Vec>(n, Vec(n, Rational(0))));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          structure[i][j][k] = c.a.product_of_basis(n - 1 - i, n - 1 - j)[n - 1 - k];
    const Algebra reversed = Algebra::validated(c.a.name() + "_reversed", names, structure);
    MultSpace u2 = make_mult_space(Carrier::of_algebra(reversed));
    HochschildComplex permuted(u2, u2);
    const auto rows2 = permuted.cohomology(Matrix::identity(u2.dim()), depth);

    for (std::size_t q = 0; q < rows.size(); ++q)
      if (rows[q].cohomology_dim != rows2[q].cohomology_dim)
        return failed("cohomology dimension at degree " + std::to_string(q) + " changed under a basis permutation");
    return passed("dimensions through degree " + std::to_string(depth) + " agree after reversing the basis");
  });
}

void add_derham_checks(Runner& r) {
  Ctx& c = r.ctx;
  const std::size_t q_max = c.opt.q_max;

  auto make_complex = [&]() {
    const Carrier carrier = c.mod ? Carrier::of_module(*c.mod) : Carrier::of_algebra(c.a);
    DerSpace d = make_der_space(carrier);
    return DeRhamComplex(d, d);
  };

  r.run("derham.identity-section-flat", [&] {
    DeRhamComplex complex = make_complex();
    const Matrix id = Matrix::identity(complex.arg_space().dim());
    if (!complex.kappa_is_linear(id)) return failed("identity assignment is not linear over the algebra");
    if (!complex.curvature_is_zero(id)) return failed("identity assignment has nonzero curvature");
    return passed("identity assignment is linear and flat");
  });

  const auto with_degrees = [&](const std::function<CheckResult(DeRhamComplex&, const Matrix&, std::mt19937_64&)>& body) {
    return [&c, body, q_max]() -> CheckResult {
      if (q_max == 0) return skipped("q_max = 0");
      const Carrier carrier = c.mod ? Carrier::of_module(*c.mod) : Carrier::of_algebra(c.a);
      DerSpace d = make_der_space(carrier);
      DeRhamComplex complex(d, d);
      const Matrix id = Matrix::identity(d.dim());
      auto rng = c.rng();
      return body(complex, id, rng);
    };
  };

  r.run("derham.interior-anticommute", with_degrees([&c](DeRhamComplex& cx, const Matrix&, std::mt19937_64& rng) {
          if (c.opt.q_max < 2) return skipped("needs q_max >= 2");
          const std::size_t s = cx.arg_space().dim();
          for (int t = 0; t < 2; ++t) {
            const Vec x1 = random_vec(rng, s), x2 = random_vec(rng, s);
            const Form omega = cx.from_flat(2, random_in(rng, cx.space(2)));
            const Form sum = form_combine(cx.interior(x1, cx.interior(x2, omega)),
                                          cx.interior(x2, cx.interior(x1, omega)), Rational(1));
            if (!sum.is_zero()) return failed("contractions along two directions do not anticommute");
          }
          return passed("2 random direction pairs on random 2-forms");
        }));

  r.run("derham.interior-antiderivation", with_degrees([&c](DeRhamComplex& cx, const Matrix&, std::mt19937_64& rng) {
          if (c.opt.q_max < 2) return skipped("needs q_max >= 2");
          const std::size_t s = cx.arg_space().dim();
          for (int t = 0; t < 2; ++t) {
            const Vec xi = random_vec(rng, s);
            const Form phi = cx.from_flat(1, random_in(rng, cx.space(1, Form::Values::base)), Form::Values::base);
            const Form omega = cx.from_flat(1, random_in(rng, cx.space(1)));
            const Form lhs = cx.interior(xi, cx.wedge(phi, omega));
            const Form rhs = form_combine(cx.wedge(cx.interior(xi, phi), omega),
                                          cx.wedge(phi, cx.interior(xi, omega)), Rational(-1));
            if (lhs.values != rhs.values) return failed("contraction violates the product rule");
          }
          return passed("2 random samples of base-valued against carrier-valued 1-forms");
        }));

  r.run("derham.lie-derivation-law", with_degrees([&c](DeRhamComplex& cx, const Matrix& id, std::mt19937_64& rng) {
          if (c.opt.q_max < 2) return skipped("needs q_max >= 2");
          const std::size_t s = cx.arg_space().dim();
          for (int t = 0; t < 2; ++t) {
            const Vec xi = random_vec(rng, s);
            const Form phi = cx.from_flat(1, random_in(rng, cx.space(1, Form::Values::base)), Form::Values::base);
            const Form omega = cx.from_flat(1, random_in(rng, cx.space(1)));
            const Form lhs = cx.lie(id, xi, cx.wedge(phi, omega));
            const Form rhs = form_combine(cx.wedge(cx.lie(id, xi, phi), omega),
                                          cx.wedge(phi, cx.lie(id, xi, omega)), Rational(1));
            if (lhs.values != rhs.values) return failed("Lie derivative violates the product rule");
          }
          return passed("2 random samples of base-valued against carrier-valued 1-forms");
        }));

  r.run("derham.lie-interior-bracket", with_degrees([&c](DeRhamComplex& cx, const Matrix& id, std::mt19937_64& rng) {
          if (c.opt.q_max < 2) return skipped("needs q_max >= 2");
          const std::size_t s = cx.arg_space().dim();
          for (int t = 0; t < 2; ++t) {
            const Vec x1 = random_vec(rng, s), x2 = random_vec(rng, s);
            const Form omega = cx.from_flat(2, random_in(rng, cx.space(2)));
            const Form lhs = form_combine(cx.lie(id, x1, cx.interior(x2, omega)),
                                          cx.interior(x2, cx.lie(id, x1, omega)), Rational(-1));
            const Form rhs = cx.interior(cx.arg_space().bracket(x1, x2), omega);
            if (lhs.values != rhs.values) return failed("commutator with a contraction differs from the bracket contraction");
          }
          return passed("2 random direction pairs on random 2-forms");
        }));

  r.run("derham.lie-lie-bracket", with_degrees([&c](DeRhamComplex& cx, const Matrix& id, std::mt19937_64& rng) {
          if (c.opt.q_max < 2) return skipped("needs q_max >= 2");
          const std::size_t s = cx.arg_space().dim();
          for (int t = 0; t < 2; ++t) {
            const Vec x1 = random_vec(rng, s), x2 = random_vec(rng, s);
            const Form omega = cx.from_flat(2, random_in(rng, cx.space(2)));
            const Form lhs = form_combine(cx.lie(id, x1, cx.lie(id, x2, omega)),
                                          cx.lie(id, x2, cx.lie(id, x1, omega)), Rational(-1));
            const Form rhs = cx.lie(id, cx.arg_space().bracket(x1, x2), omega);
            if (lhs.values != rhs.values) return failed("commutator of Lie derivatives differs from the bracket derivative");
          }
          return passed("2 random direction pairs on random 2-forms");
        }));

  r.run("derham.differential-squares-to-zero", with_degrees([&c](DeRhamComplex& cx, const Matrix& id, std::mt19937_64&) {
          const std::size_t top = std::min<std::size_t>(c.opt.q_max, 2);
          for (std::size_t q = 0; q <= top; ++q)
            for (std::size_t i = 0; i < cx.space_dim(q); ++i) {
              const Form twice = cx.differential(id, cx.differential(id, cx.basis_form(q, i)));
              if (!twice.is_zero()) return failed("square of the differential is nonzero on a basis form");
            }
          return passed("on every basis form through degree " + std::to_string(top));
        }));

  r.run("derham.differential-leibniz", with_degrees([&c](DeRhamComplex& cx, const Matrix& id, std::mt19937_64& rng) {
          if (c.opt.q_max < 2) return skipped("needs q_max >= 2");
          for (int t = 0; t < 2; ++t) {
            const Form phi = cx.from_flat(1, random_in(rng, cx.space(1, Form::Values::base)), Form::Values::base);
            const Form omega = cx.from_flat(1, random_in(rng, cx.space(1)));
            const Form lhs = cx.differential(id, cx.wedge(phi, omega));
            const Form rhs = form_combine(cx.wedge(cx.differential(id, phi), omega),
                                          cx.wedge(phi, cx.differential(id, omega)), Rational(-1));
            if (lhs.values != rhs.values) return failed("differential violates the product rule");
          }
          return passed("2 random samples of base-valued against carrier-valued 1-forms");
        }));

  r.run("derham.cartan-magic", with_degrees([&c](DeRhamComplex& cx, const Matrix& id, std::mt19937_64&) {
          const std::size_t s = cx.arg_space().dim();
          const std::size_t top = std::min<std::size_t>(c.opt.q_max, 2);
          for (std::size_t d = 0; d < s; ++d) {
            const Vec xi = unit_vec(s, d);
            for (std::size_t q = 0; q <= top; ++q)
              for (std::size_t i = 0; i < cx.space_dim(q); ++i) {
                const Form omega = cx.basis_form(q, i);
                const Form lie = cx.lie(id, xi, omega);
                Form rhs = cx.interior(xi, cx.differential(id, omega));
                if (q > 0) rhs = form_combine(rhs, cx.differential(id, cx.interior(xi, omega)), Rational(1));
                if (lie.values != rhs.values)
                  return failed("homotopy formula fails at degree " + std::to_string(q));
              }
          }
          return passed("every basis direction on every basis form through degree " + std::to_string(top));
        }));

  r.run("derham.lie-commutes-with-differential", with_degrees([&c](DeRhamComplex& cx, const Matrix& id,
                                                                   std::mt19937_64& rng) {
          const std::size_t s = cx.arg_space().dim();
          const std::size_t top = std::min<std::size_t>(c.opt.q_max, 2);
          for (std::size_t q = 0; q <= top; ++q)
            for (int t = 0; t < 2; ++t) {
              const Vec xi = random_vec(rng, s);
              const Form omega = cx.from_flat(q, random_in(rng, cx.space(q)));
              const Form lhs = cx.lie(id, xi, cx.differential(id, omega));
              const Form rhs = cx.differential(id, cx.lie(id, xi, omega));
              if (lhs.values != rhs.values)
                return failed("Lie derivative and differential do not commute at degree " + std::to_string(q));
            }
          return passed("2 random samples per degree through " + std::to_string(top));
        }));

  r.run("derham.homotopy-identity", [&] {
    if (!c.mod) return skipped("workspace has no module");
    if (q_max == 0) return skipped("q_max = 0");
    DeRhamComplex complex = make_complex();
    const auto rows = complex.homotopy_check(q_max);
    for (const auto& row : rows) {
      if (!row.identity_holds)
        return failed("contraction homotopy fails at degree " + std::to_string(row.degree));
      if (!row.lie_identity_holds)
        return failed("Lie derivative along the degree operator is not the identity at degree " +
                      std::to_string(row.degree));
    }
    return passed("identity and Lie-derivative forms through degree " + std::to_string(q_max));
  });
}

}  // namespace

std::vector<CheckResult> run_checks(const Algebra& algebra, const std::optional<Module>& module,
                                    const CheckOptions& options) {
  Ctx ctx(algebra, module, options);
  Runner runner{ctx, {}};
  add_linalg_checks(runner);
  add_algebra_checks(runner);
  add_module_checks(runner);
  add_multiplier_checks(runner);
  add_derivation_checks(runner);
  add_gauge_checks(runner);
  add_hochschild_checks(runner);
  add_derham_checks(runner);
  std::sort(runner.results.begin(), runner.results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.tag < b.tag; });
  return runner.results;
}

}  // namespace modan
