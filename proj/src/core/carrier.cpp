#include "carrier.hpp"

#include "errors.hpp"

namespace modan {

Carrier Carrier::of_algebra(Algebra a) {
  Carrier c;
  c.alg_ = std::move(a);
  return c;
}

Carrier Carrier::of_module(Module m) {
  Carrier c;
  c.mod_ = std::move(m);
  return c;
}

const Module& Carrier::module() const {
  if (!mod_) fail(errc::bad_argument, "carrier has no module part");
  return *mod_;
}

std::size_t Carrier::op_ambient() const {
  const std::size_t n = base().dim();
  if (!mod_) return n * n;
  const std::size_t m = mod_->dim();
  return m * m + n * n;
}

Matrix Carrier::value_mult(std::size_t i) const {
  const Algebra& a = base();
  Vec f = a.zero_element();
  f[i] = Rational(1);
  if (mod_) return mod_->action_matrix(f);
  return a.mult_matrix(f);
}

Matrix Carrier::base_mult(std::size_t i) const {
  const Algebra& a = base();
  Vec f = a.zero_element();
  f[i] = Rational(1);
  return a.mult_matrix(f);
}

bool Carrier::same_base(const Carrier& other) const {
  const Algebra& a = base();
  const Algebra& b = other.base();
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.product_of_basis(i, j) != b.product_of_basis(i, j)) return false;
  return true;
}

}  // namespace modan
