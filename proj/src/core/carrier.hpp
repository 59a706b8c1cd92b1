#ifndef MODAN_CARRIER_HPP
#define MODAN_CARRIER_HPP

#include <optional>
#include <string>

#include "algebra.hpp"
#include "matrix.hpp"
#include "module.hpp"

namespace modan {

/// A coefficient carrier for cochains and forms: either an algebra or a
/// module over one. Unifies "multiply a value by an algebra element" across
/// the two cases.
class Carrier {
 public:
  static Carrier of_algebra(Algebra a);
  static Carrier of_module(Module m);

  bool is_module() const { return mod_.has_value(); }
  const Algebra& base() const { return mod_ ? mod_->base() : *alg_; }
  const Module& module() const;

  std::string label() const { return mod_ ? mod_->name() : alg_->name(); }
  /// F-dimension of the carrier itself.
  std::size_t value_dim() const { return mod_ ? mod_->dim() : alg_->dim(); }
  /// Coordinate length of operators (pairs for modules).
  std::size_t op_ambient() const;

  /// Multiplication by the i-th base-algebra basis element on carrier values.
  Matrix value_mult(std::size_t i) const;
  /// Same on base-algebra values.
  Matrix base_mult(std::size_t i) const;

  bool same_base(const Carrier& other) const;

 private:
  Carrier() = default;
  std::optional<Algebra> alg_;
  std::optional<Module> mod_;
};

}  // namespace modan

#endif
