#ifndef MODAN_ERRORS_HPP
#define MODAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modan {

/// Error categories; the C API maps these onto status codes.
enum class errc {
  parse,
  not_commutative,
  not_associative,
  not_a_module,
  dimension_mismatch,
  containment,
  no_unit,
  no_module,
  not_a_multiplier,
  not_a_derivation,
  not_free,
  not_adjoint_module,
  not_a_linear,
  not_invertible,
  not_composable,
  mixed_base_algebra,
  potential_not_a_linear,
  nonzero_residual,
  nonzero_curvature,
  cap_exceeded,
  bad_argument,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace modan

#endif
