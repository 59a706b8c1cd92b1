#ifndef MODAN_PAIROPS_HPP
#define MODAN_PAIROPS_HPP

#include <cstddef>

#include "matrix.hpp"
#include "rational.hpp"

namespace modan {

/// Operator pairs (module part, algebra part) are coordinatized as the
/// concatenation (vec top, vec bottom) with row-major flattening; the ambient
/// dimension is m^2 + n^2.
struct OperatorPair {
  Matrix top;     // m x m, acts on the module
  Matrix bottom;  // n x n, acts on the algebra
};

OperatorPair split_pair(const Vec& ambient, std::size_t m, std::size_t n);
Vec join_pair(const Matrix& top, const Matrix& bottom);

}  // namespace modan

#endif
