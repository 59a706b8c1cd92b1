#include "pairops.hpp"

#include "errors.hpp"

namespace modan {

OperatorPair split_pair(const Vec& ambient, std::size_t m, std::size_t n) {
  if (ambient.size() != m * m + n * n)
    fail(errc::dimension_mismatch, "pair coordinates have the wrong length");
  OperatorPair p;
  p.top = Matrix::from_flat(Vec(ambient.begin(), ambient.begin() + m * m), m, m);
  p.bottom = Matrix::from_flat(Vec(ambient.begin() + m * m, ambient.end()), n, n);
  return p;
}

Vec join_pair(const Matrix& top, const Matrix& bottom) {
  Vec out = top.flat();
  const Vec tail = bottom.flat();
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace modan
