#ifndef MODAN_TEST_HELPERS_HPP
#define MODAN_TEST_HELPERS_HPP

#include <random>

#include "core/rational.hpp"
#include "core/subspace.hpp"

namespace modan::testing {

inline Vec random_element(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  Vec v(dim);
  for (auto& e : v) e = Rational(num(rng)) / den(rng);
  return v;
}

/// Random element of a subspace, in ambient coordinates.
inline Vec random_in(std::mt19937_64& rng, const Subspace& s) {
  return s.from_coordinates(random_element(rng, s.dim()));
}

}  // namespace modan::testing

#endif
