#ifndef MODAN_RATIONAL_HPP
#define MODAN_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace modan {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (GMP canonicalizes on every arithmetic operation).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vec = std::vector<Rational>;

/// Parses "p" or "p/q" decimal literals; q must be positive.
Rational parse_rational(const std::string& text);

/// Formats as "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);

bool is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
Vec vec_zero(std::size_t n);

}  // namespace modan

#endif
