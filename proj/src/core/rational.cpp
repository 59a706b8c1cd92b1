#include "rational.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"

namespace modan {

namespace {

Integer parse_integer(const std::string& text) {
  std::string t = text;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t.erase(t.begin());
  }
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
    fail(errc::parse, "invalid rational literal: \"" + text + "\"");
  Integer v(t);
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den <= 0) fail(errc::parse, "denominator must be positive in \"" + text + "\"");
  // Division canonicalizes (lowest terms, positive denominator).
  return Rational(num) / Rational(den);
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "vector size mismatch in add");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "vector size mismatch in sub");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vec vec_zero(std::size_t n) { return Vec(n, Rational(0)); }

}  // namespace modan
