#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "symten/errors.hpp"

namespace symten {

// Exact arbitrary-precision arithmetic. Rational values are kept in lowest
// terms with positive denominator by the backend; there is no floating point
// anywhere in this library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Integer rational_num(const Rational& q) { return numerator(q); }
inline Integer rational_den(const Rational& q) { return denominator(q); }

// "p/q" with the "/q" part omitted for integers.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p" or "p/q", optionally signed. Throws input_error on junk.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw input_error("zero denominator in rational: " + text);
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw input_error("malformed rational: " + text);
  }
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// (sum parts)! / prod(part!) for the given multiset of part sizes.
template <class Iter>
Integer multinomial(Iter first, Iter last) {
  unsigned total = 0;
  for (Iter it = first; it != last; ++it) total += *it;
  Integer result = factorial(total);
  for (Iter it = first; it != last; ++it) result /= factorial(*it);
  return result;
}

} // namespace symten
