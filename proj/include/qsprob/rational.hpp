#ifndef QSPROB_RATIONAL_HPP
#define QSPROB_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qsprob {

// Arbitrary-precision rational, always in canonical form (den > 0,
// gcd(|num|, den) = 1). All probability arithmetic in this library is exact.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p/q", or just "p" when the denominator is 1.
inline std::string to_fraction(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

// Parses "p", "p/q"; throws on malformed input.
inline Rational parse_fraction(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace qsprob

#endif  // QSPROB_RATIONAL_HPP
