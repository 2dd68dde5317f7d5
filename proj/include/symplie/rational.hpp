#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace symplie {

// Exact arbitrary-precision rational. Every value is kept in lowest terms;
// there is no floating point anywhere in the engine.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string rat_str(const Rational& r) { return r.get_str(); }

// Parses "p", "-p" or "p/q". Throws on malformed input.
inline Rational rat_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: '" + s + "'");
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("rational with zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace symplie
