#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace segre {

// Exact rational scalar. GMP keeps values canonical: reduced to lowest
// terms with a positive denominator, and every operation is exact.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q".
inline Rational rat_parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  Rational r;
  if (r.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + std::string(s) + "'");
  if (r.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline int sign_of(const Rational& r) { return sgn(r); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace segre
