#pragma once
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cliffop {

// Exact arbitrary-precision rational, backed by GMP. Values are always
// kept canonical (coprime numerator/denominator, positive denominator).
using Rational = mpq_class;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "a" or "a/b" with optional leading '-'. Whitespace is not accepted.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  for (char ch : text) {
    if (ch != '-' && ch != '/' && !(ch >= '0' && ch <= '9'))
      throw Error("bad rational literal: '" + text + "'");
  }
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error("bad rational literal: '" + text + "'");
  if (q.get_den() == 0) throw Error("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline double to_double(const Rational& q) { return q.get_d(); }

// (2m-1)!! / 2^m, the normalized one-dimensional Gaussian moment of x^{2m}.
inline Rational gaussian_moment_1d(unsigned exponent) {
  if (exponent % 2 != 0) return Rational(0);
  Rational acc(1);
  for (unsigned m = exponent / 2; m > 0; --m) acc *= Rational(2 * m - 1, 2);
  return acc;
}

inline Rational factorial(unsigned k) {
  Rational acc(1);
  for (unsigned i = 2; i <= k; ++i) acc *= static_cast<long>(i);
  return acc;
}

}  // namespace cliffop
