#pragma once
#include <optional>
#include <string>

#include "cliffop/cs_scalar.hpp"
#include "cliffop/lambda_poly.hpp"
#include "cliffop/rational.hpp"

namespace cliffop {

// Uniform interface over the scalar rings the algebra is instantiated with:
// exact rationals, Q[lambda], the cosh/sinh symbol ring, and plain doubles
// (numeric export only).
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& q) { return q; }
  static std::optional<Rational> from_lambda(const LambdaPoly& p) {
    Rational v;
    if (!p.constant_value(v)) return std::nullopt;
    return v;
  }
  static bool is_zero(const Rational& s) { return cliffop::is_zero(s); }
  static std::string str(const Rational& s) { return rational_to_string(s); }
};

template <>
struct ScalarOps<LambdaPoly> {
  static LambdaPoly zero() { return LambdaPoly::zero(); }
  static LambdaPoly one() { return LambdaPoly::one(); }
  static LambdaPoly from_rational(const Rational& q) { return LambdaPoly::constant(q); }
  static std::optional<LambdaPoly> from_lambda(const LambdaPoly& p) { return p; }
  static bool is_zero(const LambdaPoly& s) { return s.is_zero(); }
  static std::string str(const LambdaPoly& s) { return s.str(); }
};

template <>
struct ScalarOps<CSScalar> {
  static CSScalar zero() { return CSScalar::zero(); }
  static CSScalar one() { return CSScalar::one(); }
  static CSScalar from_rational(const Rational& q) { return CSScalar(q); }
  static std::optional<CSScalar> from_lambda(const LambdaPoly& p) {
    return CSScalar::from_lambda(p);
  }
  static bool is_zero(const CSScalar& s) { return s.is_zero(); }
  static std::string str(const CSScalar& s) { return s.str(); }
};

template <>
struct ScalarOps<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_rational(const Rational& q) { return to_double(q); }
  static std::optional<double> from_lambda(const LambdaPoly& p) {
    Rational v;
    if (!p.constant_value(v)) return std::nullopt;
    return to_double(v);
  }
  static bool is_zero(double s) { return s == 0.0; }
  static std::string str(double s) { return std::to_string(s); }
};

}  // namespace cliffop
