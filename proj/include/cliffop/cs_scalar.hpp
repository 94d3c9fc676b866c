#pragma once
#include <cmath>
#include <optional>
#include <string>

#include "cliffop/lambda_poly.hpp"
#include "cliffop/rational.hpp"

namespace cliffop {

// Element a + b*rho of Q[lambda][rho] before reduction; rho is a formal
// square root whose square rewrites to a fixed rational carried by the
// enclosing CSScalar.
struct RhoPoly {
  LambdaPoly a;  // rho-free part
  LambdaPoly b;  // coefficient of rho

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool uses_rho() const { return !b.is_zero(); }

  RhoPoly operator-() const { return {-a, -b}; }
  friend RhoPoly operator+(const RhoPoly& x, const RhoPoly& y) { return {x.a + y.a, x.b + y.b}; }
  friend RhoPoly operator-(const RhoPoly& x, const RhoPoly& y) { return {x.a - y.a, x.b - y.b}; }
  friend bool operator==(const RhoPoly& x, const RhoPoly& y) { return x.a == y.a && x.b == y.b; }

  // (a1 + b1 rho)(a2 + b2 rho) with rho^2 -> rho_sq.
  static RhoPoly mul(const RhoPoly& x, const RhoPoly& y, const Rational& rho_sq) {
    RhoPoly r;
    r.a = x.a * y.a + (x.b * y.b).scaled(rho_sq);
    r.b = x.a * y.b + x.b * y.a;
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!a.is_zero()) out = "(" + a.str() + ")";
    if (!b.is_zero()) {
      if (!out.empty()) out += "+";
      out += "(" + b.str() + ")*rho";
    }
    return out;
  }
};

// Scalar of the form u + c*C + s*S where C and S are independent formal
// symbols standing for cosh(lambda*rho/n) and sinh(lambda*rho/n), and
// u, c, s live in Q[lambda][rho]/(rho^2 - rho_sq). Identities in this ring
// are decided componentwise in {1, C, S}; products of two scalars that both
// carry C/S parts are rejected (nothing in scope multiplies two hyperbolic
// expressions).
class CSScalar {
public:
  CSScalar() = default;
  explicit CSScalar(const Rational& q) : u_{LambdaPoly(q), LambdaPoly()} {}

  static CSScalar zero() { return CSScalar(); }
  static CSScalar one() { return CSScalar(Rational(1)); }
  static CSScalar from_lambda(const LambdaPoly& p) {
    CSScalar r;
    r.u_.a = p;
    return r;
  }
  static CSScalar rho(const Rational& rho_sq) {
    CSScalar r;
    r.rho_sq_ = rho_sq;
    r.u_.b = LambdaPoly::one();
    return r;
  }
  // 1/rho = rho / rho_sq; exact because rho_sq is a nonzero rational.
  static CSScalar rho_inverse(const Rational& rho_sq) {
    if (cliffop::is_zero(rho_sq)) throw Error("rho_inverse with rho_sq = 0");
    CSScalar r;
    r.rho_sq_ = rho_sq;
    r.u_.b = LambdaPoly::constant(Rational(1) / rho_sq);
    return r;
  }
  static CSScalar cosh_symbol(const Rational& rho_sq) {
    CSScalar r;
    r.rho_sq_ = rho_sq;
    r.c_.a = LambdaPoly::one();
    return r;
  }
  static CSScalar sinh_symbol(const Rational& rho_sq) {
    CSScalar r;
    r.rho_sq_ = rho_sq;
    r.s_.a = LambdaPoly::one();
    return r;
  }

  const RhoPoly& part_one() const { return u_; }
  const RhoPoly& part_cosh() const { return c_; }
  const RhoPoly& part_sinh() const { return s_; }
  const std::optional<Rational>& rho_sq() const { return rho_sq_; }

  bool is_zero() const { return u_.is_zero() && c_.is_zero() && s_.is_zero(); }
  bool has_hyperbolic() const { return !c_.is_zero() || !s_.is_zero(); }

  CSScalar operator-() const {
    CSScalar r(*this);
    r.u_ = -r.u_;
    r.c_ = -r.c_;
    r.s_ = -r.s_;
    return r;
  }

  friend CSScalar operator+(const CSScalar& x, const CSScalar& y) {
    CSScalar r;
    r.rho_sq_ = merged_context(x, y);
    r.u_ = x.u_ + y.u_;
    r.c_ = x.c_ + y.c_;
    r.s_ = x.s_ + y.s_;
    return r;
  }
  friend CSScalar operator-(const CSScalar& x, const CSScalar& y) { return x + (-y); }
  CSScalar& operator+=(const CSScalar& o) { return *this = *this + o; }
  CSScalar& operator-=(const CSScalar& o) { return *this = *this - o; }

  friend CSScalar operator*(const CSScalar& x, const CSScalar& y) {
    if (x.has_hyperbolic() && y.has_hyperbolic())
      throw Error("product of two hyperbolic scalars is outside the ring");
    auto ctx = merged_context(x, y);
    Rational r2 = ctx ? *ctx : Rational(0);
    if (!ctx && (x.uses_rho() || y.uses_rho()))
      throw Error("rho arithmetic without a rho^2 context");
    CSScalar r;
    r.rho_sq_ = ctx;
    const CSScalar& plain = x.has_hyperbolic() ? y : x;
    const CSScalar& other = x.has_hyperbolic() ? x : y;
    r.u_ = RhoPoly::mul(plain.u_, other.u_, r2);
    r.c_ = RhoPoly::mul(plain.u_, other.c_, r2);
    r.s_ = RhoPoly::mul(plain.u_, other.s_, r2);
    return r;
  }
  CSScalar& operator*=(const CSScalar& o) { return *this = *this * o; }

  friend bool operator==(const CSScalar& x, const CSScalar& y) {
    return x.u_ == y.u_ && x.c_ == y.c_ && x.s_ == y.s_;
  }
  friend bool operator!=(const CSScalar& x, const CSScalar& y) { return !(x == y); }

  // Numeric specialization: lambda -> value, rho -> sqrt(rho_sq),
  // C -> cosh(lambda*rho/n), S -> sinh(lambda*rho/n).
  double eval(double lambda, int n) const {
    double r = 0.0;
    if (uses_rho() || has_hyperbolic()) {
      if (!rho_sq_) throw Error("numeric eval needs a rho^2 context");
      r = std::sqrt(to_double(*rho_sq_));
    }
    double mu = lambda * r / static_cast<double>(n);
    auto part = [&](const RhoPoly& p) { return p.a.eval(lambda) + p.b.eval(lambda) * r; };
    return part(u_) + part(c_) * std::cosh(mu) + part(s_) * std::sinh(mu);
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    auto append = [&](const RhoPoly& p, const char* sym) {
      if (p.is_zero()) return;
      if (!out.empty()) out += " + ";
      out += p.str();
      if (*sym) out += std::string("*") + sym;
    };
    append(u_, "");
    append(c_, "C");
    append(s_, "S");
    return out;
  }

private:
  bool uses_rho() const { return u_.uses_rho() || c_.uses_rho() || s_.uses_rho(); }

  static std::optional<Rational> merged_context(const CSScalar& x, const CSScalar& y) {
    if (x.rho_sq_ && y.rho_sq_) {
      if (*x.rho_sq_ != *y.rho_sq_) throw Error("mixing scalars with different rho^2");
      return x.rho_sq_;
    }
    return x.rho_sq_ ? x.rho_sq_ : y.rho_sq_;
  }

  std::optional<Rational> rho_sq_;
  RhoPoly u_, c_, s_;
};

inline bool is_zero(const CSScalar& s) { return s.is_zero(); }

}  // namespace cliffop
