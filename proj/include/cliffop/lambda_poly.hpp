#pragma once
#include <cmath>
#include <string>
#include <vector>

#include "cliffop/rational.hpp"

namespace cliffop {

// Univariate polynomial in the formal variable lambda over the exact
// rationals. Dense representation; trailing zero coefficients are trimmed so
// equality is structural.
class LambdaPoly {
public:
  LambdaPoly() = default;
  explicit LambdaPoly(const Rational& constant) {
    if (!cliffop::is_zero(constant)) coeffs_.push_back(constant);
  }

  static LambdaPoly zero() { return LambdaPoly(); }
  static LambdaPoly one() { return LambdaPoly(Rational(1)); }
  static LambdaPoly constant(const Rational& q) { return LambdaPoly(q); }
  static LambdaPoly lambda() {
    LambdaPoly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational coefficient(unsigned k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  // Constant value, if the polynomial does not actually involve lambda.
  bool constant_value(Rational& out) const {
    if (!is_constant()) return false;
    out = coeffs_.empty() ? Rational(0) : coeffs_[0];
    return true;
  }

  LambdaPoly operator-() const {
    LambdaPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  LambdaPoly& operator+=(const LambdaPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  LambdaPoly& operator-=(const LambdaPoly& o) { return *this += -o; }

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }

  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
  }

  LambdaPoly& operator*=(const LambdaPoly& o) { return *this = *this * o; }

  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LambdaPoly& a, const LambdaPoly& b) { return !(a == b); }

  LambdaPoly scaled(const Rational& q) const {
    if (cliffop::is_zero(q)) return LambdaPoly();
    LambdaPoly r(*this);
    for (auto& c : r.coeffs_) c *= q;
    return r;
  }

  // Drops every coefficient of lambda^k with k > order.
  LambdaPoly truncated(unsigned order) const {
    LambdaPoly r(*this);
    if (r.coeffs_.size() > order + 1) r.coeffs_.resize(order + 1);
    r.trim();
    return r;
  }

  Rational eval(const Rational& lambda) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i > 0; --i) acc = acc * lambda + coeffs_[i - 1];
    return acc;
  }
  double eval(double lambda) const {
    double acc = 0.0;
    for (size_t i = coeffs_.size(); i > 0; --i) acc = acc * lambda + to_double(coeffs_[i - 1]);
    return acc;
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
      if (cliffop::is_zero(coeffs_[k])) continue;
      std::string mono = k == 0 ? "" : (k == 1 ? "lambda" : "lambda^" + std::to_string(k));
      std::string coeff = rational_to_string(coeffs_[k]);
      std::string term;
      if (mono.empty())
        term = coeff;
      else if (coeffs_[k] == 1)
        term = mono;
      else if (coeffs_[k] == -1)
        term = "-" + mono;
      else
        term = coeff + "*" + mono;
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out.empty() ? "0" : out;
  }

private:
  void trim() {
    while (!coeffs_.empty() && cliffop::is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const LambdaPoly& p) { return p.is_zero(); }

}  // namespace cliffop
