#pragma once
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cliffop/multivector.hpp"

namespace cliffop {

using MultiIndex = std::vector<unsigned>;

inline unsigned multiindex_degree(const MultiIndex& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0u);
}

// Clifford algebra-valued polynomial in n real variables: a map from
// monomial exponent vectors to multivector coefficients. Zero coefficients
// are pruned eagerly; equality is structural.
template <class S>
class CliffordPolynomial {
public:
  using Coeff = Multivector<S>;
  using Terms = std::map<MultiIndex, Coeff>;

  CliffordPolynomial(int n, Signature sig) : n_(n), sig_(sig) {
    if (n < 1 || n > kMaxDimension) throw Error("variable count out of range");
  }

  static CliffordPolynomial zero(int n, Signature sig) { return {n, sig}; }
  static CliffordPolynomial constant(int n, Signature sig, const S& value) {
    CliffordPolynomial p(n, sig);
    p.add_term(MultiIndex(n, 0), Coeff::scalar(sig, value));
    return p;
  }
  static CliffordPolynomial monomial(int n, Signature sig, MultiIndex alpha, Coeff coeff) {
    if (static_cast<int>(alpha.size()) != n) throw Error("multi-index length mismatch");
    CliffordPolynomial p(n, sig);
    p.add_term(std::move(alpha), std::move(coeff));
    return p;
  }
  // x_j as a scalar-coefficient polynomial.
  static CliffordPolynomial variable(int n, Signature sig, int j) {
    MultiIndex alpha(n, 0);
    alpha.at(j - 1) = 1;
    return monomial(n, sig, alpha, Coeff::scalar(sig, ScalarOps<S>::one()));
  }
  // The vector variable x = sum_j x_j e_j.
  static CliffordPolynomial vector_x(int n, Signature sig) {
    CliffordPolynomial p(n, sig);
    for (int j = 1; j <= n; ++j) {
      MultiIndex alpha(n, 0);
      alpha[j - 1] = 1;
      p.add_term(std::move(alpha), Coeff::basis_vector(sig, j));
    }
    return p;
  }
  // |x|^2 as a scalar polynomial.
  static CliffordPolynomial radius_squared(int n, Signature sig) {
    CliffordPolynomial p(n, sig);
    for (int j = 1; j <= n; ++j) {
      MultiIndex alpha(n, 0);
      alpha[j - 1] = 2;
      p.add_term(std::move(alpha), Coeff::scalar(sig, ScalarOps<S>::one()));
    }
    return p;
  }

  int vars() const { return n_; }
  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Coeff::zero(sig_) : it->second;
  }

  int degree() const {
    int d = -1;
    for (const auto& [alpha, c] : terms_) d = std::max(d, static_cast<int>(multiindex_degree(alpha)));
    return d;
  }
  bool is_homogeneous(int* degree_out = nullptr) const {
    int d = -1;
    for (const auto& [alpha, c] : terms_) {
      int k = static_cast<int>(multiindex_degree(alpha));
      if (d < 0) d = k;
      if (k != d) return false;
    }
    if (degree_out) *degree_out = d < 0 ? 0 : d;
    return true;
  }

  CliffordPolynomial operator-() const {
    CliffordPolynomial r(n_, sig_);
    for (const auto& [alpha, c] : terms_) r.terms_.emplace(alpha, -c);
    return r;
  }
  friend CliffordPolynomial operator+(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    a.check_same(b);
    CliffordPolynomial r = a;
    for (const auto& [alpha, c] : b.terms_) r.add_term(alpha, c);
    return r;
  }
  friend CliffordPolynomial operator-(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    return a + (-b);
  }
  CliffordPolynomial& operator+=(const CliffordPolynomial& o) { return *this = *this + o; }
  CliffordPolynomial& operator-=(const CliffordPolynomial& o) { return *this = *this - o; }

  friend CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    a.check_same(b);
    CliffordPolynomial r(a.n_, a.sig_);
    for (const auto& [aa, ca] : a.terms_) {
      for (const auto& [ab, cb] : b.terms_) {
        MultiIndex alpha(a.n_);
        for (int i = 0; i < a.n_; ++i) alpha[i] = aa[i] + ab[i];
        r.add_term(std::move(alpha), ca * cb);
      }
    }
    return r;
  }
  CliffordPolynomial& operator*=(const CliffordPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    return a.n_ == b.n_ && a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    return !(a == b);
  }

  CliffordPolynomial scaled(const S& s) const {
    CliffordPolynomial r(n_, sig_);
    for (const auto& [alpha, c] : terms_) r.add_term(alpha, c.scaled(s));
    return r;
  }
  CliffordPolynomial scaled_rational(const Rational& q) const {
    return scaled(ScalarOps<S>::from_rational(q));
  }

  enum class Side { Left, Right };
  CliffordPolynomial mul_multivector(const Multivector<S>& m, Side side) const {
    if (!(m.signature() == sig_)) throw Error("signature mismatch");
    CliffordPolynomial r(n_, sig_);
    for (const auto& [alpha, c] : terms_)
      r.add_term(alpha, side == Side::Left ? m * c : c * m);
    return r;
  }

  CliffordPolynomial partial_derivative(int j) const {
    if (j < 1 || j > n_) throw Error("derivative axis out of range");
    CliffordPolynomial r(n_, sig_);
    for (const auto& [alpha, c] : terms_) {
      if (alpha[j - 1] == 0) continue;
      MultiIndex beta = alpha;
      beta[j - 1] -= 1;
      r.add_term(std::move(beta), c.scaled_rational(Rational(static_cast<long>(alpha[j - 1]))));
    }
    return r;
  }

  CliffordPolynomial homogeneous_part(int k) const {
    CliffordPolynomial r(n_, sig_);
    for (const auto& [alpha, c] : terms_)
      if (static_cast<int>(multiindex_degree(alpha)) == k) r.add_term(alpha, c);
    return r;
  }
  std::vector<std::pair<int, CliffordPolynomial>> homogeneous_decompose() const {
    std::map<int, CliffordPolynomial> parts;
    for (const auto& [alpha, c] : terms_) {
      int k = static_cast<int>(multiindex_degree(alpha));
      auto it = parts.find(k);
      if (it == parts.end()) it = parts.emplace(k, CliffordPolynomial(n_, sig_)).first;
      it->second.add_term(alpha, c);
    }
    return {parts.begin(), parts.end()};
  }

  template <class T, class Fn>
  CliffordPolynomial<T> map_coeffs(Fn&& fn) const {
    CliffordPolynomial<T> out(n_, sig_);
    for (const auto& [alpha, c] : terms_)
      out.add_term(alpha, c.template map_coeffs<T>(fn));
    return out;
  }

  // Numeric point evaluation; scalar-specific hooks live in the caller for
  // lambda-dependent coefficient rings.
  Multivector<double> evaluate(const std::vector<double>& point) const
    requires(std::is_same_v<S, Rational> || std::is_same_v<S, double>)
  {
    if (static_cast<int>(point.size()) != n_) throw Error("point dimension mismatch");
    Multivector<double> acc(sig_);
    for (const auto& [alpha, c] : terms_) {
      double mono = 1.0;
      for (int i = 0; i < n_; ++i) mono *= std::pow(point[i], alpha[i]);
      acc += c.template map_coeffs<double>([&](const S& s) {
        if constexpr (std::is_same_v<S, Rational>)
          return to_double(s) * mono;
        else
          return s * mono;
      });
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<MultiIndex, const Coeff*>> ordered;
    for (const auto& [alpha, c] : terms_) ordered.emplace_back(alpha, &c);
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      unsigned da = multiindex_degree(a.first), db = multiindex_degree(b.first);
      if (da != db) return da < db;
      return a.first < b.first;
    });
    std::string out;
    for (const auto& [alpha, c] : ordered) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (alpha[i] > 1) mono += "^" + std::to_string(alpha[i]);
      }
      out += "[" + c->str() + "]";
      if (!mono.empty()) out += "*" + mono;
    }
    return out;
  }

  void add_term(MultiIndex alpha, const Coeff& delta) {
    if (static_cast<int>(alpha.size()) != n_) throw Error("multi-index length mismatch");
    if (!(delta.signature() == sig_)) throw Error("coefficient signature mismatch");
    if (delta.is_zero()) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
      terms_.emplace(std::move(alpha), delta);
    } else {
      it->second += delta;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

private:
  void check_same(const CliffordPolynomial& o) const {
    if (n_ != o.n_ || !(sig_ == o.sig_)) throw Error("dimension or signature mismatch");
  }

  int n_;
  Signature sig_;
  Terms terms_;
};

// Exact division by |x|^2; used when peeling x off x*M products. Throws if
// the polynomial is not divisible.
template <class S>
CliffordPolynomial<S> divide_by_radius_squared(const CliffordPolynomial<S>& p) {
  CliffordPolynomial<S> rem = p;
  CliffordPolynomial<S> out(p.vars(), p.signature());
  const auto r2 = CliffordPolynomial<S>::radius_squared(p.vars(), p.signature());
  // Lex division against the leading monomial x1^2 of |x|^2; the leading
  // monomial of rem strictly decreases, so this terminates.
  while (!rem.is_zero()) {
    auto it = rem.terms().rbegin();
    MultiIndex alpha = it->first;
    if (alpha[0] < 2) throw Error("polynomial not divisible by |x|^2");
    MultiIndex beta = alpha;
    beta[0] -= 2;
    auto q = CliffordPolynomial<S>::monomial(p.vars(), p.signature(), beta, it->second);
    out += q;
    rem -= q * r2;
  }
  return out;
}

// Gaussian-envelope-weighted function e^{g|x|^2} * P. The envelope exponent
// g is a single rational; products add envelopes.
template <class S>
struct WeightedFunction {
  Rational envelope;  // g in e^{g|x|^2}
  CliffordPolynomial<S> poly;

  WeightedFunction(Rational g, CliffordPolynomial<S> p)
      : envelope(std::move(g)), poly(std::move(p)) {}

  bool is_zero() const { return poly.is_zero(); }

  friend WeightedFunction operator+(const WeightedFunction& a, const WeightedFunction& b) {
    if (a.envelope != b.envelope) throw Error("adding functions with different envelopes");
    return {a.envelope, a.poly + b.poly};
  }
  friend WeightedFunction operator-(const WeightedFunction& a, const WeightedFunction& b) {
    if (a.envelope != b.envelope) throw Error("subtracting functions with different envelopes");
    return {a.envelope, a.poly - b.poly};
  }
  WeightedFunction operator-() const { return {envelope, -poly}; }
  friend WeightedFunction operator*(const WeightedFunction& a, const WeightedFunction& b) {
    return {a.envelope + b.envelope, a.poly * b.poly};
  }
  friend bool operator==(const WeightedFunction& a, const WeightedFunction& b) {
    if (a.poly.is_zero() && b.poly.is_zero()) return true;
    return a.envelope == b.envelope && a.poly == b.poly;
  }

  WeightedFunction scaled(const S& s) const { return {envelope, poly.scaled(s)}; }
  WeightedFunction scaled_rational(const Rational& q) const {
    return {envelope, poly.scaled_rational(q)};
  }

  Multivector<double> evaluate(const std::vector<double>& point) const
    requires(std::is_same_v<S, Rational> || std::is_same_v<S, double>)
  {
    double r2 = 0.0;
    for (double v : point) r2 += v * v;
    double env = std::exp(to_double(envelope) * r2);
    return poly.evaluate(point).template map_coeffs<double>([&](double c) { return c * env; });
  }
};

}  // namespace cliffop
