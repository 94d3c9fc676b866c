#pragma once
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cliffop/scalar_ops.hpp"

namespace cliffop {

inline constexpr int kMaxDimension = 16;

// Diagonal signature (p, q): the first p basis vectors square to +1, the
// remaining q square to -1. The algebras used throughout are R_{0,n}, where
// every generator squares to -1 and x^2 = -|x|^2 for vectors.
struct Signature {
  int p = 0;
  int q = 0;

  Signature() = default;
  Signature(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0 || n() < 1 || n() > kMaxDimension)
      throw Error("signature (" + std::to_string(p) + "," + std::to_string(q) +
                  ") out of range");
  }
  int n() const { return p + q; }
  // Square of the j-th generator, 1-based.
  int square_of(int j) const { return j <= p ? 1 : -1; }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

using BladeMask = std::uint32_t;

inline int blade_grade(BladeMask mask) { return std::popcount(mask); }

// Sign from reordering the concatenation of two ascending generator products
// into ascending order (transposition count), without metric factors.
inline int blade_reorder_sign(BladeMask a, BladeMask b) {
  int swaps = 0;
  BladeMask t = a >> 1;
  while (t != 0) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

// Full product sign for basis blades, including squares of repeated
// generators; the resulting blade is a ^ b.
inline int blade_product_sign(BladeMask a, BladeMask b, const Signature& sig) {
  int sign = blade_reorder_sign(a, b);
  BladeMask common = a & b;
  while (common != 0) {
    int j = std::countr_zero(common) + 1;
    sign *= sig.square_of(j);
    common &= common - 1;
  }
  return sign;
}

enum class Involution { Main, Reversion, Conjugation };

inline int involution_sign(Involution kind, int grade) {
  switch (kind) {
    case Involution::Main:
      return grade % 2 == 0 ? 1 : -1;
    case Involution::Reversion:
      return (grade * (grade - 1) / 2) % 2 == 0 ? 1 : -1;
    case Involution::Conjugation:
      return (grade * (grade + 1) / 2) % 2 == 0 ? 1 : -1;
  }
  return 1;
}

// Element of R_{p,q} as a blade-indexed coefficient map. Immutable in use:
// every operation returns a fresh value, zero coefficients are pruned so
// equality is structural.
template <class S>
class Multivector {
public:
  using Terms = std::map<BladeMask, S>;

  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector zero(Signature sig) { return Multivector(sig); }
  static Multivector scalar(Signature sig, S value) {
    Multivector m(sig);
    m.set(0, std::move(value));
    return m;
  }
  static Multivector blade(Signature sig, BladeMask mask, S coeff) {
    if (mask >= (BladeMask{1} << sig.n())) throw Error("blade outside the algebra");
    Multivector m(sig);
    m.set(mask, std::move(coeff));
    return m;
  }
  // e_j, 1-based.
  static Multivector basis_vector(Signature sig, int j) {
    if (j < 1 || j > sig.n()) throw Error("basis vector index out of range");
    return blade(sig, BladeMask{1} << (j - 1), ScalarOps<S>::one());
  }

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(BladeMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? ScalarOps<S>::zero() : it->second;
  }
  S scalar_part() const { return coefficient(0); }

  int max_grade() const {
    int g = 0;
    for (const auto& [mask, c] : terms_) g = std::max(g, blade_grade(mask));
    return g;
  }
  bool is_grade(int r) const {
    for (const auto& [mask, c] : terms_)
      if (blade_grade(mask) != r) return false;
    return true;
  }

  Multivector operator-() const {
    Multivector r(sig_);
    for (const auto& [mask, c] : terms_) r.terms_.emplace(mask, -c);
    return r;
  }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector r = a;
    for (const auto& [mask, c] : b.terms_) r.add_to(mask, c);
    return r;
  }
  friend Multivector operator-(const Multivector& a, const Multivector& b) {
    return a + (-b);
  }
  Multivector& operator+=(const Multivector& o) { return *this = *this + o; }
  Multivector& operator-=(const Multivector& o) { return *this = *this - o; }

  // Geometric product; sign per blade by transposition counting plus the
  // signature's squares on repeated generators.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector r(a.sig_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        int sign = blade_product_sign(ma, mb, a.sig_);
        S prod = ca * cb;
        r.add_to(ma ^ mb, sign > 0 ? prod : S(-prod));
      }
    }
    return r;
  }
  Multivector& operator*=(const Multivector& o) { return *this = *this * o; }

  Multivector scaled(const S& s) const {
    Multivector r(sig_);
    if (ScalarOps<S>::is_zero(s)) return r;
    for (const auto& [mask, c] : terms_) r.set(mask, c * s);
    return r;
  }
  Multivector scaled_rational(const Rational& q) const {
    return scaled(ScalarOps<S>::from_rational(q));
  }

  Multivector grade_project(int r) const {
    Multivector out(sig_);
    for (const auto& [mask, c] : terms_)
      if (blade_grade(mask) == r) out.set(mask, c);
    return out;
  }

  Multivector involution(Involution kind) const {
    Multivector out(sig_);
    for (const auto& [mask, c] : terms_) {
      int sign = involution_sign(kind, blade_grade(mask));
      out.set(mask, sign > 0 ? c : S(-c));
    }
    return out;
  }
  Multivector main_involution() const { return involution(Involution::Main); }
  Multivector reversion() const { return involution(Involution::Reversion); }
  Multivector conjugation() const { return involution(Involution::Conjugation); }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  template <class T, class Fn>
  Multivector<T> map_coeffs(Fn&& fn) const {
    Multivector<T> out(sig_);
    for (const auto& [mask, c] : terms_) out.add_to(mask, fn(c));
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    std::map<std::pair<int, BladeMask>, const S*> ordered;
    for (const auto& [mask, c] : terms_) ordered[{blade_grade(mask), mask}] = &c;
    for (const auto& [key, c] : ordered) {
      if (!out.empty()) out += " + ";
      out += "(" + ScalarOps<S>::str(*c) + ")";
      if (key.second != 0) out += "*" + blade_str(key.second);
    }
    return out;
  }

  static std::string blade_str(BladeMask mask) {
    std::string s;
    for (int j = 1; j <= kMaxDimension; ++j) {
      if (mask & (BladeMask{1} << (j - 1))) {
        if (!s.empty()) s += "*";
        s += "e" + std::to_string(j);
      }
    }
    return s.empty() ? "1" : s;
  }

  // Internal-ish: insert with pruning. Exposed for map_coeffs.
  void add_to(BladeMask mask, const S& delta) {
    if (ScalarOps<S>::is_zero(delta)) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
      terms_.emplace(mask, delta);
    } else {
      it->second += delta;
      if (ScalarOps<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

private:
  void set(BladeMask mask, S value) {
    if (!ScalarOps<S>::is_zero(value)) terms_[mask] = std::move(value);
  }
  void check_same(const Multivector& o) const {
    if (!(sig_ == o.sig_)) throw Error("signature mismatch");
  }

  Signature sig_;
  Terms terms_;
};

// Grade-0 part of a^dagger b (the Clifford algebra-valued inner product's
// scalar part).
template <class S>
S clifford_inner(const Multivector<S>& a, const Multivector<S>& b) {
  return (a.conjugation() * b).scalar_part();
}

// Re-tags an element into a larger algebra (same blades, new signature).
// The source signature must be an initial segment of the target.
template <class S>
Multivector<S> embed_signature(const Multivector<S>& m, Signature target) {
  if (target.n() < m.signature().n() || target.p != m.signature().p)
    throw Error("embedding target must extend the source signature");
  Multivector<S> out(target);
  for (const auto& [mask, c] : m.terms()) out.add_to(mask, c);
  return out;
}

// Splits x*a into (x . a, x ^ a) for a grade-1 x:
//   x . a^r = [x a^r]_{r-1},  x ^ a^r = [x a^r]_{r+1}.
template <class S>
std::pair<Multivector<S>, Multivector<S>> wedge_dot(const Multivector<S>& x,
                                                    const Multivector<S>& a) {
  if (!x.is_grade(1)) throw Error("wedge_dot requires a grade-1 left factor");
  Multivector<S> dot(x.signature()), wedge(x.signature());
  for (int r = 0; r <= a.signature().n(); ++r) {
    Multivector<S> ar = a.grade_project(r);
    if (ar.is_zero()) continue;
    Multivector<S> prod = x * ar;
    if (r >= 1) dot += prod.grade_project(r - 1);
    wedge += prod.grade_project(r + 1);
  }
  return {dot, wedge};
}

}  // namespace cliffop
