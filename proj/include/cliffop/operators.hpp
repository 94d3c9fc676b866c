#pragma once
#include <memory>
#include <string>
#include <vector>

#include "cliffop/polynomial.hpp"

namespace cliffop {

// AST over the operator calculus A_n. Nodes are immutable and shared;
// application is interpretive. Scale factors live in Q[lambda]; they embed
// into whatever coefficient ring the target function uses (application to a
// plain-rational function with a genuine lambda factor is an error).
enum class OpKind {
  D,        // Dirac: sum_j e_j d_j
  X,        // vector multiplication: f -> x f
  E,        // Euler: sum_j x_j d_j
  Gamma,    // spherical Dirac, coordinate form
  Delta,    // Laplacian
  Identity,
  Zero,
  Xj,       // multiplication by x_j
  Dj,       // d/dx_j
  Xij,      // left multiplication by e_j
  Is,       // I_s: degree-k part scaled by 1/(k+s)
  Scalar,   // multiplication by an element of Q[lambda]
  Sum,
  Compose,  // children applied right-to-left
  Power,
  Commutator,
  Anticommutator,
  ExpNilpotent,  // exact exp of a degree-lowering operator
  ExpTruncated,  // sum_{k<=order} op^k/k!
};

struct OperatorExpr;
using OpPtr = std::shared_ptr<const OperatorExpr>;

struct OperatorExpr {
  OpKind kind;
  int index = 0;             // axis for Xj/Dj/Xij (1-based)
  Rational s_param = 0;      // parameter of I_s
  LambdaPoly scalar;         // Scalar payload
  int power = 0;             // Power exponent or ExpTruncated order
  std::vector<OpPtr> children;
};

namespace op {

inline OpPtr make(OpKind kind) {
  auto node = std::make_shared<OperatorExpr>();
  node->kind = kind;
  return node;
}

inline OpPtr dirac() { return make(OpKind::D); }
inline OpPtr x_vector() { return make(OpKind::X); }
inline OpPtr euler() { return make(OpKind::E); }
inline OpPtr gamma() { return make(OpKind::Gamma); }
inline OpPtr laplacian() { return make(OpKind::Delta); }
inline OpPtr identity() { return make(OpKind::Identity); }
inline OpPtr zero() { return make(OpKind::Zero); }

inline OpPtr coordinate(OpKind kind, int j) {
  auto node = std::make_shared<OperatorExpr>();
  node->kind = kind;
  node->index = j;
  return node;
}
inline OpPtr x_coord(int j) { return coordinate(OpKind::Xj, j); }
inline OpPtr d_coord(int j) { return coordinate(OpKind::Dj, j); }
inline OpPtr xi(int j) { return coordinate(OpKind::Xij, j); }

inline OpPtr integral_is(const Rational& s) {
  auto node = std::make_shared<OperatorExpr>();
  node->kind = OpKind::Is;
  node->s_param = s;
  return node;
}

inline OpPtr scalar(const LambdaPoly& value) {
  auto node = std::make_shared<OperatorExpr>();
  node->kind = OpKind::Scalar;
  node->scalar = value;
  return node;
}
inline OpPtr scalar(const Rational& value) { return scalar(LambdaPoly::constant(value)); }
inline OpPtr lambda() { return scalar(LambdaPoly::lambda()); }

inline OpPtr sum(std::vector<OpPtr> children) {
  auto node = std::make_shared<OperatorExpr>();
  node->kind = OpKind::Sum;
  node->children = std::move(children);
  return node;
}
// a then b reads left-to-right in the usual operator-product notation:
// compose({a, b}) f = a(b(f)).
inline OpPtr compose(std::vector<OpPtr> children) {
  auto node = std::make_shared<OperatorExpr>();
  node->kind = OpKind::Compose;
  node->children = std::move(children);
  return node;
}
inline OpPtr scale(const LambdaPoly& c, OpPtr a) { return compose({scalar(c), std::move(a)}); }
inline OpPtr scale(const Rational& c, OpPtr a) { return compose({scalar(c), std::move(a)}); }
inline OpPtr negate(OpPtr a) { return scale(Rational(-1), std::move(a)); }

inline OpPtr power(OpPtr base, int exponent) {
  if (exponent < 0) throw Error("negative operator power");
  auto node = std::make_shared<OperatorExpr>();
  node->kind = OpKind::Power;
  node->power = exponent;
  node->children = {std::move(base)};
  return node;
}
inline OpPtr commutator(OpPtr a, OpPtr b) {
  auto node = std::make_shared<OperatorExpr>();
  node->kind = OpKind::Commutator;
  node->children = {std::move(a), std::move(b)};
  return node;
}
inline OpPtr anticommutator(OpPtr a, OpPtr b) {
  auto node = std::make_shared<OperatorExpr>();
  node->kind = OpKind::Anticommutator;
  node->children = {std::move(a), std::move(b)};
  return node;
}
inline OpPtr exp_nilpotent(OpPtr a) {
  auto node = std::make_shared<OperatorExpr>();
  node->kind = OpKind::ExpNilpotent;
  node->children = {std::move(a)};
  return node;
}
inline OpPtr exp_truncated(OpPtr a, int order) {
  if (order < 0) throw Error("negative truncation order");
  auto node = std::make_shared<OperatorExpr>();
  node->kind = OpKind::ExpTruncated;
  node->power = order;
  node->children = {std::move(a)};
  return node;
}

}  // namespace op

namespace detail {

// Atom actions on polynomials.
template <class S>
CliffordPolynomial<S> apply_dj(const CliffordPolynomial<S>& f, int j) {
  return f.partial_derivative(j);
}

template <class S>
CliffordPolynomial<S> apply_xj(const CliffordPolynomial<S>& f, int j) {
  return CliffordPolynomial<S>::variable(f.vars(), f.signature(), j) * f;
}

template <class S>
CliffordPolynomial<S> apply_xi(const CliffordPolynomial<S>& f, int j) {
  return f.mul_multivector(Multivector<S>::basis_vector(f.signature(), j),
                           CliffordPolynomial<S>::Side::Left);
}

template <class S>
CliffordPolynomial<S> apply_dirac(const CliffordPolynomial<S>& f) {
  CliffordPolynomial<S> out(f.vars(), f.signature());
  for (int j = 1; j <= f.vars(); ++j) out += apply_xi(f.partial_derivative(j), j);
  return out;
}

template <class S>
CliffordPolynomial<S> apply_xvec(const CliffordPolynomial<S>& f) {
  return CliffordPolynomial<S>::vector_x(f.vars(), f.signature()) * f;
}

template <class S>
CliffordPolynomial<S> apply_euler(const CliffordPolynomial<S>& f) {
  CliffordPolynomial<S> out(f.vars(), f.signature());
  for (const auto& [alpha, c] : f.terms()) {
    unsigned k = multiindex_degree(alpha);
    if (k == 0) continue;
    out.add_term(alpha, c.scaled_rational(Rational(static_cast<long>(k))));
  }
  return out;
}

// Gamma = -sum_{j<k} e_j e_k (x_j d_k - x_k d_j); the redundant outer sum in
// some presentations collapses to the single sum over pairs, cross-checked
// against Gamma = E + nI + DX in the test suites.
template <class S>
CliffordPolynomial<S> apply_gamma(const CliffordPolynomial<S>& f) {
  CliffordPolynomial<S> out(f.vars(), f.signature());
  const Signature sig = f.signature();
  for (int j = 1; j <= f.vars(); ++j) {
    for (int k = j + 1; k <= f.vars(); ++k) {
      Multivector<S> ejk =
          Multivector<S>::basis_vector(sig, j) * Multivector<S>::basis_vector(sig, k);
      CliffordPolynomial<S> angular =
          apply_xj(f.partial_derivative(k), j) - apply_xj(f.partial_derivative(j), k);
      out -= angular.mul_multivector(ejk, CliffordPolynomial<S>::Side::Left);
    }
  }
  return out;
}

template <class S>
CliffordPolynomial<S> apply_laplacian(const CliffordPolynomial<S>& f) {
  CliffordPolynomial<S> out(f.vars(), f.signature());
  for (int j = 1; j <= f.vars(); ++j) out += f.partial_derivative(j).partial_derivative(j);
  return out;
}

template <class S>
CliffordPolynomial<S> apply_is(const CliffordPolynomial<S>& f, const Rational& s) {
  if (sgn(s) <= 0) throw Error("I_s requires s > 0");
  CliffordPolynomial<S> out(f.vars(), f.signature());
  for (auto& [k, part] : f.homogeneous_decompose())
    out += part.scaled_rational(Rational(1) / (Rational(k) + s));
  return out;
}

}  // namespace detail

template <class S>
CliffordPolynomial<S> apply(const OperatorExpr& node, const CliffordPolynomial<S>& f);
template <class S>
WeightedFunction<S> apply(const OperatorExpr& node, const WeightedFunction<S>& f);

namespace detail {

template <class S>
int degree_of(const CliffordPolynomial<S>& f) {
  return f.degree();
}
template <class S>
int degree_of(const WeightedFunction<S>& f) {
  return f.poly.degree();
}

template <class S>
S scalar_in(const LambdaPoly& value) {
  auto converted = ScalarOps<S>::from_lambda(value);
  if (!converted)
    throw Error("operator scale factor uses lambda on a rational-coefficient function");
  return *converted;
}

// Shared combinator logic over both function kinds.
template <class F>
F apply_combinators(const OperatorExpr& node, const F& f) {
  switch (node.kind) {
    case OpKind::Identity:
      return f;
    case OpKind::Zero:
      return f.scaled_rational(Rational(0));
    case OpKind::Sum: {
      F out = f.scaled_rational(Rational(0));
      for (const auto& child : node.children) out = out + apply(*child, f);
      return out;
    }
    case OpKind::Compose: {
      F out = f;
      for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
        out = apply(**it, out);
      return out;
    }
    case OpKind::Power: {
      F out = f;
      for (int i = 0; i < node.power; ++i) out = apply(*node.children[0], out);
      return out;
    }
    case OpKind::Commutator: {
      const auto& a = *node.children[0];
      const auto& b = *node.children[1];
      return apply(a, apply(b, f)) - apply(b, apply(a, f));
    }
    case OpKind::Anticommutator: {
      const auto& a = *node.children[0];
      const auto& b = *node.children[1];
      return apply(a, apply(b, f)) + apply(b, apply(a, f));
    }
    case OpKind::ExpNilpotent: {
      const auto& a = *node.children[0];
      F out = f;
      F term = f;
      // An operator that strictly lowers degree terminates well inside this
      // bound; anything else is rejected.
      int guard = 4 * (degree_of(f) + 2) + 8;
      for (int k = 1; k <= guard; ++k) {
        term = apply(a, term).scaled_rational(Rational(1, k));
        if (term.is_zero()) return out;
        out = out + term;
      }
      throw Error("exp of operator did not terminate: not degree-lowering");
    }
    case OpKind::ExpTruncated: {
      F out = f;
      F term = f;
      for (int k = 1; k <= node.power; ++k) {
        term = apply(*node.children[0], term).scaled_rational(Rational(1, k));
        out = out + term;
      }
      return out;
    }
    default:
      throw Error("unhandled operator node");
  }
}

}  // namespace detail

template <class S>
CliffordPolynomial<S> apply(const OperatorExpr& node, const CliffordPolynomial<S>& f) {
  using namespace detail;
  switch (node.kind) {
    case OpKind::D:
      return apply_dirac(f);
    case OpKind::X:
      return apply_xvec(f);
    case OpKind::E:
      return apply_euler(f);
    case OpKind::Gamma:
      return apply_gamma(f);
    case OpKind::Delta:
      return apply_laplacian(f);
    case OpKind::Xj:
      return apply_xj(f, node.index);
    case OpKind::Dj:
      return apply_dj(f, node.index);
    case OpKind::Xij:
      return apply_xi(f, node.index);
    case OpKind::Is:
      return apply_is(f, node.s_param);
    case OpKind::Scalar:
      return f.scaled(scalar_in<S>(node.scalar));
    default:
      return apply_combinators(node, f);
  }
}

template <class S>
CliffordPolynomial<S> apply(const OpPtr& node, const CliffordPolynomial<S>& f) {
  return apply(*node, f);
}

// Action on e^{g|x|^2} P. All atoms preserve the envelope:
//   d_j (e^{g r^2} P) = e^{g r^2} (d_j P + 2g x_j P)
// and the rest follow by composition; the angular operator commutes with
// radial envelopes.
template <class S>
WeightedFunction<S> apply(const OperatorExpr& node, const WeightedFunction<S>& f) {
  using namespace detail;
  using Poly = CliffordPolynomial<S>;
  const Rational& g = f.envelope;
  const Rational two_g = Rational(2) * g;
  switch (node.kind) {
    case OpKind::Xj:
      return {g, apply_xj(f.poly, node.index)};
    case OpKind::Dj:
      return {g, apply_dj(f.poly, node.index) +
                     apply_xj(f.poly, node.index).scaled_rational(two_g)};
    case OpKind::Xij:
      return {g, apply_xi(f.poly, node.index)};
    case OpKind::X:
      return {g, apply_xvec(f.poly)};
    case OpKind::D:
      return {g, apply_dirac(f.poly) + apply_xvec(f.poly).scaled_rational(two_g)};
    case OpKind::E: {
      Poly r2 = Poly::radius_squared(f.poly.vars(), f.poly.signature());
      return {g, apply_euler(f.poly) + (r2 * f.poly).scaled_rational(two_g)};
    }
    case OpKind::Gamma:
      return {g, apply_gamma(f.poly)};
    case OpKind::Delta: {
      Poly r2 = Poly::radius_squared(f.poly.vars(), f.poly.signature());
      Poly out = apply_laplacian(f.poly);
      out += apply_euler(f.poly).scaled_rational(Rational(2) * two_g);
      out += f.poly.scaled_rational(two_g * Rational(f.poly.vars()));
      out += (r2 * f.poly).scaled_rational(two_g * two_g);
      return {g, out};
    }
    case OpKind::Is:
      throw Error("I_s acts on polynomials, not Gaussian-weighted functions");
    case OpKind::Scalar:
      return f.scaled(scalar_in<S>(node.scalar));
    default:
      return apply_combinators(node, f);
  }
}

template <class S>
WeightedFunction<S> apply(const OpPtr& node, const WeightedFunction<S>& f) {
  return apply(*node, f);
}

// Truncated exponential together with a formal-remainder flag: the flag is
// set when the first dropped term is nonzero, i.e. the truncation genuinely
// differs from the full (possibly non-terminating) series on this argument.
template <class F>
std::pair<F, bool> exp_truncated_with_remainder(const OpPtr& generator, int order, const F& f) {
  F out = apply(*op::exp_truncated(generator, order), f);
  F term = f;
  for (int k = 1; k <= order + 1; ++k)
    term = apply(*generator, term).scaled_rational(Rational(1, k));
  return {out, !term.is_zero()};
}

// ---- Named operators -------------------------------------------------------

namespace op {

// L+ = X - D and L- = X + D, the sqrt(2)-free ladder pair; D^± = L^±/sqrt(2).
inline OpPtr ladder_raise() { return sum({x_vector(), negate(dirac())}); }
inline OpPtr ladder_lower() { return sum({x_vector(), dirac()}); }

}  // namespace op

// The ladder pair together with its normalization bookkeeping: applying
// raise or lower once multiplies the conventionally normalized operator by
// 2^{1/2}, so a word of total ladder length m carries 2^{m/2}; only even
// totals (squared norms, anticommutators) are reported, keeping every
// stored value rational. {L+, L-} = -4 H0 is the sqrt(2)-free form of the
// splitting of the harmonic oscillator.
struct LadderPair {
  OpPtr raise = op::ladder_raise();
  OpPtr lower = op::ladder_lower();
  int sqrt2_exponent_per_step = 1;  // half-integer power of two, in halves

  // 2^{total_steps/2} as a rational; defined only for even totals.
  static Rational normalization_squared(int total_steps) {
    if (total_steps % 2 != 0) throw Error("odd ladder words have irrational normalization");
    Rational out(1);
    for (int i = 0; i < total_steps / 2; ++i) out *= 2;
    return out;
  }
};

namespace op {

// H0 = (1/2)(-Delta + |x|^2 I); |x|^2 I = -X^2.
inline OpPtr hamiltonian_h0() {
  return scale(Rational(1, 2),
               sum({negate(laplacian()), negate(power(x_vector(), 2))}));
}

// J0 = -(1/2) Delta + E + (n/2) I.
inline OpPtr hamiltonian_j0(int n) {
  return sum({scale(Rational(-1, 2), laplacian()), euler(),
              scale(make_rational(n, 2), identity())});
}

// X_j -/+ d_j: the sqrt(2)-free scalar ladder pair (sign +1 raises).
inline OpPtr weyl_ladder(int j, int sign) {
  if (sign > 0) return sum({x_coord(j), negate(d_coord(j))});
  return sum({x_coord(j), d_coord(j)});
}

// X - lambda I + (2 lambda / n) Gamma, the shifted vector variable.
inline OpPtr shifted_x(int n) {
  return sum({x_vector(), negate(scalar(LambdaPoly::lambda())),
              scale(LambdaPoly::lambda().scaled(make_rational(2, n)), gamma())});
}

// Shifted ladder pair: L_lambda^+ = X - (D + lambda) + (2 lambda/n) Gamma,
// L_lambda^- = X + (D - lambda) + (2 lambda/n) Gamma.
inline OpPtr shifted_ladder_raise(int n) {
  return sum({shifted_x(n), negate(dirac())});
}
inline OpPtr shifted_ladder_lower(int n) {
  return sum({shifted_x(n), dirac()});
}

// X - 2 lambda (I - Gamma/n) Gamma, the bracket shared by both written forms
// of the Landau operator.
inline OpPtr landau_gauge_bracket(int n) {
  return sum({x_vector(),
              negate(compose({scale(LambdaPoly::lambda().scaled(Rational(2)),
                                    sum({identity(), scale(make_rational(-1, n), gamma())})),
                              gamma()}))});
}

// H_lambda = (1/2)((D-lambda)(D+lambda) - X^2
//                  - (2 lambda/n)(X - 2 lambda (I - Gamma/n) Gamma)).
inline OpPtr hamiltonian_h_lambda(int n) {
  OpPtr lam = scalar(LambdaPoly::lambda());
  OpPtr dd = compose({sum({dirac(), negate(lam)}), sum({dirac(), lam})});
  return scale(Rational(1, 2),
               sum({dd, negate(power(x_vector(), 2)),
                    negate(scale(LambdaPoly::lambda().scaled(make_rational(2, n)),
                                 landau_gauge_bracket(n)))}));
}

// The same operator assembled from the gauge-term form
// -(1/2)(Delta + lambda^2) + (1/2)|x|^2 - (lambda/n)(X - 2 lambda (I - Gamma/n) Gamma).
inline OpPtr hamiltonian_h_lambda_gauge_form(int n) {
  LambdaPoly lam2 = LambdaPoly::lambda() * LambdaPoly::lambda();
  OpPtr kinetic = scale(Rational(-1, 2), sum({laplacian(), scalar(lam2)}));
  OpPtr potential = scale(Rational(-1, 2), power(x_vector(), 2));
  return sum({kinetic, potential,
              negate(scale(LambdaPoly::lambda().scaled(make_rational(1, n)),
                           landau_gauge_bracket(n)))});
}

}  // namespace op

}  // namespace cliffop
