#pragma once
#include <vector>

#include "cliffop/operators.hpp"

namespace cliffop {

using RPoly = CliffordPolynomial<Rational>;
using RWeighted = WeightedFunction<Rational>;
using RMulti = Multivector<Rational>;

// Normalized Gaussian moment of the monomial x^alpha under
// pi^{-n/2} e^{-|x|^2} dx: zero unless every entry is even, otherwise
// prod_j (alpha_j - 1)!!/2^{alpha_j/2}. Exactly rational.
Rational gaussian_moment(const MultiIndex& alpha);

// Clifford algebra-valued pairing <f, g> = [f^dag g] integrated against the
// normalized Gaussian weight. For polynomials this is the Fischer pairing;
// for weighted functions the envelopes must combine to exactly -1.
RMulti fischer_inner(const RPoly& f, const RPoly& g);
RMulti fischer_inner(const RWeighted& f, const RWeighted& g);
Rational fischer_inner_scalar(const RWeighted& f, const RWeighted& g);

// One state of the ladder tower over a monogenic homogeneous seed:
//   raw_k = (L+)^k (e^{-|x|^2/2} seed),    L+ = X - D.
// u_scale is the exact scalar by which the U_k = T_k ... T_1 family acts on
// the seed, kept as metadata so the dressed states u_k * raw_k are available
// without rebuilding. lowering_coeff is the exact rational with
//   L- raw_k = lowering_coeff * raw_{k-1}   (L- = X + D),
// certified by actually applying L- and dividing.
struct HermiteState {
  int k = 0;
  RWeighted raw;
  Rational norm_sq;
  Rational u_scale;
  Rational lowering_coeff;  // 0 for k = 0
};

std::vector<HermiteState> hermite_sequence(const RPoly& seed, int k_max);

// Envelope-stripped polynomial part (the Hermite polynomial of the state).
RPoly hermite_polynomial(const HermiteState& state);

// Scalar Weyl-Heisenberg states: products of (X_j - d_j)^{alpha_j} applied
// to the Gaussian, unnormalized; norm_sq = 2^{|alpha|} alpha! exactly.
struct WeylState {
  MultiIndex alpha;
  RWeighted fn;
  Rational norm_sq;
};
std::vector<WeylState> weyl_states(int n, int alpha_max);

// Monogenic/x-monogenic split of a homogeneous harmonic polynomial:
//   p = monogenic + x * lower,  D(monogenic) = 0.
struct HarmonicSplit {
  RPoly monogenic;       // M_k
  RPoly x_times_lower;   // x * M_{k-1}
  RPoly lower;           // M_{k-1}
};
// Projection route: M_k = (I + XD/(2k+n-2)) p. Requires p homogeneous and
// harmonic; the degenerate k=0, n=2 case returns the trivial split.
HarmonicSplit fischer_split_harmonic(const RPoly& p);
// Alternative route through the integral operator: M_k = (I + X I_{n/2} D/2) p.
HarmonicSplit fischer_split_harmonic_is(const RPoly& p);

// Harmonic decomposition of a homogeneous polynomial: p = sum_j |x|^{2j} h_j
// with each h_j harmonic of degree k - 2j. Returned as pairs (j, h_j).
std::vector<std::pair<int, RPoly>> harmonic_decompose(const RPoly& p);

// Full tower p = sum_s x^s M_{k-s}; element s of the result is M_{k-s}
// (possibly zero).
std::vector<RPoly> fischer_tower(const RPoly& p);

// Monogenic projection of a homogeneous polynomial (degree-k entry of the
// tower).
RPoly monogenic_projection(const RPoly& p);

// Cauchy extension: f over n variables in R_{0,n} maps to
// F = exp(-x_{n+1} conj(e_{n+1}) D) f over n+1 variables in R_{0,n+1},
// which satisfies (d_{n+1} + conj(e_{n+1}) D) F = 0 and F|_{x_{n+1}=0} = f.
RPoly ck_extension(const RPoly& f);
// Residual of the Cauchy-Riemann system for an extension candidate.
RPoly ck_residual(const RPoly& extended);

// sum_{k<=k_max} lambda^k/(n^k k!) psi_k with psi_k the raw Hermite
// polynomials of the seed's tower.
CliffordPolynomial<LambdaPoly> hermite_generating_sum(const RPoly& seed, int k_max);

}  // namespace cliffop
