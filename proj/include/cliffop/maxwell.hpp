#pragma once
#include <utility>
#include <vector>

#include "cliffop/cs_scalar.hpp"
#include "cliffop/dsl.hpp"
#include "cliffop/operators.hpp"

namespace cliffop {

using CSPoly = CliffordPolynomial<CSScalar>;
using LPoly = CliffordPolynomial<LambdaPoly>;

// Hyperbolic closed-form candidate solution for the displaced system,
// represented as  P = C * cosh_part + S * rho * sinh_rho_part  with C, S the
// formal cosh/sinh symbols and rho^2 = 2s + n. Both polynomial parts have
// plain rational coefficients; the 1/sqrt(2s+n) factors are absorbed into
// sinh_rho_part through 1/rho = rho/(2s+n).
struct MaxwellSolution {
  int n = 0;
  int s = 0;
  bool monogenic_seed = false;
  Rational rho_sq;
  CliffordPolynomial<Rational> seed;
  CliffordPolynomial<Rational> cosh_part;
  CliffordPolynomial<Rational> sinh_rho_part;

  MaxwellSolution(int n_, int s_, bool monogenic, Rational rho,
                  CliffordPolynomial<Rational> seed_, CliffordPolynomial<Rational> cosh_,
                  CliffordPolynomial<Rational> sinh_rho)
      : n(n_),
        s(s_),
        monogenic_seed(monogenic),
        rho_sq(std::move(rho)),
        seed(std::move(seed_)),
        cosh_part(std::move(cosh_)),
        sinh_rho_part(std::move(sinh_rho)) {}
};

// Builds the closed form for a homogeneous seed of degree s. With the
// monogenic flag the kernel form  cosh(mu) P - (1/rho) sinh(mu) x P  is
// used (requires D seed = 0); otherwise the smoothed form
//   exp(-Delta/4)[cosh(mu) P + (1/rho) sinh(mu) (D/2 - X) P].
MaxwellSolution maxwell_solution(const CliffordPolynomial<Rational>& seed, int s,
                                 bool monogenic);

// The solution as a polynomial over the {1, C, S} symbol ring.
CSPoly solution_poly(const MaxwellSolution& sol);

// Residual of (D - lambda + (2 lambda/n) Gamma) applied to the solution,
// decomposed componentwise in {1, C, S}; identically zero iff the closed
// form solves the system in the symbol ring.
CSPoly pde_residual(const MaxwellSolution& sol);

// Residual of Delta f - (2 lambda/n) X f - 2 E f + 2 s f.
CSPoly eigen_residual(const MaxwellSolution& sol);

// Laplacian of both polynomial parts (harmonicity check data).
std::pair<CliffordPolynomial<Rational>, CliffordPolynomial<Rational>> harmonicity(
    const MaxwellSolution& sol);

// The two displayed variants of the smoothed closed form, compared exactly:
//   exp(-Delta/4) [C P + (1/rho) S (D/2 - X) P]   vs
//   C P^D + (1/rho) S (D - X) P^D,     P^D = exp(-Delta/4) P.
bool statement2_forms_agree(const CliffordPolynomial<Rational>& seed, int s);

// lambda-series of the displaced exponential applied to f:
//   sum_{k<=order} (lambda/n)^k (D - X)^k f / k!.
LPoly displaced_exp_series(const LPoly& f, int n, int order);

// Conjugation checks of the displacement action, as lambda-series through
// the given order on the full spanning set:
//   exp(c(D-X)) D = (D + (2 lambda/n) Gamma - lambda) exp(c(D-X)),
// and the X variant. Coefficients of lambda^k compared for k <= order.
std::pair<IdentityReport, IdentityReport> displaced_intertwine_check(int n, int bound,
                                                                     int order);

// Coefficientwise comparison (through lambda^order) of the truncated
// exponential of c(D-X) against the hyperbolic closed-form expansion on the
// smoothed seed exp(-Delta/4) seed.
IdentityReport exp_dminusx_closed_form_check(const CliffordPolynomial<Rational>& seed, int s,
                                             int order);

// The Landau-operator identity set, exact in Q[lambda] on the spanning set:
//   conj-raise / conj-lower : exp(cD)-conjugates of the ladder pair
//   shifted-osp-*          : the nine relations for the shifted generators
//   splitting              : {L+_l, L-_l} + 4 H_lambda
//   splitting-flipped-x    : same against the X-sign-flipped Hamiltonian
//   conj-h0                : exp(cD) H0 exp(-cD) - H_lambda
//   gauge-forms-equal      : the two written forms of H_lambda agree
std::vector<IdentityReport> landau_suite(int n, int bound);

// Largest |numeric residual coefficient| of the PDE residual over random
// points for each lambda value; exercises the floating specialization.
double numeric_pde_residual(const MaxwellSolution& sol, const std::vector<double>& lambdas,
                            int num_points, unsigned rng_seed);

}  // namespace cliffop
