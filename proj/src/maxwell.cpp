#include "cliffop/maxwell.hpp"

#include <random>

namespace cliffop {

namespace {

using RPolyM = CliffordPolynomial<Rational>;

OpPtr exp_lambda_dirac(int n, bool negative) {
  LambdaPoly c = LambdaPoly::lambda().scaled(make_rational(negative ? -1 : 1, n));
  return op::exp_nilpotent(op::scale(c, op::dirac()));
}

// D - lambda + (2 lambda / n) Gamma.
OpPtr maxwell_operator(int n) {
  return op::sum({op::dirac(), op::negate(op::scalar(LambdaPoly::lambda())),
                  op::scale(LambdaPoly::lambda().scaled(make_rational(2, n)), op::gamma())});
}

void require_homogeneous(const RPolyM& seed, int s) {
  int actual = 0;
  if (seed.is_zero() || !seed.is_homogeneous(&actual) || actual != s)
    throw Error("seed must be homogeneous of the stated degree");
}

}  // namespace

MaxwellSolution maxwell_solution(const RPolyM& seed, int s, bool monogenic) {
  require_homogeneous(seed, s);
  const int n = seed.vars();
  Rational rho_sq = Rational(2 * s + n);
  if (monogenic) {
    if (!apply(*op::dirac(), seed).is_zero())
      throw Error("monogenic form requested for a non-monogenic seed");
    // cosh(mu) P - (1/rho) sinh(mu) x P; 1/rho = rho/rho_sq.
    RPolyM x_seed = apply(*op::x_vector(), seed);
    RPolyM sinh_rho = x_seed.scaled_rational(Rational(-1) / rho_sq);
    return MaxwellSolution(n, s, true, rho_sq, seed, seed, sinh_rho);
  }
  // exp(-Delta/4)[cosh(mu) P + (1/rho) sinh(mu) (D/2 - X) P].
  OpPtr smoother = op::exp_nilpotent(op::scale(make_rational(-1, 4), op::laplacian()));
  OpPtr half_d_minus_x =
      op::sum({op::scale(make_rational(1, 2), op::dirac()), op::negate(op::x_vector())});
  RPolyM cosh_part = apply(*smoother, seed);
  RPolyM bracket = apply(*half_d_minus_x, seed);
  RPolyM sinh_rho = apply(*smoother, bracket).scaled_rational(Rational(1) / rho_sq);
  return MaxwellSolution(n, s, false, rho_sq, seed, cosh_part, sinh_rho);
}

CSPoly solution_poly(const MaxwellSolution& sol) {
  CSScalar cosh_sym = CSScalar::cosh_symbol(sol.rho_sq);
  CSScalar sinh_rho_sym = CSScalar::sinh_symbol(sol.rho_sq) * CSScalar::rho(sol.rho_sq);
  CSPoly out(sol.cosh_part.vars(), sol.cosh_part.signature());
  out += sol.cosh_part
             .map_coeffs<CSScalar>([&](const Rational& q) { return cosh_sym * CSScalar(q); });
  out += sol.sinh_rho_part.map_coeffs<CSScalar>(
      [&](const Rational& q) { return sinh_rho_sym * CSScalar(q); });
  return out;
}

CSPoly pde_residual(const MaxwellSolution& sol) {
  return apply(*maxwell_operator(sol.n), solution_poly(sol));
}

CSPoly eigen_residual(const MaxwellSolution& sol) {
  CSPoly f = solution_poly(sol);
  CSPoly out = apply(*op::laplacian(), f);
  out -= apply(*op::x_vector(), f)
             .scaled(CSScalar::from_lambda(LambdaPoly::lambda().scaled(make_rational(2, sol.n))));
  out -= apply(*op::euler(), f).scaled_rational(Rational(2));
  out += f.scaled_rational(Rational(2 * sol.s));
  return out;
}

std::pair<RPolyM, RPolyM> harmonicity(const MaxwellSolution& sol) {
  return {apply(*op::laplacian(), sol.cosh_part), apply(*op::laplacian(), sol.sinh_rho_part)};
}

bool statement2_forms_agree(const RPolyM& seed, int s) {
  require_homogeneous(seed, s);
  MaxwellSolution smoothed = maxwell_solution(seed, s, false);
  // Second form: C P^D + (1/rho) S (D - X) P^D with P^D = exp(-Delta/4) P.
  OpPtr smoother = op::exp_nilpotent(op::scale(make_rational(-1, 4), op::laplacian()));
  RPolyM p_delta = apply(*smoother, seed);
  RPolyM bracket = apply(*op::sum({op::dirac(), op::negate(op::x_vector())}), p_delta);
  Rational rho_sq = Rational(2 * s + seed.vars());
  RPolyM sinh_rho = bracket.scaled_rational(Rational(1) / rho_sq);
  return smoothed.cosh_part == p_delta && smoothed.sinh_rho_part == sinh_rho;
}

LPoly displaced_exp_series(const LPoly& f, int n, int order) {
  OpPtr generator = op::scale(LambdaPoly::lambda().scaled(make_rational(1, n)),
                              op::sum({op::dirac(), op::negate(op::x_vector())}));
  return apply(*op::exp_truncated(generator, order), f);
}

namespace {

LPoly truncate_lambda(const LPoly& f, unsigned order) {
  return f.map_coeffs<LambdaPoly>([&](const LambdaPoly& c) { return c.truncated(order); });
}

}  // namespace

std::pair<IdentityReport, IdentityReport> displaced_intertwine_check(int n, int bound,
                                                                     int order) {
  OpPtr shifted_d = op::sum(
      {op::dirac(),
       op::scale(LambdaPoly::lambda().scaled(make_rational(2, n)), op::gamma()),
       op::negate(op::scalar(LambdaPoly::lambda()))});
  OpPtr shifted_x_op = op::sum(
      {op::x_vector(),
       op::scale(LambdaPoly::lambda().scaled(make_rational(2, n)), op::gamma()),
       op::negate(op::scalar(LambdaPoly::lambda()))});

  auto check = [&](const OpPtr& inner, const OpPtr& outer, const std::string& label,
                   const std::string& tag) {
    return check_functional_zero(n, bound, label, tag, [&](const LPoly& f) {
      LPoly lhs = displaced_exp_series(apply(*inner, f), n, order);
      LPoly rhs = apply(*outer, displaced_exp_series(f, n, order));
      return truncate_lambda(lhs - rhs, static_cast<unsigned>(order));
    });
  };

  auto d_report = check(op::dirac(), shifted_d,
                        "exp(c(D-X))*D - (D + (2*lambda/n)*Gamma - lambda)*exp(c(D-X)) "
                        "[lambda-series through order " +
                            std::to_string(order) + "]",
                        "displaced-d");
  auto x_report = check(op::x_vector(), shifted_x_op,
                        "exp(c(D-X))*X - (X + (2*lambda/n)*Gamma - lambda)*exp(c(D-X)) "
                        "[lambda-series through order " +
                            std::to_string(order) + "]",
                        "displaced-x");
  return {d_report, x_report};
}

IdentityReport exp_dminusx_closed_form_check(const RPolyM& seed, int s, int order) {
  require_homogeneous(seed, s);
  const int n = seed.vars();
  OpPtr smoother = op::exp_nilpotent(op::scale(make_rational(-1, 4), op::laplacian()));
  RPolyM p_delta = apply(*smoother, seed);
  LPoly p_delta_l =
      p_delta.map_coeffs<LambdaPoly>([](const Rational& q) { return LambdaPoly::constant(q); });

  // Direct truncated exponential.
  LPoly direct = displaced_exp_series(p_delta_l, n, order);

  // Hyperbolic expansion: cosh and (1/rho) sinh have rational lambda-series
  // because only even powers of rho survive:
  //   cosh(mu)        = sum_k lambda^{2k} r^k / (n^{2k} (2k)!)
  //   (1/rho)sinh(mu) = sum_k lambda^{2k+1} r^k / (n^{2k+1} (2k+1)!).
  Rational r = Rational(2 * s + n);
  LambdaPoly cosh_series, sinh_over_rho_series;
  {
    LambdaPoly lam2 = LambdaPoly::lambda() * LambdaPoly::lambda();
    LambdaPoly even_power = LambdaPoly::one();
    Rational coeff(1);
    for (int k = 0; 2 * k <= order; ++k) {
      if (k > 0) {
        even_power = even_power * lam2;
        coeff *= r / Rational((2 * k - 1) * 2 * k * n * n);
      }
      cosh_series += even_power.scaled(coeff);
      if (2 * k + 1 <= order) {
        Rational odd_coeff = coeff / Rational((2 * k + 1) * n);
        sinh_over_rho_series += (even_power * LambdaPoly::lambda()).scaled(odd_coeff);
      }
    }
  }
  RPolyM bracket = apply(*op::sum({op::dirac(), op::negate(op::x_vector())}), p_delta);
  LPoly closed(seed.vars(), seed.signature());
  closed += p_delta.map_coeffs<LambdaPoly>(
      [&](const Rational& q) { return cosh_series.scaled(q); });
  closed += bracket.map_coeffs<LambdaPoly>(
      [&](const Rational& q) { return sinh_over_rho_series.scaled(q); });

  LPoly diff = truncate_lambda(direct - closed, static_cast<unsigned>(order));
  IdentityReport report{
      "exp_trunc(c(D-X)) on smoothed seed vs hyperbolic closed form [order " +
          std::to_string(order) + ", s=" + std::to_string(s) + "]",
      "exp-closed-form-s" + std::to_string(s), n, seed.degree(), diff.is_zero(), std::nullopt};
  if (!report.zero) report.witness = Witness{{}, 0, diff.str()};
  return report;
}

std::vector<IdentityReport> landau_suite(int n, int bound) {
  std::vector<IdentityReport> out;
  OpPtr exp_plus = exp_lambda_dirac(n, false);
  OpPtr exp_minus = exp_lambda_dirac(n, true);

  auto conj = [&](const OpPtr& inner) {
    return op::compose({exp_plus, inner, exp_minus});
  };

  // (a) conjugates of the ladder pair.
  out.push_back(check_identity_zero(
      *op::sum({conj(op::ladder_raise()), op::negate(op::shifted_ladder_raise(n))}), n, bound,
      "exp(cD)*(X-D)*exp(-cD) - (X - (D + lambda) + (2*lambda/n)*Gamma)", "conj-raise"));
  out.push_back(check_identity_zero(
      *op::sum({conj(op::ladder_lower()), op::negate(op::shifted_ladder_lower(n))}), n, bound,
      "exp(cD)*(X+D)*exp(-cD) - (X + (D - lambda) + (2*lambda/n)*Gamma)", "conj-lower"));

  // (b) the nine shifted orthosymplectic relations.
  OpPtr A = op::shifted_x(n);
  OpPtr p_minus = op::scale(make_rational(-1, 4), op::laplacian());
  OpPtr p_plus = op::scale(make_rational(1, 2), op::power(A, 2));
  OpPtr q_op = op::sum({op::scale(make_rational(1, 2), op::euler()),
                        op::scale(make_rational(n, 4), op::identity()),
                        op::scale(LambdaPoly::lambda().scaled(make_rational(1, 2 * n)),
                                  op::dirac())});
  OpPtr d_op = op::dirac();
  auto half = [&](OpPtr x) { return op::scale(make_rational(1, 2), std::move(x)); };
  const std::vector<std::pair<std::string, OpPtr>> shifted = {
      {"shifted-osp-r+p+", op::commutator(A, p_plus)},
      {"shifted-osp-r+p-", op::sum({op::commutator(A, p_minus), op::negate(half(d_op))})},
      {"shifted-osp-q-r+", op::sum({op::commutator(q_op, A), op::negate(half(A))})},
      {"shifted-osp-r-p+", op::sum({op::commutator(d_op, p_plus), A})},
      {"shifted-osp-r-p-", op::commutator(d_op, p_minus)},
      {"shifted-osp-q-r-", op::sum({op::commutator(q_op, d_op), half(d_op)})},
      {"shifted-osp-p-p+", op::sum({op::commutator(p_minus, p_plus), op::negate(q_op)})},
      {"shifted-osp-q-p+", op::sum({op::commutator(q_op, p_plus), op::negate(p_plus)})},
      {"shifted-osp-q-p-", op::sum({op::commutator(q_op, p_minus), p_minus})},
  };
  for (const auto& [tag, expr] : shifted)
    out.push_back(check_identity_zero(*expr, n, bound, "", tag));

  // (c) anticommutator splitting against both X-sign conventions of the
  // Landau operator.
  OpPtr splitting = op::anticommutator(op::shifted_ladder_raise(n), op::shifted_ladder_lower(n));
  out.push_back(check_identity_zero(
      *op::sum({splitting, op::scale(Rational(4), op::hamiltonian_h_lambda(n))}), n, bound,
      "{L+_lambda, L-_lambda} + 4*H_lambda", "splitting"));
  {
    // H with the X gauge term sign flipped:
    // (1/2)((D-l)(D+l) - X^2 - (2l/n)(-X - 2 l (I - Gamma/n) Gamma)).
    OpPtr lam = op::scalar(LambdaPoly::lambda());
    OpPtr dd = op::compose({op::sum({op::dirac(), op::negate(lam)}),
                            op::sum({op::dirac(), lam})});
    OpPtr bracket_flipped =
        op::sum({op::negate(op::x_vector()),
                 op::negate(op::compose(
                     {op::scale(LambdaPoly::lambda().scaled(Rational(2)),
                                op::sum({op::identity(),
                                         op::scale(make_rational(-1, n), op::gamma())})),
                      op::gamma()}))});
    OpPtr h_flipped = op::scale(
        make_rational(1, 2),
        op::sum({dd, op::negate(op::power(op::x_vector(), 2)),
                 op::negate(op::scale(LambdaPoly::lambda().scaled(make_rational(2, n)),
                                      bracket_flipped))}));
    out.push_back(check_identity_zero(
        *op::sum({splitting, op::scale(Rational(4), h_flipped)}), n, bound,
        "{L+_lambda, L-_lambda} + 4*H_lambda with the X gauge term sign flipped",
        "splitting-flipped-x"));
  }

  // (d) conjugation of H0.
  out.push_back(check_identity_zero(
      *op::sum({conj(op::hamiltonian_h0()), op::negate(op::hamiltonian_h_lambda(n))}), n,
      bound, "exp(cD)*H0*exp(-cD) - H_lambda", "conj-h0"));

  // (e) the two written forms of the Landau operator agree.
  out.push_back(check_identity_zero(
      *op::sum({op::hamiltonian_h_lambda(n), op::negate(op::hamiltonian_h_lambda_gauge_form(n))}),
      n, bound, "ladder-splitting form of H_lambda vs gauge-term form", "gauge-forms-equal"));

  return out;
}

double numeric_pde_residual(const MaxwellSolution& sol, const std::vector<double>& lambdas,
                            int num_points, unsigned rng_seed) {
  CSPoly residual = pde_residual(sol);
  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  double worst = 0.0;
  for (double lambda : lambdas) {
    CliffordPolynomial<double> specialized = residual.map_coeffs<double>(
        [&](const CSScalar& c) { return c.eval(lambda, sol.n); });
    for (int p = 0; p < num_points; ++p) {
      std::vector<double> point(sol.n);
      for (auto& v : point) v = coord(rng);
      auto value = specialized.evaluate(point);
      for (const auto& [mask, c] : value.terms()) worst = std::max(worst, std::abs(c));
    }
  }
  return worst;
}

}  // namespace cliffop
