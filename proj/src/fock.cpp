#include "cliffop/fock.hpp"

namespace cliffop {

Rational gaussian_moment(const MultiIndex& alpha) {
  Rational acc(1);
  for (unsigned a : alpha) {
    if (a % 2 != 0) return Rational(0);
    acc *= gaussian_moment_1d(a);
  }
  return acc;
}

RMulti fischer_inner(const RPoly& f, const RPoly& g) {
  if (f.vars() != g.vars() || !(f.signature() == g.signature()))
    throw Error("pairing of incompatible polynomials");
  RMulti acc(f.signature());
  for (const auto& [af, cf] : f.terms()) {
    RMulti cf_dag = cf.conjugation();
    for (const auto& [ag, cg] : g.terms()) {
      MultiIndex sum(af.size());
      for (size_t i = 0; i < sum.size(); ++i) sum[i] = af[i] + ag[i];
      Rational moment = gaussian_moment(sum);
      if (cliffop::is_zero(moment)) continue;
      acc += (cf_dag * cg).scaled_rational(moment);
    }
  }
  return acc;
}

RMulti fischer_inner(const RWeighted& f, const RWeighted& g) {
  if (f.envelope + g.envelope != Rational(-1))
    throw Error("weighted pairing needs envelopes summing to -1");
  return fischer_inner(f.poly, g.poly);
}

Rational fischer_inner_scalar(const RWeighted& f, const RWeighted& g) {
  return fischer_inner(f, g).scalar_part();
}

namespace {

const Rational kHalfNegative = make_rational(-1, 2);

void require_monogenic_homogeneous(const RPoly& seed, int& degree_out) {
  if (seed.is_zero()) throw Error("seed must be nonzero");
  if (!seed.is_homogeneous(&degree_out)) throw Error("seed must be homogeneous");
  if (!apply(*op::dirac(), seed).is_zero()) throw Error("seed must be monogenic");
}

// Scalar action of T_k on a homogeneous monogenic of degree s:
//   T_{2j}   = ((n-1)/(4j) + 1) I
//   T_{2j+1} = ((n-1)/4 + j + 1/2) I_{n/2 + j},
// and I_{n/2+j} acts on degree s as 1/(s + n/2 + j).
Rational t_scalar(int k, int n, int s) {
  if (k % 2 == 0) {
    int j = k / 2;
    return make_rational(n - 1, 4 * j) + 1;
  }
  int j = (k - 1) / 2;
  Rational factor = make_rational(n - 1, 4) + j + make_rational(1, 2);
  Rational is_eigen = Rational(1) / (Rational(s) + make_rational(n, 2) + j);
  return factor * is_eigen;
}

// Exact scalar c with g = c * h, or throws if g is not proportional to h.
Rational exact_ratio(const RWeighted& g, const RWeighted& h) {
  if (g.poly.is_zero()) return Rational(0);
  if (h.poly.is_zero()) throw Error("proportionality against zero");
  const auto& [alpha, coeff] = *h.poly.terms().begin();
  const auto& mask = coeff.terms().begin()->first;
  Rational c = g.poly.coefficient(alpha).coefficient(mask) / coeff.terms().begin()->second;
  if (!(g == h.scaled_rational(c))) throw Error("functions are not proportional");
  return c;
}

}  // namespace

std::vector<HermiteState> hermite_sequence(const RPoly& seed, int k_max) {
  int s = 0;
  require_monogenic_homogeneous(seed, s);
  const int n = seed.vars();
  const OpPtr raise = op::ladder_raise();
  const OpPtr lower = op::ladder_lower();

  std::vector<HermiteState> states;
  RWeighted current(kHalfNegative, seed);
  Rational u(1);
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) {
      current = apply(*raise, current);
      u *= t_scalar(k, n, s);
    }
    HermiteState state{k, current, fischer_inner_scalar(current, current), u, Rational(0)};
    if (k > 0) {
      RWeighted lowered = apply(*lower, current);
      state.lowering_coeff = exact_ratio(lowered, states.back().raw);
    }
    states.push_back(std::move(state));
  }
  return states;
}

RPoly hermite_polynomial(const HermiteState& state) { return state.raw.poly; }

std::vector<WeylState> weyl_states(int n, int alpha_max) {
  Signature sig(0, n);
  std::vector<WeylState> out;
  RWeighted ground(kHalfNegative, RPoly::constant(n, sig, Rational(1)));
  std::vector<OpPtr> raise;
  for (int j = 1; j <= n; ++j) raise.push_back(op::weyl_ladder(j, +1));

  std::function<void(MultiIndex&, int, const RWeighted&)> rec =
      [&](MultiIndex& alpha, int axis, const RWeighted& fn) {
        if (axis == n) {
          Rational norm = fischer_inner_scalar(fn, fn);
          out.push_back(WeylState{alpha, fn, norm});
          return;
        }
        RWeighted current = fn;
        for (unsigned a = 0;; ++a) {
          alpha[axis] = a;
          if (multiindex_degree(alpha) > static_cast<unsigned>(alpha_max)) break;
          rec(alpha, axis + 1, current);
          current = apply(*raise[axis], current);
        }
        alpha[axis] = 0;
      };
  MultiIndex alpha(n, 0);
  rec(alpha, 0, ground);
  return out;
}

HarmonicSplit fischer_split_harmonic(const RPoly& p) {
  int k = 0;
  if (!p.is_homogeneous(&k)) throw Error("harmonic split needs a homogeneous input");
  const int n = p.vars();
  if (!apply(*op::laplacian(), p).is_zero())
    throw Error("harmonic split needs a harmonic input");
  HarmonicSplit split{p, RPoly::zero(p.vars(), p.signature()),
                      RPoly::zero(p.vars(), p.signature())};
  if (2 * k + n - 2 == 0) return split;  // k = 0, n = 2: p is already monogenic
  Rational denom = Rational(1) / Rational(2 * k + n - 2);
  RPoly dp = apply(*op::dirac(), p);
  RPoly xdp = apply(*op::x_vector(), dp);
  split.monogenic = p + xdp.scaled_rational(denom);
  split.x_times_lower = xdp.scaled_rational(-denom);
  if (!split.x_times_lower.is_zero()) {
    // x * M = v  =>  M = -x v / |x|^2.
    RPoly xv = apply(*op::x_vector(), split.x_times_lower);
    split.lower = divide_by_radius_squared(-xv);
  }
  return split;
}

HarmonicSplit fischer_split_harmonic_is(const RPoly& p) {
  int k = 0;
  if (!p.is_homogeneous(&k)) throw Error("harmonic split needs a homogeneous input");
  const int n = p.vars();
  if (!apply(*op::laplacian(), p).is_zero())
    throw Error("harmonic split needs a harmonic input");
  HarmonicSplit split{p, RPoly::zero(p.vars(), p.signature()),
                      RPoly::zero(p.vars(), p.signature())};
  if (k == 0) return split;
  RPoly dp = apply(*op::dirac(), p);
  RPoly is_dp = apply(*op::integral_is(make_rational(n, 2)), dp);
  RPoly x_is_dp = apply(*op::x_vector(), is_dp).scaled_rational(make_rational(1, 2));
  split.monogenic = p + x_is_dp;
  split.x_times_lower = -x_is_dp;
  if (!split.x_times_lower.is_zero()) {
    RPoly xv = apply(*op::x_vector(), split.x_times_lower);
    split.lower = divide_by_radius_squared(-xv);
  }
  return split;
}

std::vector<std::pair<int, RPoly>> harmonic_decompose(const RPoly& p) {
  int k = 0;
  if (!p.is_homogeneous(&k)) throw Error("harmonic decomposition needs a homogeneous input");
  const int n = p.vars();
  // p = sum_{j<=k/2} r^{2j} h_{k-2j}. Using
  //   Delta(r^{2j} h_m) = 2j (2m + n + 2j - 2) r^{2j-2} h_m
  // repeated Laplacians give a triangular system solved top-down.
  std::vector<RPoly> powers;  // Delta^i p
  powers.push_back(p);
  while (!powers.back().is_zero()) powers.push_back(apply(*op::laplacian(), powers.back()));

  int max_j = k / 2;
  std::vector<RPoly> h(max_j + 1, RPoly::zero(p.vars(), p.signature()));
  // Solve for h_{k-2j} from j = max_j down: Delta^j p = sum_{i>=j} c_{i,j} r^{2(i-j)} h_{k-2i}
  // where c_{i,j} = prod_{t=0}^{j-1} 2(i-t)(2(k-2i) + n + 2(i-t) - 2).
  auto coeff = [&](int i, int j) {
    Rational c(1);
    int m = k - 2 * i;
    for (int t = 0; t < j; ++t) {
      int jj = i - t;
      c *= Rational(2 * jj) * Rational(2 * m + n + 2 * jj - 2);
    }
    return c;
  };
  RPoly r2 = RPoly::radius_squared(p.vars(), p.signature());
  for (int j = max_j; j >= 0; --j) {
    RPoly rhs = static_cast<size_t>(j) < powers.size()
                    ? powers[j]
                    : RPoly::zero(p.vars(), p.signature());
    for (int i = j + 1; i <= max_j; ++i) {
      if (h[i].is_zero()) continue;
      RPoly term = h[i];
      for (int t = 0; t < i - j; ++t) term = term * r2;
      rhs -= term.scaled_rational(coeff(i, j));
    }
    Rational c = coeff(j, j);
    h[j] = rhs.scaled_rational(Rational(1) / c);
  }
  std::vector<std::pair<int, RPoly>> out;
  for (int j = 0; j <= max_j; ++j)
    if (!h[j].is_zero()) out.emplace_back(j, h[j]);
  return out;
}

std::vector<RPoly> fischer_tower(const RPoly& p) {
  int k = 0;
  if (!p.is_homogeneous(&k)) throw Error("tower needs a homogeneous input");
  std::vector<RPoly> tower(k + 1, RPoly::zero(p.vars(), p.signature()));
  // x^{2j} = (-1)^j |x|^{2j}, so p = sum_j (-1)^j x^{2j} h_{k-2j} and each
  // harmonic piece splits as h = M + x M'.
  for (auto& [j, hpart] : harmonic_decompose(p)) {
    HarmonicSplit split = fischer_split_harmonic(hpart);
    Rational sign = j % 2 == 0 ? Rational(1) : Rational(-1);
    int deg = k - 2 * j;
    tower[2 * j] += split.monogenic.scaled_rational(sign);        // degree k - 2j
    if (deg >= 1) tower[2 * j + 1] += split.lower.scaled_rational(sign);
  }
  // tower[s] currently holds the coefficient of x^s with degree k - s.
  return tower;
}

RPoly monogenic_projection(const RPoly& p) {
  // Routes through the homogeneous parts; each part contributes the degree-k
  // entry of its tower.
  RPoly out(p.vars(), p.signature());
  for (auto& [k, part] : p.homogeneous_decompose()) {
    auto tower = fischer_tower(part);
    if (!tower.empty()) out += tower[0];
  }
  return out;
}

namespace {

// Left multiplication by conj(e_{n+1}) = -e_{n+1} composed with the
// n-variable Dirac operator, inside R_{0,n+1}.
RPoly ck_step(const RPoly& f, int n) {
  RPoly df(f.vars(), f.signature());
  for (int j = 1; j <= n; ++j) {
    df += f.partial_derivative(j).mul_multivector(
        Multivector<Rational>::basis_vector(f.signature(), j), RPoly::Side::Left);
  }
  return df.mul_multivector(Multivector<Rational>::basis_vector(f.signature(), n + 1),
                            RPoly::Side::Left)
      .scaled_rational(Rational(-1));
}

}  // namespace

RPoly ck_extension(const RPoly& f) {
  const int n = f.vars();
  Signature ext_sig(0, n + 1);
  RPoly extended(n + 1, ext_sig);
  for (const auto& [alpha, c] : f.terms()) {
    MultiIndex widened = alpha;
    widened.push_back(0);
    extended.add_term(widened, embed_signature(c, ext_sig));
  }
  // exp(-x_{n+1} conj(e_{n+1}) D) f: terminating since D lowers degree.
  RPoly out = extended;
  RPoly term = extended;
  RPoly x_next = RPoly::variable(n + 1, ext_sig, n + 1);
  for (int k = 1; !term.is_zero(); ++k) {
    term = (x_next * ck_step(term, n)).scaled_rational(make_rational(-1, k));
    out += term;
  }
  return out;
}

RPoly ck_residual(const RPoly& extended) {
  // (d_{n+1} + conj(e_{n+1}) D) F, where ck_step applies conj(e_{n+1}) D.
  const int n = extended.vars() - 1;
  return extended.partial_derivative(n + 1) + ck_step(extended, n);
}

CliffordPolynomial<LambdaPoly> hermite_generating_sum(const RPoly& seed, int k_max) {
  const int n = seed.vars();
  auto states = hermite_sequence(seed, k_max);
  CliffordPolynomial<LambdaPoly> acc(n, seed.signature());
  LambdaPoly lambda_power = LambdaPoly::one();
  Rational factor(1);
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) {
      lambda_power = lambda_power * LambdaPoly::lambda();
      factor /= Rational(n) * Rational(k);
    }
    auto term = states[k].raw.poly.map_coeffs<LambdaPoly>(
        [&](const Rational& q) { return lambda_power.scaled(q * factor); });
    acc += term;
  }
  return acc;
}

}  // namespace cliffop
