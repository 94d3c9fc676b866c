#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cliffop/multivector.hpp"
#include "cliffop/polynomial.hpp"

using namespace cliffop;

namespace {

using MV = Multivector<Rational>;
using Poly = CliffordPolynomial<Rational>;

// Independent sign oracle: expand both blades into generator index lists,
// concatenate, bubble-sort counting swaps, cancel adjacent equal generators
// with the metric square.
int naive_blade_sign(BladeMask a, BladeMask b, const Signature& sig, BladeMask& out_mask) {
  std::vector<int> gens;
  for (int j = 1; j <= sig.n(); ++j)
    if (a & (1u << (j - 1))) gens.push_back(j);
  for (int j = 1; j <= sig.n(); ++j)
    if (b & (1u << (j - 1))) gens.push_back(j);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < gens.size(); ++i) {
      if (gens[i] > gens[i + 1]) {
        std::swap(gens[i], gens[i + 1]);
        sign = -sign;
        changed = true;
      } else if (gens[i] == gens[i + 1]) {
        sign *= sig.square_of(gens[i]);
        gens.erase(gens.begin() + i, gens.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  out_mask = 0;
  for (int g : gens) out_mask |= 1u << (g - 1);
  return sign;
}

MV random_multivector(std::mt19937_64& rng, const Signature& sig, int max_terms = 6) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<BladeMask> blade(0, (1u << sig.n()) - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  MV m(sig);
  int k = count(rng);
  for (int i = 0; i < k; ++i)
    m += MV::blade(sig, blade(rng), make_rational(num(rng), den(rng)));
  return m;
}

MV e(const Signature& sig, int j) { return MV::basis_vector(sig, j); }

}  // namespace

TEST_CASE("blade product sign matches the permutation-expansion oracle") {
  for (Signature sig : {Signature(0, 3), Signature(0, 5), Signature(1, 2), Signature(2, 1)}) {
    BladeMask total = 1u << sig.n();
    for (BladeMask a = 0; a < total; ++a) {
      for (BladeMask b = 0; b < total; ++b) {
        BladeMask oracle_mask;
        int oracle_sign = naive_blade_sign(a, b, sig, oracle_mask);
        CHECK(oracle_mask == (a ^ b));
        CHECK(oracle_sign == blade_product_sign(a, b, sig));
      }
    }
  }
}

TEST_CASE("defining relations in R_{0,n}") {
  Signature sig(0, 3);
  CHECK(e(sig, 1) * e(sig, 1) == MV::scalar(sig, Rational(-1)));
  CHECK(e(sig, 1) * e(sig, 2) == MV::blade(sig, 0b11, Rational(1)));
  CHECK(e(sig, 2) * e(sig, 1) == MV::blade(sig, 0b11, Rational(-1)));

  // e_j e_k + e_k e_j = 2 B(e_j, e_k) for every pair.
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      MV anti = e(sig, j) * e(sig, k) + e(sig, k) * e(sig, j);
      Rational expected = j == k ? Rational(-2) : Rational(0);
      CHECK(anti == MV::scalar(sig, expected));
    }
}

TEST_CASE("vector squares to minus its length") {
  Signature sig(0, 2);
  MV x = e(sig, 1).scaled_rational(Rational(3)) + e(sig, 2).scaled_rational(Rational(4));
  CHECK(x * x == MV::scalar(sig, Rational(-25)));
}

TEST_CASE("grade projection") {
  Signature sig(0, 3);
  MV a = MV::scalar(sig, Rational(1)) + MV::blade(sig, 0b11, Rational(1));
  CHECK(a.grade_project(2) == MV::blade(sig, 0b11, Rational(1)));
  CHECK(e(sig, 1).grade_project(0).is_zero());

  // Scalar part of a product of two vectors is the symmetric half.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    MV x(sig), y(sig);
    for (int j = 1; j <= 3; ++j) {
      std::uniform_int_distribution<int> d(-5, 5);
      x += e(sig, j).scaled_rational(Rational(d(rng)));
      y += e(sig, j).scaled_rational(Rational(d(rng)));
    }
    MV sym = (x * y + y * x).scaled_rational(Rational(1, 2));
    CHECK((x * y).grade_project(0) == sym);
  }
}

TEST_CASE("grade completeness on random elements") {
  std::mt19937_64 rng(11);
  for (Signature sig : {Signature(0, 2), Signature(0, 4), Signature(1, 2)}) {
    for (int trial = 0; trial < 50; ++trial) {
      MV a = random_multivector(rng, sig);
      MV sum(sig);
      for (int r = 0; r <= sig.n(); ++r) sum += a.grade_project(r);
      CHECK(sum == a);
    }
  }
}

TEST_CASE("involutions") {
  Signature sig(0, 3);
  MV e12 = e(sig, 1) * e(sig, 2);
  CHECK(e(sig, 1).conjugation() == -e(sig, 1));
  CHECK(e12.reversion() == -e12);
  CHECK(e12.main_involution() == e12);
  CHECK(e12.conjugation() == -e12);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    MV a = random_multivector(rng, sig);
    MV b = random_multivector(rng, sig);
    CHECK((a * b).reversion() == b.reversion() * a.reversion());
    CHECK((a * b).main_involution() == a.main_involution() * b.main_involution());
    CHECK((a * b).conjugation() == b.conjugation() * a.conjugation());
    CHECK(a.conjugation() == a.main_involution().reversion());
    CHECK(a.conjugation() == a.reversion().main_involution());
  }
}

TEST_CASE("clifford inner product") {
  Signature sig(0, 3);
  CHECK(clifford_inner(e(sig, 1), e(sig, 1)) == Rational(1));
  CHECK(clifford_inner(e(sig, 1), e(sig, 2)) == Rational(0));
  MV a = MV::scalar(sig, Rational(1)) + MV::blade(sig, 0b11, Rational(1));
  CHECK(clifford_inner(a, a) == Rational(2));

  // Positive definite in R_{0,n}.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    MV m = random_multivector(rng, sig);
    Rational norm2 = clifford_inner(m, m);
    if (!m.is_zero()) CHECK(sgn(norm2) > 0);
  }
}

TEST_CASE("vector inverse") {
  Signature sig(0, 3);
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    MV x(sig);
    for (int j = 1; j <= 3; ++j) x += e(sig, j).scaled_rational(Rational(d(rng)));
    Rational x2 = (x * x).scalar_part();
    if (cliffop::is_zero(x2)) continue;
    MV inv = x.scaled_rational(Rational(1) / x2);
    CHECK(x * inv == MV::scalar(sig, Rational(1)));
  }
}

TEST_CASE("wedge and dot split") {
  Signature sig(0, 3);
  auto [d11, w11] = wedge_dot(e(sig, 1), e(sig, 1));
  CHECK(d11 == MV::scalar(sig, Rational(-1)));
  CHECK(w11.is_zero());

  auto [d12, w12] = wedge_dot(e(sig, 1), e(sig, 2));
  CHECK(d12.is_zero());
  CHECK(w12 == MV::blade(sig, 0b11, Rational(1)));

  MV e12 = e(sig, 1) * e(sig, 2);
  auto [dbl, wbl] = wedge_dot(e(sig, 1), e12);
  CHECK(dbl == -e(sig, 2));
  CHECK(wbl.is_zero());

  // Oracle: x . a^r = (x a^r - (-1)^r a^r x)/2, and dot+wedge = product.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    MV x(sig);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int j = 1; j <= 3; ++j) x += e(sig, j).scaled_rational(Rational(d(rng)));
    MV a = random_multivector(rng, sig);
    auto [dot, wedge] = wedge_dot(x, a);
    CHECK(dot + wedge == x * a);
    MV dot_oracle(sig), wedge_oracle(sig);
    for (int r = 0; r <= sig.n(); ++r) {
      MV ar = a.grade_project(r);
      if (ar.is_zero()) continue;
      Rational half(1, 2);
      int parity = r % 2 == 0 ? 1 : -1;
      MV xa = x * ar;
      MV ax = (ar * x).scaled_rational(Rational(parity));
      dot_oracle += (xa - ax).scaled_rational(half);
      wedge_oracle += (xa + ax).scaled_rational(half);
    }
    CHECK(dot == dot_oracle);
    CHECK(wedge == wedge_oracle);
  }

  CHECK_THROWS_AS(wedge_dot(e12, e(sig, 1)), Error);
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(29);
  for (Signature sig : {Signature(0, 2), Signature(0, 3), Signature(1, 3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      MV a = random_multivector(rng, sig);
      MV b = random_multivector(rng, sig);
      MV c = random_multivector(rng, sig);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("signature mismatch is rejected") {
  MV a = MV::scalar(Signature(0, 2), Rational(1));
  MV b = MV::scalar(Signature(0, 3), Rational(1));
  CHECK_THROWS_AS(a * b, Error);
  CHECK_THROWS_AS(a + b, Error);
}

// ---- polynomials -----------------------------------------------------------

TEST_CASE("polynomial ring operations") {
  Signature sig(0, 2);
  Poly x1 = Poly::variable(2, sig, 1);
  CHECK(x1 + x1 == x1.scaled_rational(Rational(2)));

  Poly x1e1 = x1.mul_multivector(e(sig, 1), Poly::Side::Left);
  CHECK(x1e1.coefficient({1, 0}) == MV::blade(sig, 0b1, Rational(1)));

  // Left vs right multiplication by e2 of x1*e2 both give -x1.
  Poly x1e2 = x1.mul_multivector(e(sig, 2), Poly::Side::Left);
  CHECK(x1e2.mul_multivector(e(sig, 2), Poly::Side::Left) == -x1);
  CHECK(x1e2.mul_multivector(e(sig, 2), Poly::Side::Right) == -x1);
}

TEST_CASE("partial derivatives") {
  Signature sig(0, 2);
  Poly x1 = Poly::variable(2, sig, 1);
  Poly x1sq_e1 = (x1 * x1).mul_multivector(e(sig, 1), Poly::Side::Left);
  CHECK(x1sq_e1.partial_derivative(1) ==
        x1.mul_multivector(e(sig, 1), Poly::Side::Left).scaled_rational(Rational(2)));
  CHECK(x1.partial_derivative(2).is_zero());
  CHECK((x1 * x1).partial_derivative(1) == x1.scaled_rational(Rational(2)));
}

TEST_CASE("Heisenberg-Weyl relations on monomials") {
  Signature sig(0, 3);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<unsigned> exp(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    MultiIndex alpha = {exp(rng), exp(rng), exp(rng)};
    Poly p = Poly::monomial(3, sig, alpha, MV::scalar(sig, Rational(1)));
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        CHECK(p.partial_derivative(j).partial_derivative(k) ==
              p.partial_derivative(k).partial_derivative(j));
        Poly xk = Poly::variable(3, sig, k);
        Poly lhs = (xk * p).partial_derivative(j) - xk * p.partial_derivative(j);
        CHECK(lhs == (j == k ? p : Poly::zero(3, sig)));
      }
    }
  }
}

TEST_CASE("homogeneous decomposition") {
  Signature sig(0, 2);
  Poly x1 = Poly::variable(2, sig, 1);
  Poly x2 = Poly::variable(2, sig, 2);
  Poly p = Poly::constant(2, sig, Rational(1)) + x1 + x1 * x2;
  auto parts = p.homogeneous_decompose();
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].first == 0);
  CHECK(parts[1].first == 1);
  CHECK(parts[1].second == x1);
  CHECK(parts[2].first == 2);
  CHECK(parts[2].second == x1 * x2);

  CHECK(Poly::zero(2, sig).homogeneous_decompose().empty());

  // Euler operator oracle: each degree-k part is an E-eigenvector.
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<unsigned> exp(0, 2);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    Poly q(2, sig);
    for (int t = 0; t < 5; ++t) {
      MultiIndex alpha = {exp(rng), exp(rng)};
      q += Poly::monomial(2, sig, alpha, MV::scalar(sig, Rational(coeff(rng))));
    }
    Poly rebuilt(2, sig);
    for (auto& [k, part] : q.homogeneous_decompose()) {
      Poly euler(2, sig);
      for (int j = 1; j <= 2; ++j)
        euler += Poly::variable(2, sig, j) * part.partial_derivative(j);
      CHECK(euler == part.scaled_rational(Rational(k)));
      rebuilt += part;
    }
    CHECK(rebuilt == q);
  }
}

TEST_CASE("weighted function evaluation") {
  Signature sig(0, 2);
  WeightedFunction<Rational> gauss(make_rational(-1, 2), Poly::constant(2, sig, Rational(1)));
  auto at_origin = gauss.evaluate({0.0, 0.0});
  CHECK(at_origin.scalar_part() == doctest::Approx(1.0));

  Poly x1 = Poly::variable(2, sig, 1);
  CHECK(x1.evaluate({2.0, 0.0}).scalar_part() == doctest::Approx(2.0));

  WeightedFunction<Rational> gx1(make_rational(-1, 2), x1);
  CHECK(gx1.evaluate({1.0, 0.0}).scalar_part() == doctest::Approx(std::exp(-0.5)));
}

TEST_CASE("weighted product matches pointwise evaluation") {
  Signature sig(0, 2);
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_real_distribution<double> pt(-1.5, 1.5);
  for (int trial = 0; trial < 20; ++trial) {
    Poly p(2, sig), q(2, sig);
    for (int t = 0; t < 3; ++t) {
      p += Poly::monomial(2, sig, {static_cast<unsigned>(trial % 3), 1},
                          MV::scalar(sig, Rational(coeff(rng))));
      q += Poly::monomial(2, sig, {1, static_cast<unsigned>(t)},
                          MV::blade(sig, t % 2 ? 0b1 : 0, Rational(coeff(rng))));
    }
    WeightedFunction<Rational> f(make_rational(-1, 2), p);
    WeightedFunction<Rational> g(make_rational(-1, 2), q);
    WeightedFunction<Rational> prod = f * g;
    CHECK(prod.envelope == Rational(-1));
    std::vector<double> point = {pt(rng), pt(rng)};
    auto lhs = prod.evaluate(point);
    auto rhs = f.evaluate(point) * g.evaluate(point);
    for (const auto& [mask, c] : lhs.terms())
      CHECK(c == doctest::Approx(rhs.coefficient(mask)).epsilon(1e-12));
    for (const auto& [mask, c] : rhs.terms())
      CHECK(c == doctest::Approx(lhs.coefficient(mask)).epsilon(1e-12));
  }
}

TEST_CASE("exact division by |x|^2") {
  Signature sig(0, 2);
  Poly r2 = Poly::radius_squared(2, sig);
  Poly x1 = Poly::variable(2, sig, 1);
  Poly x2 = Poly::variable(2, sig, 2);

  Poly m = x1 * x1 - x2 * x2;  // cancelling cross term in r2*m
  CHECK(divide_by_radius_squared(r2 * m) == m);

  Poly vec = Poly::vector_x(2, sig);
  CHECK(divide_by_radius_squared(r2 * vec) == vec);

  CHECK_THROWS_AS(divide_by_radius_squared(x1), Error);
}
