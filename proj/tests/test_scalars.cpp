#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cliffop/cs_scalar.hpp"
#include "cliffop/json_io.hpp"
#include "cliffop/lambda_poly.hpp"

using namespace cliffop;

TEST_CASE("rational helpers") {
  CHECK(make_rational(4, 2) == Rational(2));
  CHECK(rational_to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("7/3") == make_rational(7, 3));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("4/6") == make_rational(2, 3));  // canonicalized on input
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("a/b"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(make_rational(1, 0), Error);

  CHECK(gaussian_moment_1d(0) == Rational(1));
  CHECK(gaussian_moment_1d(2) == make_rational(1, 2));
  CHECK(gaussian_moment_1d(4) == make_rational(3, 4));
  CHECK(gaussian_moment_1d(3) == Rational(0));
  CHECK(factorial(5) == Rational(120));
}

TEST_CASE("lambda polynomials") {
  LambdaPoly l = LambdaPoly::lambda();
  LambdaPoly p = l * l + l.scaled(Rational(2)) + LambdaPoly::one();  // (1 + lambda)^2
  CHECK(p == (l + LambdaPoly::one()) * (l + LambdaPoly::one()));
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(1) == Rational(2));
  CHECK(p.eval(Rational(3)) == Rational(16));
  CHECK(p.eval(0.5) == doctest::Approx(2.25));
  CHECK(p.truncated(1) == l.scaled(Rational(2)) + LambdaPoly::one());
  CHECK((p - p).is_zero());
  CHECK(p.str() == "1+2*lambda+lambda^2");

  Rational value;
  CHECK(!p.constant_value(value));
  CHECK(LambdaPoly::constant(make_rational(5, 2)).constant_value(value));
  CHECK(value == make_rational(5, 2));
}

TEST_CASE("rho arithmetic reduces against the context") {
  Rational r(3);  // rho^2 -> 3
  CSScalar rho = CSScalar::rho(r);
  CSScalar rho_sq = rho * rho;
  CHECK(rho_sq == CSScalar(Rational(3)));

  CSScalar inv = CSScalar::rho_inverse(r);
  CHECK(rho * inv == CSScalar::one());

  // Mixed contexts are rejected; unset contexts merge.
  CSScalar other = CSScalar::rho(Rational(5));
  CHECK_THROWS_AS(rho * other, Error);
  CHECK(rho * CSScalar(Rational(2)) == rho + rho);
}

TEST_CASE("hyperbolic symbols stay linear") {
  Rational r(2);
  CSScalar c = CSScalar::cosh_symbol(r);
  CSScalar s = CSScalar::sinh_symbol(r);
  CSScalar lin = c + s * CSScalar(Rational(2));
  CHECK(lin.part_cosh().a == LambdaPoly::one());
  CHECK(lin.part_sinh().a == LambdaPoly::constant(Rational(2)));
  CHECK_THROWS_AS(c * s, Error);
  CHECK_THROWS_AS(c * c, Error);
  // Scalars and rho-factors multiply onto either side.
  CSScalar srho = s * CSScalar::rho(r);
  CHECK(srho.part_sinh().b == LambdaPoly::one());
}

TEST_CASE("numeric specialization") {
  // (C + (1/rho) S) at lambda, n: cosh(mu) + sinh(mu)/rho with mu = lambda rho / n.
  Rational r(2);
  int n = 2;
  CSScalar expr = CSScalar::cosh_symbol(r) +
                  CSScalar::sinh_symbol(r) * CSScalar::rho_inverse(r);
  double lambda = 0.75;
  double rho = std::sqrt(2.0);
  double mu = lambda * rho / n;
  CHECK(expr.eval(lambda, n) == doctest::Approx(std::cosh(mu) + std::sinh(mu) / rho));

  // lambda-polynomial embedding evaluates as a plain polynomial.
  CSScalar poly = CSScalar::from_lambda(LambdaPoly::lambda() * LambdaPoly::lambda());
  CHECK(poly.eval(0.5, 3) == doctest::Approx(0.25));
}

TEST_CASE("multivector JSON round trip and validation") {
  Signature sig(0, 3);
  RMulti m(sig);
  m += RMulti::blade(sig, 0b011, make_rational(3, 2));
  m += RMulti::blade(sig, 0b100, Rational(-2));
  m += RMulti::scalar(sig, make_rational(1, 7));
  Json j = to_json(m);
  CHECK(multivector_from_json(j) == m);
  // Schema shape: strictly increasing blade index lists, "a/b" coefficients.
  CHECK(j.at("signature") == Json::array({0, 3}));
  CHECK(j.at("terms").at(1).at("blade") == Json::array({1, 2}));
  CHECK(j.at("terms").at(1).at("coeff") == "3/2");

  Json bad = j;
  bad["terms"][1]["blade"] = Json::array({2, 1});
  CHECK_THROWS_AS(multivector_from_json(bad), Error);
  bad["terms"][1]["blade"] = Json::array({1, 9});
  CHECK_THROWS_AS(multivector_from_json(bad), Error);
}

TEST_CASE("weighted function JSON round trip") {
  Signature sig(0, 2);
  RPoly p(2, sig);
  p.add_term({1, 2}, RMulti::blade(sig, 0b11, make_rational(-5, 3)));
  p.add_term({0, 0}, RMulti::scalar(sig, Rational(4)));
  RWeighted f(make_rational(-1, 2), p);
  Json j = to_json(f);
  CHECK(j.at("envelope") == "-1/2");
  RWeighted back = weighted_from_json(j);
  CHECK(back == f);
  CHECK_THROWS_AS(poly_from_json(j), Error);  // nonzero envelope is not a polynomial
}
