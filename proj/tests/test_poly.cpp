#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "dunkl/errors.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/poly_text.hpp"
#include "dunkl/random.hpp"

using namespace dunkl;

namespace {

// Shared with the suites, but re-rolled here so the tests stay independent.
CliffordPolynomial random_poly(Rng& rng, int dim, unsigned max_degree, int terms) {
  CliffordPolynomial p(dim);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> exps(static_cast<std::size_t>(dim + 1), 0);
    unsigned budget = max_degree;
    for (auto& e : exps) {
      e = static_cast<unsigned>(rng.below(budget + 1));
      budget -= e;
    }
    const auto bits = static_cast<std::uint32_t>(rng.below(1u << dim));
    p.add_component(Blade::from_bits(bits),
                    ScalarPoly::monomial(Monomial(std::move(exps)), rng.rational()));
  }
  return p;
}

CliffordPolynomial parse2(const std::string& text) { return parse_clifford_poly(text, 2); }

}  // namespace

TEST_CASE("ring operations") {
  auto x1e1 = parse2("1*x1*e1");
  CHECK(x1e1 * x1e1 == parse2("-1*x1^2"));

  CHECK(parse2("x0 + x1*e1") + parse2("-x0") == parse2("x1*e1"));

  // e_1 (x_2 e_2) - (x_2 e_2) e_1 = 2 x_2 e_12, frozen from blade_product expansion.
  auto lhs = parse2("e1") * parse2("x2*e2") - parse2("x2*e2") * parse2("e1");
  CHECK(lhs == parse2("2*x2*e12"));

  CHECK_THROWS_AS(parse2("x1") + parse_clifford_poly("x1", 3), DimensionMismatch);
}

TEST_CASE("partial derivative") {
  CHECK(parse2("x1^2*x2").derivative(1) == parse2("2*x1*x2"));
  CHECK(parse2("x1*e1").derivative(0).is_zero());
  CHECK(parse2("x1*x2 + x2^2*e12").derivative(2) == parse2("x1 + 2*x2*e12"));
  CHECK_THROWS_AS(parse2("x1").derivative(5), IndexOutOfRange);
}

TEST_CASE("linear substitution") {
  const int d = 2;
  Mat flip = Mat::identity(d + 1);
  flip.at(1, 1) = Rational(-1);
  CHECK(parse2("x1^2 + x1*x2").substitute_linear(flip) == parse2("x1^2 - x1*x2"));

  CHECK(parse2("x1^2*x2 - 3*x0*e12").substitute_linear(Mat::identity(d + 1)) ==
        parse2("x1^2*x2 - 3*x0*e12"));

  Mat swap(d + 1, d + 1);
  swap.at(0, 0) = Rational(1);
  swap.at(1, 2) = Rational(1);
  swap.at(2, 1) = Rational(1);
  CHECK(parse2("x1^2*x2").substitute_linear(swap) == parse2("x2^2*x1"));
}

TEST_CASE("substitution composes contravariantly") {
  Rng rng(23);
  const int d = 2;
  for (int round = 0; round < 6; ++round) {
    Mat m1(d + 1, d + 1), m2(d + 1, d + 1);
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) {
        m1.at(i, j) = rng.rational(2, 1);
        m2.at(i, j) = rng.rational(2, 1);
      }
    auto p = random_poly(rng, d, 3, 4);
    CHECK(p.substitute_linear(m2).substitute_linear(m1) ==
          p.substitute_linear(m2 * m1));
  }
}

TEST_CASE("division by a linear form") {
  std::array<Rational, 3> diff = {Rational(0), Rational(1), Rational(-1)};
  CHECK(parse2("x1^2 - x2^2").divide_by_linear(diff) == parse2("x1 + x2"));

  std::array<Rational, 3> x1_form = {Rational(0), Rational(1), Rational(0)};
  CHECK_THROWS_AS(parse2("x1^2 + x2^2").divide_by_linear(x1_form), NonDivisible);
  CHECK(parse2("x1^3 + x1*x2^2").divide_by_linear(x1_form) == parse2("x1^2 + x2^2"));

  std::array<Rational, 3> zero = {Rational(0), Rational(0), Rational(0)};
  CHECK_THROWS_AS(parse2("x1").divide_by_linear(zero), ZeroLinearForm);
}

TEST_CASE("division round-trips against multiplication") {
  Rng rng(29);
  const int d = 3;
  for (int round = 0; round < 10; ++round) {
    std::vector<Rational> alpha(static_cast<std::size_t>(d + 1));
    bool nonzero = false;
    for (auto& a : alpha) {
      a = rng.rational(3, 2);
      nonzero = nonzero || !is_zero(a);
    }
    if (!nonzero) alpha[1] = Rational(1);

    ScalarPoly form(d + 1);
    for (int v = 0; v <= d; ++v)
      if (!is_zero(alpha[static_cast<std::size_t>(v)]))
        form.add_term(Monomial::unit(d + 1, v), alpha[static_cast<std::size_t>(v)]);

    auto p = random_poly(rng, d, 4, 5);
    auto product = p.scaled(form);
    CHECK(product.divide_by_linear(alpha) == p);
  }
}

TEST_CASE("homogeneous components") {
  auto parts = parse2("x1^2 + x0").homogeneous_components();
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 1);
  CHECK(parts[0].second == parse2("x0"));
  CHECK(parts[1].first == 2);
  CHECK(parts[1].second == parse2("x1^2"));

  CHECK(CliffordPolynomial(2).homogeneous_components().empty());

  auto single = parse2("x1*x2*e1").homogeneous_components();
  REQUIRE(single.size() == 1);
  CHECK(single[0].first == 2);
}

TEST_CASE("evaluation") {
  std::array<Rational, 3> pt = {Rational(0), Rational(2), Rational(0)};
  CHECK(parse2("x1*e1").evaluate(pt) == Multivector::basis_vector(2, 1).scaled(Rational(2)));

  std::array<Rational, 3> anywhere = {Rational(5), Rational(-1), Rational(9)};
  CHECK(parse2("7").evaluate(anywhere) == Multivector::scalar(2, Rational(7)));

  std::array<Rational, 3> pt2 = {make_rational(1, 2), Rational(3), Rational(0)};
  CHECK(parse2("x0*x1").evaluate(pt2) == Multivector::scalar(2, make_rational(3, 2)));
}

TEST_CASE("evaluation is a ring homomorphism") {
  Rng rng(31);
  const int d = 2;
  for (int round = 0; round < 8; ++round) {
    auto p = random_poly(rng, d, 3, 4);
    auto q = random_poly(rng, d, 3, 4);
    std::vector<Rational> pt;
    for (int v = 0; v <= d; ++v) pt.push_back(rng.rational(3, 2));
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
  }
}

TEST_CASE("Leibniz rule") {
  Rng rng(37);
  const int d = 2;
  for (int round = 0; round < 8; ++round) {
    auto p = random_poly(rng, d, 3, 4);
    auto q = random_poly(rng, d, 3, 4);
    for (int v = 0; v <= d; ++v) {
      CHECK((p * q).derivative(v) ==
            p.derivative(v) * q + p * q.derivative(v));
    }
  }
}

TEST_CASE("text round-trip") {
  Rng rng(41);
  for (int round = 0; round < 20; ++round) {
    const int d = 1 + static_cast<int>(rng.below(3));
    auto p = random_poly(rng, d, 4, 5);
    CHECK(parse_clifford_poly(to_text(p), d) == p);
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_clifford_poly("x1 x2", 2), ParseError);   // juxtaposition
  CHECK_THROWS_AS(parse_clifford_poly("e21", 2), ParseError);     // non-increasing
  CHECK_THROWS_AS(parse_clifford_poly("x7", 2), ParseError);      // beyond dimension
  CHECK_THROWS_AS(parse_clifford_poly("1/0", 2), ParseError);
  CHECK_THROWS_AS(parse_clifford_poly("(x1", 2), ParseError);
  CHECK_THROWS_AS(parse_clifford_poly("", 2), ParseError);
}

TEST_CASE("parser accepts the documented grammar") {
  CHECK(parse2("3/2 + 1*e1 - 2*e12") ==
        parse2("e1") + parse2("3/2") - parse2("e12").scaled(Rational(2)));
  CHECK(parse2("(x0 + x1*e1)^2") == parse2("x0 + x1*e1") * parse2("x0 + x1*e1"));
  CHECK(parse2("-x1") == -parse2("x1"));
}
