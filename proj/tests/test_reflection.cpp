#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/errors.hpp"
#include "dunkl/random.hpp"
#include "dunkl/reflection.hpp"

using namespace dunkl;

namespace {

Root make_root(std::vector<long> entries) {
  Root root;
  for (long e : entries) root.coords.push_back(Rational(e));
  return root;
}

std::size_t fact(int n) { return n <= 1 ? 1 : n * fact(n - 1); }

}  // namespace

TEST_CASE("builtin groups have the expected roots and orders") {
  auto a12 = builtin_group("a1", 2, {make_rational(1, 2), Rational(1)});
  CHECK(a12.positive_roots().size() == 2);
  CHECK(a12.order() == 4);  // closure of the two sign flips

  auto s3 = builtin_group("sd", 3, {Rational(1)});
  CHECK(s3.positive_roots().size() == 3);
  CHECK(s3.order() == 6);  // permutation matrices of 3 letters

  auto b2 = builtin_group("bd", 2, {Rational(1), Rational(1)});
  CHECK(b2.positive_roots().size() == 4);
  CHECK(b2.order() == 8);

  CHECK(builtin_group("b2planar", 2, {Rational(1), Rational(1)}).order() == 8);
}

TEST_CASE("group orders match the classical counts") {
  for (int d = 1; d <= 3; ++d) {
    std::vector<Rational> ones(static_cast<std::size_t>(d), Rational(1));
    CHECK(builtin_group("a1", d, ones).order() == (1u << d));
    CHECK(builtin_group("sd", d, {Rational(1)}).order() == fact(d));
    CHECK(builtin_group("bd", d, {Rational(1), Rational(1)}).order() == (1u << d) * fact(d));
  }
}

TEST_CASE("builtin group argument validation") {
  CHECK_THROWS_AS(builtin_group("e8", 8, {}), UnknownGroup);
  CHECK_THROWS_AS(builtin_group("a1", 2, {Rational(1)}), BadKappaArity);
  CHECK_THROWS_AS(builtin_group("sd", 3, {Rational(1), Rational(1)}), BadKappaArity);
  CHECK_THROWS_AS(builtin_group("a1", 2, {Rational(1), Rational(-1)}), NegativeKappa);
  CHECK_THROWS_AS(builtin_group("b2planar", 3, {Rational(1), Rational(1)}), UnknownGroup);
}

TEST_CASE("reflection matrices") {
  // alpha = e_1 flips the first spatial coordinate.
  Mat flip = reflection_matrix(make_root({0, 1, 0, 0}));
  Mat expected = Mat::identity(4);
  expected.at(1, 1) = Rational(-1);
  CHECK(flip == expected);

  // alpha = e_1 - e_2 swaps x_1 and x_2.
  Mat swap = reflection_matrix(make_root({0, 1, -1, 0}));
  Mat expected_swap = Mat::identity(4);
  expected_swap.at(1, 1) = Rational(0);
  expected_swap.at(2, 2) = Rational(0);
  expected_swap.at(1, 2) = Rational(1);
  expected_swap.at(2, 1) = Rational(1);
  CHECK(swap == expected_swap);

  CHECK_THROWS_AS(reflection_matrix(make_root({0, 0, 0})), ZeroRoot);
}

TEST_CASE("reflections are involutive and scale-invariant") {
  Rng rng(61);
  for (int round = 0; round < 10; ++round) {
    Root alpha;
    alpha.coords.push_back(Rational(0));
    bool nonzero = false;
    for (int i = 0; i < 3; ++i) {
      Rational c = rng.rational(3, 2);
      nonzero = nonzero || !is_zero(c);
      alpha.coords.push_back(c);
    }
    if (!nonzero) continue;
    Mat sigma = reflection_matrix(alpha);
    CHECK(sigma * sigma == Mat::identity(4));

    Root scaled = alpha;
    Rational c = rng.nonzero_rational(5, 3);
    for (auto& entry : scaled.coords) entry *= c;
    CHECK(reflection_matrix(scaled) == sigma);
  }
}

TEST_CASE("gamma_kappa and the Dunkl dimension") {
  auto a12 = builtin_group("a1", 2, {make_rational(1, 2), Rational(1)});
  CHECK(a12.gamma_kappa() == make_rational(3, 2));
  CHECK(a12.dunkl_dimension() == Rational(5));

  auto zeros = builtin_group("a1", 3, {Rational(0), Rational(0), Rational(0)});
  CHECK(is_zero(zeros.gamma_kappa()));
  CHECK(zeros.dunkl_dimension() == Rational(3));
  CHECK(zeros.classical());

  auto b2 = builtin_group("bd", 2, {Rational(1), make_rational(1, 2)});
  CHECK(b2.gamma_kappa() == Rational(3));

  auto s3 = builtin_group("sd", 3, {Rational(1)});
  CHECK(s3.dunkl_dimension() == Rational(9));
}

TEST_CASE("validate passes on builtin groups") {
  for (const auto* spec : {"a1:d=3:kappa=1,1,1", "sd:d=3:kappa=1", "bd:d=2:kappa=1,1/2"}) {
    auto group = parse_group_spec(spec);
    auto report = validate(group);
    CHECK(report.all_pass());
  }
}

TEST_CASE("validate flags a broken root system") {
  // {e_1, e_1 + e_2} is not closed under its own reflections.
  MultiplicityFunction kappa;
  auto r1 = make_root({0, 1, 0});
  auto r2 = make_root({0, 1, 1});
  kappa.set(r1, Rational(1));
  kappa.set(r2, Rational(1));
  ReflectionGroup broken("broken", 2, {r1, r2}, kappa);
  auto report = validate(broken);
  CHECK_FALSE(report.all_pass());
  bool stability_failed = false;
  for (const auto& check : report.checks)
    if (check.name == "roots.reflection_stable" && !check.pass) stability_failed = true;
  CHECK(stability_failed);
}

TEST_CASE("validate flags non-invariant kappa") {
  // On B_2 the axis roots are one orbit; giving them different values
  // breaks W-invariance.
  MultiplicityFunction kappa;
  auto e1 = make_root({0, 1, 0});
  auto e2 = make_root({0, 0, 1});
  auto mixed_minus = make_root({0, 1, -1});
  auto mixed_plus = make_root({0, 1, 1});
  kappa.set(e1, Rational(1));
  kappa.set(e2, Rational(2));
  kappa.set(mixed_minus, Rational(1));
  kappa.set(mixed_plus, Rational(1));
  ReflectionGroup skew("skew-b2", 2, {e1, e2, mixed_minus, mixed_plus}, kappa);
  auto report = validate(skew);
  bool invariance_failed = false;
  for (const auto& check : report.checks)
    if (check.name == "kappa.w_invariant" && !check.pass) invariance_failed = true;
  CHECK(invariance_failed);
}

TEST_CASE("elements permute the root set") {
  auto b2 = builtin_group("bd", 2, {Rational(1), Rational(1)});
  for (const auto& root : b2.positive_roots()) {
    Mat sigma = reflection_matrix(root);
    // sigma maps every root to a root (up to sign captured by the key).
    for (const auto& other : b2.positive_roots()) {
      Root image;
      image.coords.assign(3, Rational(0));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          image.coords[static_cast<std::size_t>(i)] +=
              sigma.at(i, j) * other.coords[static_cast<std::size_t>(j)];
      CHECK(b2.kappa().defined_on(image));
    }
  }
}

TEST_CASE("group spec parsing") {
  auto g = parse_group_spec("a1:d=2:kappa=1/2,1");
  CHECK(g.d() == 2);
  CHECK(g.gamma_kappa() == make_rational(3, 2));
  CHECK_THROWS_AS(parse_group_spec("a1"), UsageError);
  CHECK_THROWS_AS(parse_group_spec("a1:d=x:kappa=1"), UsageError);
  CHECK_THROWS_AS(parse_group_spec("nope:d=2:kappa=1,1"), UnknownGroup);
}
