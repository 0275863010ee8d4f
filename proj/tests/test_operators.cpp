#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/errors.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/poly_text.hpp"
#include "dunkl/random.hpp"

using namespace dunkl;

namespace {

DunklContext make_context(const std::string& spec) {
  return DunklContext(parse_group_spec(spec));
}

CliffordPolynomial random_poly(Rng& rng, int dim, unsigned max_degree, int terms,
                               bool include_x0) {
  CliffordPolynomial p(dim);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> exps(static_cast<std::size_t>(dim + 1), 0);
    unsigned budget = max_degree;
    for (std::size_t v = include_x0 ? 0 : 1; v < exps.size(); ++v) {
      exps[v] = static_cast<unsigned>(rng.below(budget + 1));
      budget -= exps[v];
    }
    const auto bits = static_cast<std::uint32_t>(rng.below(1u << dim));
    p.add_component(Blade::from_bits(bits),
                    ScalarPoly::monomial(Monomial(std::move(exps)), rng.rational()));
  }
  return p;
}

CliffordPolynomial parse(const std::string& text, int dim) {
  return parse_clifford_poly(text, dim);
}

}  // namespace

TEST_CASE("Dunkl derivative reduces to the partial derivative at kappa = 0") {
  auto ctx = make_context("a1:d=2:kappa=0,0");
  CHECK(dunkl_derivative(ctx, 1, parse("x1^2", 2)) == parse("2*x1", 2));
}

TEST_CASE("Dunkl derivative on the A1 line") {
  // T_1 x_1 = 1 + 2 kappa: the derivative gives 1, the difference quotient
  // (x_1 - (-x_1))/x_1 = 2 picks up weight kappa.
  auto ctx = make_context("a1:d=1:kappa=1/3");
  CHECK(dunkl_derivative(ctx, 1, parse("x1", 1)) == parse("5/3", 1));
}

TEST_CASE("T_0 is the plain x_0 derivative") {
  auto ctx = make_context("bd:d=2:kappa=1,1/2");
  CHECK(dunkl_derivative(ctx, 0, parse("x0*x1", 2)) == parse("x1", 2));
  CHECK_THROWS_AS(dunkl_derivative(ctx, 7, parse("x1", 2)), IndexOutOfRange);
}

TEST_CASE("Dunkl derivative drops homogeneous degree by one") {
  Rng rng(67);
  auto ctx = make_context("sd:d=3:kappa=1");
  for (int round = 0; round < 5; ++round) {
    auto p = random_poly(rng, 3, 3, 3, true);
    for (const auto& [deg, part] : p.homogeneous_components()) {
      for (int i = 0; i <= 3; ++i) {
        auto image = dunkl_derivative(ctx, i, part);
        if (image.is_zero()) continue;
        auto comps = image.homogeneous_components();
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].first == deg - 1);
      }
    }
  }
}

TEST_CASE("Dunkl operators commute") {
  Rng rng(71);
  for (const auto* spec :
       {"a1:d=2:kappa=1/2,1", "sd:d=3:kappa=1", "bd:d=2:kappa=1,1/2"}) {
    auto ctx = make_context(spec);
    const int d = ctx.dim();
    for (int round = 0; round < 4; ++round) {
      auto p = random_poly(rng, d, 4, 4, true);
      for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
          CHECK(dunkl_derivative(ctx, i, dunkl_derivative(ctx, j, p)) ==
                dunkl_derivative(ctx, j, dunkl_derivative(ctx, i, p)));
        }
    }
  }
}

TEST_CASE("root rescaling leaves the Dunkl derivative unchanged") {
  Rng rng(73);
  auto base = parse_group_spec("a1:d=2:kappa=1/2,1");
  DunklContext ctx(base);

  std::vector<Root> scaled_roots;
  MultiplicityFunction kappa;
  for (const auto& root : base.positive_roots()) {
    Root scaled = root;
    const Rational c = Rational(1 + static_cast<long>(rng.below(5)));
    for (auto& coord : scaled.coords) coord *= c;
    kappa.set(scaled, base.kappa().at(root));
    scaled_roots.push_back(std::move(scaled));
  }
  DunklContext scaled_ctx(
      ReflectionGroup("a1-scaled", base.d(), std::move(scaled_roots), kappa));

  for (int round = 0; round < 5; ++round) {
    auto p = random_poly(rng, 2, 4, 4, true);
    for (int i = 0; i <= 2; ++i)
      CHECK(dunkl_derivative(ctx, i, p) == dunkl_derivative(scaled_ctx, i, p));
  }
}

TEST_CASE("Dirac operator examples") {
  auto ctx = make_context("a1:d=2:kappa=1/2,1");
  CHECK(dunkl_dirac(ctx, parse("1", 2)).is_zero());

  // Dirac of the vector variable is -mu: each e_i T_i x_i e_i = -(1+2k_i).
  auto x_vec = CliffordPolynomial::vector_x(2);
  CHECK(dunkl_dirac(ctx, x_vec) == parse("-5", 2));

  auto classical = make_context("a1:d=2:kappa=0,0");
  CHECK(dunkl_dirac(classical, parse("x1*e1 - x2*e2", 2)).is_zero());
}

TEST_CASE("Cauchy-Riemann operator examples") {
  auto ctx1 = make_context("a1:d=1:kappa=1/3");
  // D kills x_1 - (1+2 kappa) x_0 e_1.
  CHECK(dunkl_cauchy_riemann(ctx1, parse("x1 - 5/3*x0*e1", 1)).is_zero());
  CHECK(dunkl_cauchy_riemann(ctx1, parse("x0", 1)) == parse("1", 1));

  auto classical3 = make_context("a1:d=3:kappa=0,0,0");
  auto paravector = parse("x0 + x1*e1 + x2*e2 + x3*e3", 3);
  CHECK(dunkl_cauchy_riemann(classical3, paravector) == parse("-2", 3));
}

TEST_CASE("Laplacian examples") {
  auto classical3 = make_context("a1:d=3:kappa=0,0,0");
  CHECK(dunkl_laplacian(classical3, parse("x1^2 + x2^2 + x3^2", 3), Ambient::SpaceOnly) ==
        parse("6", 3));
  CHECK(dunkl_laplacian(classical3, parse("x0^2", 3), Ambient::WithX0) == parse("2", 3));

  // Radial q has Dunkl Laplacian 2 mu.
  auto ctx = make_context("a1:d=2:kappa=1/2,1");
  auto q = CliffordPolynomial::component(2, Blade(), CliffordPolynomial::radial_q(2));
  CHECK(dunkl_laplacian(ctx, q, Ambient::SpaceOnly) == parse("10", 2));
}

TEST_CASE("Laplacian is minus the squared Dirac operator") {
  Rng rng(79);
  for (const auto* spec : {"a1:d=2:kappa=1/2,1", "sd:d=3:kappa=1", "bd:d=2:kappa=1,1/2"}) {
    auto ctx = make_context(spec);
    for (int round = 0; round < 3; ++round) {
      auto p = random_poly(rng, ctx.dim(), 4, 4, true);
      CHECK(dunkl_laplacian(ctx, p, Ambient::SpaceOnly) ==
            -dunkl_dirac(ctx, dunkl_dirac(ctx, p)));
    }
  }
}

TEST_CASE("classical reduction of every operator") {
  Rng rng(83);
  auto ctx = make_context("a1:d=3:kappa=0,0,0");
  const int d = 3;
  for (int round = 0; round < 5; ++round) {
    auto p = random_poly(rng, d, 4, 4, true);
    for (int i = 0; i <= d; ++i)
      CHECK(dunkl_derivative(ctx, i, p) == p.derivative(i));

    CliffordPolynomial dirac(d);
    for (int i = 1; i <= d; ++i)
      dirac = dirac + CliffordPolynomial::basis_vector(d, i) * p.derivative(i);
    CHECK(dunkl_dirac(ctx, p) == dirac);
    CHECK(dunkl_cauchy_riemann(ctx, p) == p.derivative(0) + dirac);

    CliffordPolynomial laplace(d);
    for (int i = 1; i <= d; ++i) laplace = laplace + p.derivative(i).derivative(i);
    CHECK(dunkl_laplacian(ctx, p, Ambient::SpaceOnly) == laplace);
    CHECK(dunkl_laplacian(ctx, p, Ambient::WithX0) ==
          laplace + p.derivative(0).derivative(0));

    // With kappa = 0 the angular operator is the classical one.
    CHECK(gamma_operator(ctx, p) == phi_operator(ctx, p));
  }
}

TEST_CASE("Gamma kills radial functions") {
  auto ctx = make_context("bd:d=2:kappa=1,1/2");
  auto q = CliffordPolynomial::component(2, Blade(), CliffordPolynomial::radial_q(2));
  for (unsigned j = 0; j <= 3; ++j)
    CHECK(gamma_operator(ctx, q.pow(j)).is_zero());
}

TEST_CASE("Gamma eigenvalues on explicit monogenics") {
  auto classical2 = make_context("a1:d=2:kappa=0,0");
  auto p1 = parse("x1*e1 - x2*e2", 2);
  CHECK(gamma_operator(classical2, p1) == -p1);

  // Gamma(x P_1) = (mu + n - 1) x P_1 = 2 x P_1 at mu = 2, n = 1.
  auto x_vec = CliffordPolynomial::vector_x(2);
  CHECK(gamma_operator(classical2, x_vec * p1) == (x_vec * p1).scaled(Rational(2)));
}

TEST_CASE("Euler operator") {
  CHECK(euler_operator(parse("x1^2*x2", 2)) == parse("3*x1^2*x2", 2));
  CHECK(euler_operator(parse("x0^3", 2)).is_zero());
  auto q = CliffordPolynomial::component(2, Blade(), CliffordPolynomial::radial_q(2));
  CHECK(euler_operator(q) == q.scaled(Rational(2)));
}

TEST_CASE("spherical-form identity x Dirac + Euler + Gamma = 0") {
  Rng rng(89);
  for (const auto* spec : {"a1:d=2:kappa=1/2,1", "sd:d=3:kappa=1", "bd:d=2:kappa=1,1/2",
                           "a1:d=3:kappa=0,0,0"}) {
    auto ctx = make_context(spec);
    const int d = ctx.dim();
    auto x_vec = CliffordPolynomial::vector_x(d);
    for (int round = 0; round < 5; ++round) {
      auto p = random_poly(rng, d, 4, 4, false);  // functions of the space variables
      auto lhs = x_vec * dunkl_dirac(ctx, p) + euler_operator(p) + gamma_operator(ctx, p);
      CHECK(lhs.is_zero());
    }
  }
}
