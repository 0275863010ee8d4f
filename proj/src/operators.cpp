#include "dunkl/operators.hpp"

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

// (p - p o sigma_alpha) / <alpha, x>, the difference-quotient core shared by
// T_i and Psi. Always divisible for polynomial input; a remainder means a
// broken reflection and is escalated as an internal error.
CliffordPolynomial difference_quotient(const DunklContext& ctx, std::size_t root_index,
                                       const CliffordPolynomial& p) {
  const CliffordPolynomial reflected = p.substitute_linear(ctx.reflection(root_index));
  const CliffordPolynomial numerator = p - reflected;
  try {
    return numerator.divide_by_linear(ctx.root(root_index).coords);
  } catch (const NonDivisible&) {
    throw InternalError("difference quotient left a remainder");
  }
}

}  // namespace

DunklContext::DunklContext(ReflectionGroup group) : group_(std::move(group)) {
  if (!validate(group_).all_pass())
    throw Error("reflection group failed validation: " + group_.name());
  reflections_.reserve(group_.positive_roots().size());
  kappa_values_.reserve(group_.positive_roots().size());
  for (const auto& root : group_.positive_roots()) {
    reflections_.push_back(reflection_matrix(root));
    kappa_values_.push_back(group_.kappa().at(root));
  }
}

long DunklContext::mu_odd() const {
  const Rational m = mu();
  if (m.get_den() != 1) return -1;
  const Integer num = m.get_num();
  if (!num.fits_slong_p()) return -1;
  const long value = num.get_si();
  return (value % 2 != 0) ? value : -1;
}

CliffordPolynomial dunkl_derivative(const DunklContext& ctx, int i,
                                    const CliffordPolynomial& p) {
  if (i < 0 || i > ctx.dim()) throw IndexOutOfRange("Dunkl derivative index out of range");
  CliffordPolynomial out = p.derivative(i);
  for (std::size_t r = 0; r < ctx.root_count(); ++r) {
    const Rational& alpha_i = ctx.root(r).coords[static_cast<std::size_t>(i)];
    if (is_zero(ctx.kappa(r)) || is_zero(alpha_i)) continue;
    out = out + difference_quotient(ctx, r, p).scaled(ctx.kappa(r) * alpha_i);
  }
  return out;
}

CliffordPolynomial dunkl_dirac(const DunklContext& ctx, const CliffordPolynomial& p) {
  const int d = ctx.dim();
  CliffordPolynomial out(d);
  for (int i = 1; i <= d; ++i)
    out = out + CliffordPolynomial::basis_vector(d, i) * dunkl_derivative(ctx, i, p);
  return out;
}

CliffordPolynomial dunkl_cauchy_riemann(const DunklContext& ctx, const CliffordPolynomial& p) {
  return p.derivative(0) + dunkl_dirac(ctx, p);
}

CliffordPolynomial dunkl_laplacian(const DunklContext& ctx, const CliffordPolynomial& p,
                                   Ambient ambient) {
  const int d = ctx.dim();
  CliffordPolynomial out(d);
  for (int i = 1; i <= d; ++i)
    out = out + dunkl_derivative(ctx, i, dunkl_derivative(ctx, i, p));
  if (ambient == Ambient::WithX0) out = out + p.derivative(0).derivative(0);
  return out;
}

CliffordPolynomial phi_operator(const DunklContext& ctx, const CliffordPolynomial& p) {
  const int d = ctx.dim();
  CliffordPolynomial out(d);
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      const CliffordPolynomial angular =
          CliffordPolynomial::variable(d, i) * p.derivative(j) -
          CliffordPolynomial::variable(d, j) * p.derivative(i);
      CliffordPolynomial bivector(d);
      bivector.add_component(Blade::from_indices({i, j}),
                             ScalarPoly::constant(d + 1, Rational(1)));
      out = out - bivector * angular;
    }
  }
  return out;
}

CliffordPolynomial psi_operator(const DunklContext& ctx, const CliffordPolynomial& p) {
  const int d = ctx.dim();
  CliffordPolynomial out(d);
  for (std::size_t r = 0; r < ctx.root_count(); ++r) {
    if (is_zero(ctx.kappa(r))) continue;
    const auto& alpha = ctx.root(r).coords;
    const CliffordPolynomial reflected = p.substitute_linear(ctx.reflection(r));
    const CliffordPolynomial quotient = difference_quotient(ctx, r, p);
    for (int i = 1; i <= d; ++i) {
      for (int j = i + 1; j <= d; ++j) {
        // weight x_i alpha_j - x_j alpha_i
        ScalarPoly weight(d + 1);
        if (!is_zero(alpha[static_cast<std::size_t>(j)]))
          weight.add_term(Monomial::unit(d + 1, i), alpha[static_cast<std::size_t>(j)]);
        if (!is_zero(alpha[static_cast<std::size_t>(i)]))
          weight.add_term(Monomial::unit(d + 1, j), -alpha[static_cast<std::size_t>(i)]);
        if (weight.is_zero()) continue;
        CliffordPolynomial bivector(d);
        bivector.add_component(Blade::from_indices({i, j}),
                               ScalarPoly::constant(d + 1, Rational(1)));
        out = out - (bivector * quotient.scaled(weight)).scaled(ctx.kappa(r));
      }
    }
    out = out - reflected.scaled(ctx.kappa(r));
  }
  return out;
}

CliffordPolynomial gamma_operator(const DunklContext& ctx, const CliffordPolynomial& p) {
  return p.scaled(ctx.gamma_kappa()) + phi_operator(ctx, p) + psi_operator(ctx, p);
}

CliffordPolynomial euler_operator(const CliffordPolynomial& p) {
  const int d = p.dim();
  CliffordPolynomial out(d);
  for (int i = 1; i <= d; ++i)
    out = out + CliffordPolynomial::variable(d, i) * p.derivative(i);
  return out;
}

}  // namespace dunkl
