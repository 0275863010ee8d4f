#pragma once

#include <vector>

#include "dunkl/poly.hpp"
#include "dunkl/reflection.hpp"

namespace dunkl {

// Validated group plus the cached per-root data every operator needs.
// Stateless beyond construction; safe to share across threads.
class DunklContext {
 public:
  explicit DunklContext(ReflectionGroup group);

  const ReflectionGroup& group() const { return group_; }
  int dim() const { return group_.d(); }
  Rational gamma_kappa() const { return group_.gamma_kappa(); }
  Rational mu() const { return group_.dunkl_dimension(); }
  // mu as an odd integer, or -1 when mu is even or non-integral.
  long mu_odd() const;

  std::size_t root_count() const { return group_.positive_roots().size(); }
  const Root& root(std::size_t i) const { return group_.positive_roots()[i]; }
  const Mat& reflection(std::size_t i) const { return reflections_[i]; }
  const Rational& kappa(std::size_t i) const { return kappa_values_[i]; }

 private:
  ReflectionGroup group_;
  std::vector<Mat> reflections_;
  std::vector<Rational> kappa_values_;
};

// T_i = d/dx_i + sum_{alpha in R+} kappa(alpha) alpha_i (p - p o sigma_alpha)/<alpha,x>.
// T_0 reduces to d/dx_0 because every root has zero x_0 coordinate.
CliffordPolynomial dunkl_derivative(const DunklContext& ctx, int i,
                                    const CliffordPolynomial& p);

// Dunkl-Dirac: sum_{i=1..d} e_i T_i p.
CliffordPolynomial dunkl_dirac(const DunklContext& ctx, const CliffordPolynomial& p);

// Cauchy-Riemann: d/dx_0 p + Dirac p.
CliffordPolynomial dunkl_cauchy_riemann(const DunklContext& ctx, const CliffordPolynomial& p);

enum class Ambient { SpaceOnly, WithX0 };  // R^d vs R^d_1

// sum_{i=1..d} T_i^2 p, plus d^2/dx_0^2 p in the WithX0 ambient.
CliffordPolynomial dunkl_laplacian(const DunklContext& ctx, const CliffordPolynomial& p,
                                   Ambient ambient);

// Angular operators. All preserve total degree.
CliffordPolynomial phi_operator(const DunklContext& ctx, const CliffordPolynomial& p);
CliffordPolynomial psi_operator(const DunklContext& ctx, const CliffordPolynomial& p);
// gamma_kappa p + Phi p + Psi p.
CliffordPolynomial gamma_operator(const DunklContext& ctx, const CliffordPolynomial& p);

// E = sum_{i=1..d} x_i d/dx_i, the polynomial realization of r d/dr.
CliffordPolynomial euler_operator(const CliffordPolynomial& p);

}  // namespace dunkl
