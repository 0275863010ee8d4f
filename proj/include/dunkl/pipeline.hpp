#pragma once

#include <optional>
#include <vector>

#include "dunkl/axial.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/report.hpp"

namespace dunkl {

enum class MonogenicOperator { Dirac, CauchyRiemann };

struct MonogenicityResult {
  bool monogenic = false;
  CliffordPolynomial residual;
};

MonogenicityResult is_dunkl_monogenic(const DunklContext& ctx, const CliffordPolynomial& p,
                                      MonogenicOperator op);

// Degree of p when homogeneous, nullopt otherwise (zero counts as
// homogeneous of every degree and reports 0).
std::optional<unsigned> homogeneous_degree(const CliffordPolynomial& p);

// Monomials of total degree n in x_1..x_d (x_0-free), in monomial order.
std::vector<Monomial> space_monomials(int d, unsigned n);
// Monomials of total degree n in x_0..x_d.
std::vector<Monomial> full_monomials(int d, unsigned n);
std::vector<Blade> all_blades(int d);

struct MonogenicBasis {
  unsigned degree = 0;
  std::vector<CliffordPolynomial> elements;  // primitive integer coefficients
};

// Exact nullspace of Dirac : P(n) -> P(n-1) on coefficient vectors,
// by fraction-free elimination.
MonogenicBasis monogenic_basis(const DunklContext& ctx, unsigned n);

struct FischerDecomposition {
  // parts[k] is the monogenic factor of the x^k summand; the input is
  // sum_k x^k parts[k].
  std::vector<CliffordPolynomial> parts;
};

FischerDecomposition fischer_decompose(const DunklContext& ctx, const CliffordPolynomial& p);
CliffordPolynomial fischer_recompose(const DunklContext& ctx, const FischerDecomposition& dec);

// sum_{j<=deg g} (-x_0)^j/j! Dirac^j g; the unique extension with
// CauchyRiemann image zero that restricts to g at x_0 = 0.
CliffordPolynomial ck_extend(const DunklContext& ctx, const CliffordPolynomial& g);

// p with x_0 set to zero.
CliffordPolynomial restrict_to_space(const CliffordPolynomial& p);

// (a(x_0, |x|^2) + x b(x_0, |x|^2)) * P.
CliffordPolynomial embed_axial(const DunklContext& ctx, const AxialPair& pair,
                               const CliffordPolynomial& p);

// Dirac(x^k P_n) vs -k x^{k-1} P_n (k even) / -(k+mu+2n-1) x^{k-1} P_n (k odd).
VerificationReport lemma21_check(const DunklContext& ctx, unsigned k,
                                 const CliffordPolynomial& p_n);

enum class AxialPart { Scalar, Vector };

// m-fold Laplacian of the embedded part against the closed-form expansion.
VerificationReport lemma32_check(const DunklContext& ctx, unsigned m, const AxialPair& pair,
                                 const CliffordPolynomial& p_n, AxialPart part);

struct TheoremResult {
  CliffordPolynomial result;
  VerificationReport report;
};

struct Fueter31Options {
  int exponent_delta = 0;        // negative-control knob
  bool allow_seed_overflow = false;  // run j > m instead of refusing
};

// Higher-order Fueter map: Delta^{m+n+(mu-1)/2} of the embedded seed times a
// degree-n monogenic factor in the space variables, checked against the
// Cauchy-Riemann operator and the Vekua system.
TheoremResult fueter_theorem31(const DunklContext& ctx, const ComplexSeed& seed, unsigned m,
                               const CliffordPolynomial& p_n, const Fueter31Options& options = {});

// Fueter map with a homogeneous monogenic factor in all of x_0..x_d and a
// holomorphic seed z^k: Delta^{n+(mu-1)/2} of the embedded product.
TheoremResult fueter_theorem43(const DunklContext& ctx, unsigned k,
                               const CliffordPolynomial& p);

// CK[x^k P_{n-k}] lies in span{x_0^j x^{k-j} P_{n-k}}; the induced planar
// pair is annihilated by dbar^{k+1}.
VerificationReport ck_shape_check(const DunklContext& ctx, unsigned k,
                                  const CliffordPolynomial& p_nk);

}  // namespace dunkl
