#pragma once

#include <string>
#include <string_view>

#include "dunkl/poly.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

// Pair (a, b) of bivariate polynomials in (t, q) encoding the axial function
// a(x_0, r^2) + (x/|x|) r b(x_0, r^2), i.e. u = a(t, r^2), v = r b(t, r^2).
// Writing q = r^2 removes every square root and turns the D_r / D^r towers
// into exact polynomial operators.
struct AxialPair {
  ScalarPoly a;
  ScalarPoly b;

  AxialPair() : a(2), b(2) {}
  AxialPair(ScalarPoly a_part, ScalarPoly b_part)
      : a(std::move(a_part)), b(std::move(b_part)) {}

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool operator==(const AxialPair&) const = default;
};

// zbar^j z^k with z = t + i s; these span the polynomial solutions of the
// initial-function equation used by the higher-order Fueter map.
struct ComplexSeed {
  unsigned j = 0;  // power of conjugate z
  unsigned k = 0;  // power of z

  unsigned degree() const { return j + k; }
};

// Variables of the (t, q) ring, for readability at call sites.
inline constexpr int kAxialT = 0;
inline constexpr int kAxialQ = 1;

AxialPair seed_to_axial(const ComplexSeed& seed);

AxialPair axial_add(const AxialPair& x, const AxialPair& y);
AxialPair axial_scale(const AxialPair& x, const Rational& c);
// Mirrors complex multiplication under x/|x| <-> i r.
AxialPair axial_mul(const AxialPair& x, const AxialPair& y);

// d/dzbar = (d/dt + i d/ds)/2 in the (t, q) encoding.
AxialPair dbar(const AxialPair& x);

// Two-dimensional Laplacian d^2/dt^2 + d^2/ds^2 in the (t, q) encoding.
AxialPair delta_z(const AxialPair& x);

// D_r(m) = (r^{-1} d/dr)^m on even functions a(t, r^2): (2 d/dq)^m.
ScalarPoly d_lower(unsigned m, const ScalarPoly& a);

// D^r(m) on odd functions r b(t, r^2), returned through the b-component;
// the closed form is again (2 d/dq)^m.
ScalarPoly d_upper(unsigned m, const ScalarPoly& b);

// d(0) = 1, d(j) = prod_{i=1..j} (2n + mu - (2i - 1)); zero once a factor
// vanishes.
Rational d_coeff(unsigned n, const Rational& mu, unsigned j);

// The closed-form expansion of the m-fold Laplacian of an axial function
// times a degree-n monogenic factor: sum_j d(j) C(m,j) tower_j(delta_z^{m-j}).
AxialPair lemma32_closed_form(unsigned m, unsigned n, const Rational& mu, const AxialPair& x);

struct VekuaResult {
  bool ok = false;
  ScalarPoly residual1;  // a_t - (c+1) b - 2 q b_q
  ScalarPoly residual2;  // b_t + 2 a_q

  VekuaResult() : residual1(2), residual2(2) {}
};

// First-order system characterizing axial monogenicity, with c passed
// explicitly so negative controls can probe wrong constants.
VekuaResult vekua_check(const AxialPair& x, const Rational& c);

// True iff dbar^k annihilates the pair.
bool polyanalytic_order_check(unsigned k, const AxialPair& x);

// `zbar^j*z^k`; either factor may be omitted, e.g. `z^3` or `zbar^2`.
ComplexSeed parse_seed_spec(std::string_view spec);
std::string seed_spec_string(const ComplexSeed& seed);

}  // namespace dunkl
