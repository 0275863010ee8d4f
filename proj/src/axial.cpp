#include "dunkl/axial.hpp"

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

// Complex polynomial in (t, s) as (re, im), used only to expand seeds.
struct ComplexPoly {
  ScalarPoly re;
  ScalarPoly im;

  ComplexPoly() : re(2), im(2) {}
};

ComplexPoly complex_mul(const ComplexPoly& x, const ComplexPoly& y) {
  ComplexPoly out;
  out.re = x.re * y.re - x.im * y.im;
  out.im = x.re * y.im + x.im * y.re;
  return out;
}

}  // namespace

AxialPair seed_to_axial(const ComplexSeed& seed) {
  ComplexPoly z;  // t + i s
  z.re = ScalarPoly::variable(2, 0);
  z.im = ScalarPoly::variable(2, 1);
  ComplexPoly zbar;
  zbar.re = z.re;
  zbar.im = -z.im;

  ComplexPoly value;
  value.re = ScalarPoly::constant(2, Rational(1));
  for (unsigned i = 0; i < seed.j; ++i) value = complex_mul(value, zbar);
  for (unsigned i = 0; i < seed.k; ++i) value = complex_mul(value, z);

  // Conjugation symmetry makes u even and v odd in s; rewrite u = a(t, s^2),
  // v = s b(t, s^2).
  AxialPair out;
  for (const auto& [mono, coeff] : value.re.terms()) {
    const unsigned s_exp = mono.exp(1);
    if (s_exp % 2 != 0) throw Error("seed u-part is not even in s");
    out.a.add_term(Monomial({mono.exp(0), s_exp / 2}), coeff);
  }
  for (const auto& [mono, coeff] : value.im.terms()) {
    const unsigned s_exp = mono.exp(1);
    if (s_exp % 2 != 1) throw Error("seed v-part is not odd in s");
    out.b.add_term(Monomial({mono.exp(0), (s_exp - 1) / 2}), coeff);
  }
  return out;
}

AxialPair axial_add(const AxialPair& x, const AxialPair& y) {
  return {x.a + y.a, x.b + y.b};
}

AxialPair axial_scale(const AxialPair& x, const Rational& c) {
  return {x.a.scaled(c), x.b.scaled(c)};
}

AxialPair axial_mul(const AxialPair& x, const AxialPair& y) {
  const ScalarPoly q = ScalarPoly::variable(2, kAxialQ);
  return {x.a * y.a - (x.b * y.b) * q, x.a * y.b + x.b * y.a};
}

AxialPair dbar(const AxialPair& x) {
  const ScalarPoly q = ScalarPoly::variable(2, kAxialQ);
  const Rational half = make_rational(1, 2);
  ScalarPoly a_part = x.a.derivative(kAxialT) - x.b - q.scaled(Rational(2)) * x.b.derivative(kAxialQ);
  ScalarPoly b_part = x.b.derivative(kAxialT) + x.a.derivative(kAxialQ).scaled(Rational(2));
  return {a_part.scaled(half), b_part.scaled(half)};
}

AxialPair delta_z(const AxialPair& x) {
  const ScalarPoly q = ScalarPoly::variable(2, kAxialQ);
  ScalarPoly a_part = x.a.derivative(kAxialT).derivative(kAxialT) +
                      x.a.derivative(kAxialQ).scaled(Rational(2)) +
                      q.scaled(Rational(4)) * x.a.derivative(kAxialQ).derivative(kAxialQ);
  ScalarPoly b_part = x.b.derivative(kAxialT).derivative(kAxialT) +
                      x.b.derivative(kAxialQ).scaled(Rational(6)) +
                      q.scaled(Rational(4)) * x.b.derivative(kAxialQ).derivative(kAxialQ);
  return {a_part, b_part};
}

ScalarPoly d_lower(unsigned m, const ScalarPoly& a) {
  ScalarPoly out = a;
  for (unsigned i = 0; i < m; ++i) out = out.derivative(kAxialQ).scaled(Rational(2));
  return out;
}

ScalarPoly d_upper(unsigned m, const ScalarPoly& b) {
  // In the (t, q) encoding both towers collapse to (2 d/dq)^m; they differ
  // only in which parity class they act on.
  return d_lower(m, b);
}

Rational d_coeff(unsigned n, const Rational& mu, unsigned j) {
  Rational product(1);
  for (unsigned i = 1; i <= j; ++i) {
    const Rational factor =
        Rational(2 * static_cast<long>(n)) + mu - Rational(2 * static_cast<long>(i) - 1);
    if (is_zero(factor)) return Rational(0);
    product *= factor;
  }
  return product;
}

AxialPair lemma32_closed_form(unsigned m, unsigned n, const Rational& mu, const AxialPair& x) {
  AxialPair sum;
  for (unsigned j = 0; j <= m; ++j) {
    const Rational weight = d_coeff(n, mu, j) * Rational(binomial(m, j));
    if (is_zero(weight)) continue;
    AxialPair inner = x;
    for (unsigned i = 0; i < m - j; ++i) inner = delta_z(inner);
    AxialPair towered{d_lower(j, inner.a), d_upper(j, inner.b)};
    sum = axial_add(sum, axial_scale(towered, weight));
  }
  return sum;
}

VekuaResult vekua_check(const AxialPair& x, const Rational& c) {
  const ScalarPoly q = ScalarPoly::variable(2, kAxialQ);
  VekuaResult result;
  result.residual1 = x.a.derivative(kAxialT) - x.b.scaled(c + Rational(1)) -
                     q.scaled(Rational(2)) * x.b.derivative(kAxialQ);
  result.residual2 = x.b.derivative(kAxialT) + x.a.derivative(kAxialQ).scaled(Rational(2));
  result.ok = result.residual1.is_zero() && result.residual2.is_zero();
  return result;
}

bool polyanalytic_order_check(unsigned k, const AxialPair& x) {
  AxialPair current = x;
  for (unsigned i = 0; i < k; ++i) current = dbar(current);
  return current.is_zero();
}

ComplexSeed parse_seed_spec(std::string_view spec) {
  // zbar^j*z^k; star separates at most two factors; exponent defaults to 1.
  ComplexSeed seed;
  bool saw_z = false, saw_zbar = false;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t star = spec.find('*', pos);
    std::string_view part =
        star == std::string_view::npos ? spec.substr(pos) : spec.substr(pos, star - pos);
    unsigned* slot = nullptr;
    std::string_view rest;
    if (part.rfind("zbar", 0) == 0) {
      if (saw_zbar) throw UsageError("duplicate zbar factor in seed spec");
      saw_zbar = true;
      slot = &seed.j;
      rest = part.substr(4);
    } else if (part.rfind("z", 0) == 0) {
      if (saw_z) throw UsageError("duplicate z factor in seed spec");
      saw_z = true;
      slot = &seed.k;
      rest = part.substr(1);
    } else {
      throw UsageError("seed spec factors are zbar^j or z^k");
    }
    if (rest.empty()) {
      *slot = 1;
    } else {
      if (rest[0] != '^') throw UsageError("seed exponent must use ^");
      rest.remove_prefix(1);
      if (rest.empty()) throw UsageError("missing seed exponent");
      unsigned value = 0;
      for (char ch : rest) {
        if (ch < '0' || ch > '9') throw UsageError("seed exponent must be a non-negative integer");
        value = value * 10 + static_cast<unsigned>(ch - '0');
      }
      *slot = value;
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  if (!saw_z && !saw_zbar) throw UsageError("empty seed spec");
  return seed;
}

std::string seed_spec_string(const ComplexSeed& seed) {
  return "zbar^" + std::to_string(seed.j) + "*z^" + std::to_string(seed.k);
}

}  // namespace dunkl
