#include "dunkl/pipeline.hpp"

#include <algorithm>
#include <map>

#include "dunkl/errors.hpp"
#include "dunkl/linalg.hpp"
#include "dunkl/poly_text.hpp"

namespace dunkl {

namespace {

void emit_monomials(int d, int var, unsigned remaining, std::vector<unsigned>& exps,
                    std::vector<Monomial>& out) {
  if (var == d) {
    exps[static_cast<std::size_t>(var)] = remaining;
    out.emplace_back(exps);
    exps[static_cast<std::size_t>(var)] = 0;
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    exps[static_cast<std::size_t>(var)] = e;
    emit_monomials(d, var + 1, remaining - e, exps, out);
  }
  exps[static_cast<std::size_t>(var)] = 0;
}

// Coordinates of p in the (monomial, blade) basis; throws if p has a term
// outside the basis.
std::vector<Rational> coordinates(const CliffordPolynomial& p,
                                  const std::map<Monomial, int>& mono_index,
                                  const std::map<Blade, int>& blade_index) {
  std::vector<Rational> coords(mono_index.size() * blade_index.size(), Rational(0));
  for (const auto& [blade, poly] : p.terms()) {
    const int bi = blade_index.at(blade);
    for (const auto& [mono, coeff] : poly.terms()) {
      auto it = mono_index.find(mono);
      if (it == mono_index.end()) throw InternalError("coordinate outside basis");
      coords[static_cast<std::size_t>(it->second) * blade_index.size() +
             static_cast<std::size_t>(bi)] = coeff;
    }
  }
  return coords;
}

std::map<Monomial, int> index_of(const std::vector<Monomial>& monomials) {
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    index.emplace(monomials[i], static_cast<int>(i));
  return index;
}

std::map<Blade, int> index_of(const std::vector<Blade>& blades) {
  std::map<Blade, int> index;
  for (std::size_t i = 0; i < blades.size(); ++i) index.emplace(blades[i], static_cast<int>(i));
  return index;
}

CliffordPolynomial x_power(const DunklContext& ctx, unsigned k) {
  return CliffordPolynomial::vector_x(ctx.dim()).pow(k);
}

CliffordPolynomial laplacian_power(const DunklContext& ctx, const CliffordPolynomial& p,
                                   unsigned n) {
  CliffordPolynomial out = p;
  for (unsigned i = 0; i < n && !out.is_zero(); ++i)
    out = dunkl_laplacian(ctx, out, Ambient::WithX0);
  return out;
}

AxialPair part_pair(const AxialPair& pair, AxialPart part) {
  if (part == AxialPart::Scalar) return {pair.a, ScalarPoly(2)};
  return {ScalarPoly(2), pair.b};
}

}  // namespace

MonogenicityResult is_dunkl_monogenic(const DunklContext& ctx, const CliffordPolynomial& p,
                                      MonogenicOperator op) {
  CliffordPolynomial residual =
      op == MonogenicOperator::Dirac ? dunkl_dirac(ctx, p) : dunkl_cauchy_riemann(ctx, p);
  const bool monogenic = residual.is_zero();
  return {monogenic, std::move(residual)};
}

std::optional<unsigned> homogeneous_degree(const CliffordPolynomial& p) {
  const auto parts = p.homogeneous_components();
  if (parts.empty()) return 0u;
  if (parts.size() > 1) return std::nullopt;
  return parts[0].first;
}

std::vector<Monomial> space_monomials(int d, unsigned n) {
  // x_0 exponent stays zero: start the recursion at variable 1.
  std::vector<Monomial> out;
  std::vector<unsigned> exps(static_cast<std::size_t>(d + 1), 0);
  emit_monomials(d, 1, n, exps, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> full_monomials(int d, unsigned n) {
  std::vector<Monomial> out;
  std::vector<unsigned> exps(static_cast<std::size_t>(d + 1), 0);
  emit_monomials(d, 0, n, exps, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Blade> all_blades(int d) {
  std::vector<Blade> blades;
  blades.reserve(1u << d);
  for (std::uint32_t bits = 0; bits < (1u << d); ++bits)
    blades.push_back(Blade::from_bits(bits));
  std::sort(blades.begin(), blades.end());
  return blades;
}

MonogenicBasis monogenic_basis(const DunklContext& ctx, unsigned n) {
  const int d = ctx.dim();
  const auto monos = space_monomials(d, n);
  const auto blades = all_blades(d);
  const std::size_t cols = monos.size() * blades.size();

  MonogenicBasis basis;
  basis.degree = n;
  if (n == 0) {
    // Dirac kills constants; the basis is the blades themselves.
    for (const auto& blade : blades)
      basis.elements.push_back(
          CliffordPolynomial::component(d, blade, ScalarPoly::constant(d + 1, Rational(1))));
    return basis;
  }

  const auto target_monos = space_monomials(d, n - 1);
  const auto target_mono_index = index_of(target_monos);
  const auto blade_index = index_of(blades);
  Mat matrix(static_cast<int>(target_monos.size() * blades.size()), static_cast<int>(cols));

  // Dirac(m e_A) = sum_i (e_i e_A) T_i(m): compute the T_i images once per
  // monomial and fan them out over the blades.
  for (std::size_t mi = 0; mi < monos.size(); ++mi) {
    const CliffordPolynomial mono_poly = CliffordPolynomial::component(
        d, Blade(), ScalarPoly::monomial(monos[mi], Rational(1)));
    std::vector<ScalarPoly> t_images;
    t_images.reserve(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i)
      t_images.push_back(dunkl_derivative(ctx, i, mono_poly).component(Blade()));
    for (std::size_t bi = 0; bi < blades.size(); ++bi) {
      const int col = static_cast<int>(mi * blades.size() + bi);
      for (int i = 1; i <= d; ++i) {
        const ScalarPoly& image = t_images[static_cast<std::size_t>(i - 1)];
        if (image.is_zero()) continue;
        auto [sign, out_blade] = blade_product(Blade::from_indices({i}), blades[bi]);
        const int out_bi = blade_index.at(out_blade);
        for (const auto& [mono, coeff] : image.terms()) {
          const int row = target_mono_index.at(mono) * static_cast<int>(blades.size()) + out_bi;
          matrix.at(row, col) += sign < 0 ? -coeff : coeff;
        }
      }
    }
  }

  for (const auto& vec : nullspace(matrix)) {
    CliffordPolynomial element(d);
    for (std::size_t mi = 0; mi < monos.size(); ++mi)
      for (std::size_t bi = 0; bi < blades.size(); ++bi) {
        const Rational& c = vec[mi * blades.size() + bi];
        if (is_zero(c)) continue;
        element.add_component(blades[bi], ScalarPoly::monomial(monos[mi], c));
      }
    basis.elements.push_back(std::move(element));
  }
  return basis;
}

FischerDecomposition fischer_decompose(const DunklContext& ctx, const CliffordPolynomial& p) {
  const int d = ctx.dim();
  if (p.depends_on(0)) throw DependsOnX0("Fischer decomposition expects x_0-free input");
  const auto deg = homogeneous_degree(p);
  if (!deg) throw NotHomogeneous("Fischer decomposition expects homogeneous input");
  const unsigned n = *deg;

  const auto monos = space_monomials(d, n);
  const auto blades = all_blades(d);
  const auto mono_index = index_of(monos);
  const auto blade_index = index_of(blades);
  const std::size_t dim_pn = monos.size() * blades.size();

  // Generators x^k M(n-k), k ascending, basis order within each k.
  std::vector<std::vector<CliffordPolynomial>> generator_groups;
  std::vector<std::vector<Rational>> columns;
  for (unsigned k = 0; k <= n; ++k) {
    const auto basis = monogenic_basis(ctx, n - k);
    const CliffordPolynomial xk = x_power(ctx, k);
    std::vector<CliffordPolynomial> group;
    for (const auto& element : basis.elements) {
      CliffordPolynomial generator = xk * element;
      columns.push_back(coordinates(generator, mono_index, blade_index));
      group.push_back(element);
    }
    generator_groups.push_back(std::move(group));
  }

  Mat matrix(static_cast<int>(dim_pn), static_cast<int>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < dim_pn; ++r)
      matrix.at(static_cast<int>(r), static_cast<int>(c)) = columns[c][r];

  const auto rhs = coordinates(p, mono_index, blade_index);
  const SolveResult solution = solve(matrix, rhs);
  if (solution.status != SolveStatus::Unique)
    throw SolveFailed("Fischer system is not uniquely solvable");

  FischerDecomposition dec;
  std::size_t offset = 0;
  for (unsigned k = 0; k <= n; ++k) {
    CliffordPolynomial part(d);
    for (const auto& element : generator_groups[k]) {
      part = part + element.scaled(solution.x[offset]);
      ++offset;
    }
    dec.parts.push_back(std::move(part));
  }
  return dec;
}

CliffordPolynomial fischer_recompose(const DunklContext& ctx, const FischerDecomposition& dec) {
  CliffordPolynomial sum(ctx.dim());
  for (std::size_t k = 0; k < dec.parts.size(); ++k)
    sum = sum + x_power(ctx, static_cast<unsigned>(k)) * dec.parts[k];
  return sum;
}

CliffordPolynomial ck_extend(const DunklContext& ctx, const CliffordPolynomial& g) {
  if (g.depends_on(0)) throw DependsOnX0("CK extension input must not involve x_0");
  const int d = ctx.dim();
  CliffordPolynomial sum(d);
  CliffordPolynomial dirac_power = g;
  const ScalarPoly minus_x0 = -ScalarPoly::variable(d + 1, 0);
  ScalarPoly x0_factor = ScalarPoly::constant(d + 1, Rational(1));  // (-x_0)^j / j!
  for (unsigned j = 0;; ++j) {
    if (j > 0) {
      dirac_power = dunkl_dirac(ctx, dirac_power);
      x0_factor = (x0_factor * minus_x0).scaled(make_rational(1, static_cast<long>(j)));
    }
    if (dirac_power.is_zero()) break;
    sum = sum + dirac_power.scaled(x0_factor);
  }
  return sum;
}

CliffordPolynomial restrict_to_space(const CliffordPolynomial& p) {
  Mat m = Mat::identity(p.dim() + 1);
  m.at(0, 0) = Rational(0);
  return p.substitute_linear(m);
}

CliffordPolynomial embed_axial(const DunklContext& ctx, const AxialPair& pair,
                               const CliffordPolynomial& p) {
  const int d = ctx.dim();
  const std::vector<ScalarPoly> images = {ScalarPoly::variable(d + 1, 0),
                                          CliffordPolynomial::radial_q(d)};
  const ScalarPoly a_sub = pair.a.substitute(images);
  const ScalarPoly b_sub = pair.b.substitute(images);
  CliffordPolynomial axial(d);
  axial.add_component(Blade(), a_sub);
  axial = axial + CliffordPolynomial::vector_x(d).scaled(b_sub);
  return axial * p;
}

VerificationReport lemma21_check(const DunklContext& ctx, unsigned k,
                                 const CliffordPolynomial& p_n) {
  VerificationReport report;
  const auto deg = homogeneous_degree(p_n);
  const auto monogenic = is_dunkl_monogenic(ctx, p_n, MonogenicOperator::Dirac);
  report.add("factor.homogeneous", deg.has_value());
  report.add("factor.monogenic", monogenic.monogenic, to_text(monogenic.residual));
  if (!deg || !monogenic.monogenic) return report;
  const unsigned n = *deg;

  const CliffordPolynomial lhs = dunkl_dirac(ctx, x_power(ctx, k) * p_n);
  CliffordPolynomial expected(ctx.dim());
  if (k > 0) {
    const Rational constant =
        k % 2 == 0 ? Rational(static_cast<long>(k))
                   : Rational(static_cast<long>(k)) + ctx.mu() +
                         Rational(2 * static_cast<long>(n) - 1);
    expected = (x_power(ctx, k - 1) * p_n).scaled(-constant);
  }
  const CliffordPolynomial diff = lhs - expected;
  report.add("lemma21.match", diff.is_zero(), to_text(diff));
  return report;
}

VerificationReport lemma32_check(const DunklContext& ctx, unsigned m, const AxialPair& pair,
                                 const CliffordPolynomial& p_n, AxialPart part) {
  VerificationReport report;
  const auto deg = homogeneous_degree(p_n);
  const auto monogenic = is_dunkl_monogenic(ctx, p_n, MonogenicOperator::Dirac);
  report.add("factor.homogeneous", deg.has_value());
  report.add("factor.monogenic", monogenic.monogenic, to_text(monogenic.residual));
  if (!deg || !monogenic.monogenic) return report;

  const AxialPair selected = part_pair(pair, part);
  const CliffordPolynomial lhs = laplacian_power(ctx, embed_axial(ctx, selected, p_n), m);
  const CliffordPolynomial rhs =
      embed_axial(ctx, lemma32_closed_form(m, *deg, ctx.mu(), selected), p_n);
  const CliffordPolynomial diff = lhs - rhs;
  report.add("lemma32.closed_form_match", diff.is_zero(), to_text(diff));
  return report;
}

TheoremResult fueter_theorem31(const DunklContext& ctx, const ComplexSeed& seed, unsigned m,
                               const CliffordPolynomial& p_n, const Fueter31Options& options) {
  const long mu = ctx.mu_odd();
  if (mu < 0)
    throw ParityViolation("Fueter exponent needs odd mu, got " + to_string(ctx.mu()));
  if (seed.j > m && !options.allow_seed_overflow)
    throw SeedOrderTooHigh("seed conjugate order exceeds m");

  VerificationReport report;
  const auto deg = homogeneous_degree(p_n);
  const auto factor_check = is_dunkl_monogenic(ctx, p_n, MonogenicOperator::Dirac);
  report.add("factor.homogeneous", deg.has_value());
  report.add("factor.monogenic", factor_check.monogenic, to_text(factor_check.residual));
  if (!deg || !factor_check.monogenic)
    throw FactorNotMonogenic("theorem factor must be homogeneous Dunkl-monogenic");
  const unsigned n = *deg;

  const long exponent_base =
      static_cast<long>(m) + static_cast<long>(n) + (mu - 1) / 2 + options.exponent_delta;
  if (exponent_base < 0) throw UsageError("negative Fueter exponent");
  const auto exponent = static_cast<unsigned>(exponent_base);

  const AxialPair pair = seed_to_axial(seed);
  const CliffordPolynomial embedded = embed_axial(ctx, pair, p_n);
  const CliffordPolynomial result = laplacian_power(ctx, embedded, exponent);

  const auto dirac_zero = is_dunkl_monogenic(ctx, result, MonogenicOperator::CauchyRiemann);
  report.add("fueter.monogenic_result", dirac_zero.monogenic, to_text(dirac_zero.residual));

  // The closed form at the full exponent also yields the axial pair (A, B)
  // of the result, which must satisfy the Vekua system with c = 2n + mu - 1.
  const AxialPair closed = lemma32_closed_form(exponent, n, ctx.mu(), pair);
  const CliffordPolynomial closed_embedded = embed_axial(ctx, closed, p_n);
  const CliffordPolynomial closed_diff = closed_embedded - result;
  report.add("lemma32.closed_form_match", closed_diff.is_zero(), to_text(closed_diff));

  const Rational c = Rational(2 * static_cast<long>(n)) + ctx.mu() - Rational(1);
  const VekuaResult vekua = vekua_check(closed, c);
  static const std::vector<std::string> tq_names = {"t", "q"};
  report.add("vekua.eq1", vekua.residual1.is_zero(), to_text(vekua.residual1, tq_names));
  report.add("vekua.eq2", vekua.residual2.is_zero(), to_text(vekua.residual2, tq_names));

  return {result, std::move(report)};
}

TheoremResult fueter_theorem43(const DunklContext& ctx, unsigned k,
                               const CliffordPolynomial& p) {
  const long mu = ctx.mu_odd();
  if (mu < 0)
    throw ParityViolation("Fueter exponent needs odd mu, got " + to_string(ctx.mu()));
  const auto deg = homogeneous_degree(p);
  if (!deg) throw NotHomogeneous("theorem factor must be homogeneous");
  const auto factor_check = is_dunkl_monogenic(ctx, p, MonogenicOperator::CauchyRiemann);
  if (!factor_check.monogenic)
    throw FactorNotMonogenic("theorem factor must satisfy the Cauchy-Riemann operator");
  const unsigned n = *deg;

  VerificationReport report;
  report.add("factor.homogeneous", true);
  report.add("factor.monogenic", true);

  const auto exponent = static_cast<unsigned>(static_cast<long>(n) + (mu - 1) / 2);
  const AxialPair pair = seed_to_axial(ComplexSeed{0, k});
  const CliffordPolynomial result = laplacian_power(ctx, embed_axial(ctx, pair, p), exponent);

  const auto dirac_zero = is_dunkl_monogenic(ctx, result, MonogenicOperator::CauchyRiemann);
  report.add("fueter.monogenic_result", dirac_zero.monogenic, to_text(dirac_zero.residual));
  return {result, std::move(report)};
}

VerificationReport ck_shape_check(const DunklContext& ctx, unsigned k,
                                  const CliffordPolynomial& p_nk) {
  VerificationReport report;
  const int d = ctx.dim();
  const auto deg = homogeneous_degree(p_nk);
  const auto monogenic = is_dunkl_monogenic(ctx, p_nk, MonogenicOperator::Dirac);
  report.add("factor.homogeneous", deg.has_value());
  report.add("factor.monogenic", monogenic.monogenic, to_text(monogenic.residual));
  if (!deg || !monogenic.monogenic) return report;
  const unsigned n = *deg + k;

  const CliffordPolynomial extension = ck_extend(ctx, x_power(ctx, k) * p_nk);

  // Membership in span{x_0^j x^{k-j} P : j = 0..k}.
  const auto monos = full_monomials(d, n);
  const auto blades = all_blades(d);
  const auto mono_index = index_of(monos);
  const auto blade_index = index_of(blades);
  std::vector<std::vector<Rational>> columns;
  for (unsigned j = 0; j <= k; ++j) {
    const ScalarPoly x0_pow = ScalarPoly::monomial(Monomial::unit(d + 1, 0, j), Rational(1));
    CliffordPolynomial candidate = (x_power(ctx, k - j) * p_nk).scaled(x0_pow);
    columns.push_back(coordinates(candidate, mono_index, blade_index));
  }
  Mat matrix(static_cast<int>(monos.size() * blades.size()), static_cast<int>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < columns[c].size(); ++r)
      matrix.at(static_cast<int>(r), static_cast<int>(c)) = columns[c][r];
  const auto rhs = coordinates(extension, mono_index, blade_index);
  const SolveResult solution = solve(matrix, rhs);
  const bool member = solution.status != SolveStatus::NoSolution;
  report.add("ck_shape.span_membership", member);
  if (!member) return report;

  // Induced planar pair: x_0^j x^{k-j} contributes t^j (-q)^{(k-j)/2} to the
  // even part, or t^j (-q)^{(k-j-1)/2} to the odd part.
  AxialPair g;
  for (unsigned j = 0; j <= k; ++j) {
    const Rational& cj = solution.x[j];
    report.add("ck_shape.c_" + std::to_string(j), true, to_string(cj));
    if (is_zero(cj)) continue;
    const unsigned power = k - j;
    const unsigned q_exp = power / 2;
    const Rational sign = q_exp % 2 == 0 ? Rational(1) : Rational(-1);
    if (power % 2 == 0)
      g.a.add_term(Monomial({j, q_exp}), cj * sign);
    else
      g.b.add_term(Monomial({j, q_exp}), cj * sign);
  }
  report.add("ck_shape.polyanalytic_order", polyanalytic_order_check(k + 1, g));
  return report;
}

}  // namespace dunkl
