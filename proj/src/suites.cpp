#include "dunkl/suites.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <memory>
#include <map>
#include <thread>

#include "dunkl/errors.hpp"
#include "dunkl/linalg.hpp"
#include "dunkl/poly_text.hpp"

namespace dunkl {

namespace {

using CaseFn = std::function<VerificationReport(std::uint64_t case_seed)>;

struct CaseJob {
  std::string id;
  CaseFn run;
};

// Runs the jobs on a small pool; report order follows job order, so output
// is independent of scheduling.
std::vector<VerificationReport> run_jobs(const std::vector<CaseJob>& jobs,
                                         std::uint64_t base_seed) {
  std::vector<VerificationReport> reports(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  const std::size_t worker_count =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), jobs.size());

  auto worker = [&]() {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= jobs.size()) return;
      try {
        VerificationReport report = jobs[index].run(derive_seed(base_seed, index));
        report.case_id = jobs[index].id;
        report.rand_seed = base_seed;
        reports[index] = std::move(report);
      } catch (...) {
        errors[index] = std::current_exception();
      }
    }
  };

  if (worker_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < worker_count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);
  return reports;
}

std::vector<std::string> group_list(const CaseSpec& spec, const std::vector<std::string>& fallback) {
  if (!spec.group_spec.empty()) return {spec.group_spec};
  return fallback;
}

std::vector<unsigned> axis(const std::optional<unsigned>& pin, unsigned upper) {
  if (pin) return {*pin};
  std::vector<unsigned> values;
  for (unsigned v = 0; v <= upper; ++v) values.push_back(v);
  return values;
}

std::vector<ComplexSeed> seed_grid(const CaseSpec& spec, bool holomorphic_only) {
  if (!spec.seed_spec.empty()) return {parse_seed_spec(spec.seed_spec)};
  std::vector<ComplexSeed> seeds;
  for (unsigned k = 0; k <= 3; ++k) seeds.push_back({0, k});
  if (!holomorphic_only)
    for (unsigned k = 0; k <= 3; ++k) seeds.push_back({1, k});
  return seeds;
}

void enforce_budget(const CaseSpec& spec, unsigned input_degree) {
  if (input_degree > spec.max_degree)
    throw BudgetExceeded("input degree " + std::to_string(input_degree) +
                         " exceeds --max-degree " + std::to_string(spec.max_degree));
}

std::string factor_tag(std::size_t index) { return "f" + std::to_string(index); }

// Cached per-group state shared across a suite's cases.
struct GroupSession {
  explicit GroupSession(const std::string& spec) : ctx(parse_group_spec(spec)) {}

  // Bases are computed on the single-threaded build path; workers only read.
  void warm(unsigned n) {
    if (bases.find(n) == bases.end()) bases.emplace(n, monogenic_basis(ctx, n));
  }

  const MonogenicBasis& basis(unsigned n) const { return bases.at(n); }

  DunklContext ctx;
  std::map<unsigned, MonogenicBasis> bases;
};

void append_classical_note(VerificationReport& report, const DunklContext& ctx) {
  if (ctx.group().classical()) report.add("note.classical_mode", true);
}

// ---- suite builders -------------------------------------------------------

std::vector<CaseJob> build_commute(const CaseSpec& spec) {
  std::vector<CaseJob> jobs;
  for (const auto& group : group_list(spec, default_groups())) {
    auto session = std::make_shared<GroupSession>(group);
    for (int p = 0; p < 20; ++p) {
      jobs.push_back(
          {spec.suite + "/" + group + "/p" + std::to_string(p), [session, p](std::uint64_t seed) {
             VerificationReport report;
             Rng rng(seed);
             const int d = session->ctx.dim();
             const auto poly = random_clifford_poly(rng, d, 5, 5, true);
             for (int i = 0; i <= d; ++i) {
               for (int j = i + 1; j <= d; ++j) {
                 const auto diff = dunkl_derivative(session->ctx, i,
                                                    dunkl_derivative(session->ctx, j, poly)) -
                                   dunkl_derivative(session->ctx, j,
                                                    dunkl_derivative(session->ctx, i, poly));
                 report.add("commute.T" + std::to_string(i) + "T" + std::to_string(j),
                            diff.is_zero(), to_text(diff));
               }
             }
             append_classical_note(report, session->ctx);
             return report;
           }});
    }
  }
  return jobs;
}

std::vector<CaseJob> build_gamma(const CaseSpec& spec) {
  std::vector<CaseJob> jobs;
  const auto n_axis = axis(spec.n, 3);
  for (const auto& group : group_list(spec, default_groups())) {
    auto session = std::make_shared<GroupSession>(group);
    for (int p = 0; p < 20; ++p) {
      jobs.push_back({spec.suite + "/" + group + "/spherical/p" + std::to_string(p),
                      [session, p](std::uint64_t seed) {
                        VerificationReport report;
                        Rng rng(seed);
                        const int d = session->ctx.dim();
                        const auto poly = random_clifford_poly(rng, d, 4, 5, false);
                        const auto residual =
                            CliffordPolynomial::vector_x(d) * dunkl_dirac(session->ctx, poly) +
                            euler_operator(poly) + gamma_operator(session->ctx, poly);
                        report.add("gamma.spherical_identity", residual.is_zero(),
                                   to_text(residual));
                        return report;
                      }});
    }
    for (unsigned n : n_axis) {
      session->warm(n);
      jobs.push_back({spec.suite + "/" + group + "/eigen/n=" + std::to_string(n),
                      [session, n](std::uint64_t) {
                        VerificationReport report;
                        const auto& ctx = session->ctx;
                        const auto& basis = session->basis(n);
                        const auto x_vec = CliffordPolynomial::vector_x(ctx.dim());
                        const Rational lower = -Rational(static_cast<long>(n));
                        const Rational upper =
                            ctx.mu() + Rational(static_cast<long>(n)) - Rational(1);
                        for (std::size_t e = 0; e < basis.elements.size(); ++e) {
                          const auto& p = basis.elements[e];
                          const auto tag = "elt" + std::to_string(e);
                          const auto gp = gamma_operator(ctx, p) - p.scaled(lower);
                          report.add("gamma.eigen_pn." + tag, gp.is_zero(), to_text(gp));
                          const auto xp = x_vec * p;
                          const auto gxp = gamma_operator(ctx, xp) - xp.scaled(upper);
                          report.add("gamma.eigen_xpn." + tag, gxp.is_zero(), to_text(gxp));
                        }
                        append_classical_note(report, ctx);
                        return report;
                      }});
    }
  }
  return jobs;
}

std::vector<CaseJob> build_lemma21(const CaseSpec& spec) {
  std::vector<CaseJob> jobs;
  const auto k_axis = axis(spec.k, 4);
  const auto n_axis = axis(spec.n, 2);
  for (const auto& group : group_list(spec, default_groups())) {
    auto session = std::make_shared<GroupSession>(group);
    for (unsigned n : n_axis) {
      session->warm(n);
      jobs.push_back({spec.suite + "/" + group + "/n=" + std::to_string(n),
                      [session, n, k_axis](std::uint64_t seed) {
                        VerificationReport report;
                        Rng rng(seed);
                        const auto factors = pick_test_factors(session->basis(n), rng, 3);
                        for (std::size_t f = 0; f < factors.size(); ++f) {
                          for (unsigned k : k_axis) {
                            auto sub = lemma21_check(session->ctx, k, factors[f]);
                            for (auto& check : sub.checks)
                              report.add(factor_tag(f) + "/k=" + std::to_string(k) + "/" +
                                             check.name,
                                         check.pass, check.residual);
                          }
                        }
                        return report;
                      }});
    }
  }
  return jobs;
}

std::vector<CaseJob> build_lemma32(const CaseSpec& spec) {
  std::vector<CaseJob> jobs;
  const auto m_axis = axis(spec.m, 3);
  const auto n_axis = axis(spec.n, 2);
  const auto seeds = seed_grid(spec, false);
  for (const auto& seed : seeds)
    for (unsigned n : n_axis) enforce_budget(spec, seed.degree() + n);
  for (const auto& group : group_list(spec, mu_odd_groups())) {
    auto session = std::make_shared<GroupSession>(group);
    for (unsigned n : n_axis) {
      session->warm(n);
      for (const auto& seed : seeds) {
        for (unsigned m : m_axis) {
          const std::string id = spec.suite + "/" + group + "/" + seed_spec_string(seed) +
                                 "/m=" + std::to_string(m) + "/n=" + std::to_string(n);
          jobs.push_back({id, [session, seed, m, n](std::uint64_t case_seed) {
                            VerificationReport report;
                            Rng rng(case_seed);
                            const auto pair = seed_to_axial(seed);
                            const auto factors =
                                pick_test_factors(session->basis(n), rng, 2);
                            for (std::size_t f = 0; f < factors.size(); ++f) {
                              for (const AxialPart part :
                                   {AxialPart::Scalar, AxialPart::Vector}) {
                                auto sub = lemma32_check(session->ctx, m, pair, factors[f], part);
                                const char* part_tag =
                                    part == AxialPart::Scalar ? "scalar" : "vector";
                                for (auto& check : sub.checks)
                                  report.add(factor_tag(f) + "/" + part_tag + "/" + check.name,
                                             check.pass, check.residual);
                              }
                            }
                            return report;
                          }});
        }
      }
    }
  }
  return jobs;
}

struct Fueter31Sweep {
  int exponent_delta = 0;
  bool seed_overflow = false;  // use j = m + 1 instead of j <= m
  const char* tag = "";
};

std::vector<CaseJob> build_fueter31(const CaseSpec& spec, const Fueter31Sweep& sweep) {
  std::vector<CaseJob> jobs;
  const auto m_axis = axis(spec.m, 2);
  const auto n_axis = axis(spec.n, 2);
  for (const auto& group : group_list(spec, mu_odd_groups())) {
    auto session = std::make_shared<GroupSession>(group);
    for (unsigned n : n_axis) session->warm(n);
    for (unsigned m : m_axis) {
      std::vector<ComplexSeed> seeds;
      if (!spec.seed_spec.empty()) {
        seeds.push_back(parse_seed_spec(spec.seed_spec));
      } else {
        const unsigned j_lo = sweep.seed_overflow ? m + 1 : 0;
        const unsigned j_hi = sweep.seed_overflow ? m + 1 : m;
        for (unsigned j = j_lo; j <= j_hi; ++j)
          for (unsigned k = 0; k <= 3; ++k) seeds.push_back({j, k});
      }
      for (const auto& seed : seeds) {
        for (unsigned n : n_axis) {
          enforce_budget(spec, seed.degree() + n);
          std::string id = spec.suite + "/" + group + "/" + seed_spec_string(seed) +
                           "/m=" + std::to_string(m) + "/n=" + std::to_string(n);
          if (*sweep.tag != '\0') id += std::string("/") + sweep.tag;
          jobs.push_back({id, [session, seed, m, n, sweep](std::uint64_t case_seed) {
                            VerificationReport report;
                            Rng rng(case_seed);
                            Fueter31Options options;
                            options.exponent_delta = sweep.exponent_delta;
                            options.allow_seed_overflow = sweep.seed_overflow;
                            const auto factors =
                                pick_test_factors(session->basis(n), rng, 2);
                            for (std::size_t f = 0; f < factors.size(); ++f) {
                              auto outcome = fueter_theorem31(session->ctx, seed, m,
                                                              factors[f], options);
                              for (auto& check : outcome.report.checks)
                                report.add(factor_tag(f) + "/" + check.name, check.pass,
                                           check.residual);
                            }
                            append_classical_note(report, session->ctx);
                            return report;
                          }});
        }
      }
    }
  }
  return jobs;
}

std::vector<CaseJob> build_fueter43(const CaseSpec& spec) {
  std::vector<CaseJob> jobs;
  const auto n_axis = axis(spec.n, 2);
  const auto k_axis = axis(spec.k, 3);
  for (const auto& group : group_list(spec, mu_odd_groups())) {
    auto session = std::make_shared<GroupSession>(group);
    for (unsigned n : n_axis) session->warm(n);
    for (unsigned n : n_axis) {
      for (unsigned k : k_axis) {
        enforce_budget(spec, k + n);
        const std::string id = spec.suite + "/" + group + "/z^" + std::to_string(k) +
                               "/n=" + std::to_string(n);
        jobs.push_back({id, [session, n, k](std::uint64_t case_seed) {
                          VerificationReport report;
                          Rng rng(case_seed);
                          const int d = session->ctx.dim();
                          // Random CK-extended factor with full x_0 dependence.
                          CliffordPolynomial g = random_homogeneous_poly(rng, d, n, 3);
                          if (g.is_zero()) g = random_homogeneous_poly(rng, d, n, 3);
                          const auto p = ck_extend(session->ctx, g);
                          auto outcome = fueter_theorem43(session->ctx, k, p);
                          for (auto& check : outcome.report.checks)
                            report.add("ck_factor/" + check.name, check.pass, check.residual);

                          // x_0-free factor: must agree with the seed theorem.
                          const auto& basis = session->basis(n);
                          const auto& flat = basis.elements.front();
                          auto via43 = fueter_theorem43(session->ctx, k, flat);
                          auto via31 = fueter_theorem31(session->ctx, ComplexSeed{0, k}, 0, flat);
                          const auto diff = via43.result - via31.result;
                          report.add("consistency.thm31_path", diff.is_zero(), to_text(diff));
                          return report;
                        }});
      }
      // CK shape of x^k P_{n-k} for k <= 2 (k <= n here, factor degree n-k).
      for (unsigned k = 0; k <= std::min(2u, n); ++k) {
        const std::string id = spec.suite + "/" + group + "/ck_shape/k=" + std::to_string(k) +
                               "/n=" + std::to_string(n);
        jobs.push_back({id, [session, n, k](std::uint64_t case_seed) {
                          VerificationReport report;
                          Rng rng(case_seed);
                          const auto factors =
                              pick_test_factors(session->basis(n - k), rng, 2);
                          for (std::size_t f = 0; f < factors.size(); ++f) {
                            auto sub = ck_shape_check(session->ctx, k, factors[f]);
                            for (auto& check : sub.checks)
                              report.add(factor_tag(f) + "/" + check.name, check.pass,
                                         check.residual);
                          }
                          return report;
                        }});
      }
    }
  }
  return jobs;
}

std::vector<CaseJob> build_fischer(const CaseSpec& spec) {
  std::vector<CaseJob> jobs;
  if (!spec.poly_text.empty()) {
    const std::string group = spec.group_spec.empty() ? default_groups().front() : spec.group_spec;
    auto session = std::make_shared<GroupSession>(group);
    jobs.push_back({spec.suite + "/" + group + "/poly",
                    [session, text = spec.poly_text](std::uint64_t) {
                      VerificationReport report;
                      const auto p = parse_clifford_poly(text, session->ctx.dim());
                      const auto dec = fischer_decompose(session->ctx, p);
                      for (std::size_t k = 0; k < dec.parts.size(); ++k)
                        report.add("part.k=" + std::to_string(k), true, to_text(dec.parts[k]));
                      const auto diff = fischer_recompose(session->ctx, dec) - p;
                      report.add("fischer.recompose", diff.is_zero(), to_text(diff));
                      return report;
                    }});
    return jobs;
  }
  const auto n_axis = axis(spec.n, 4);
  for (const auto& group : group_list(spec, default_groups())) {
    auto session = std::make_shared<GroupSession>(group);
    for (unsigned n : n_axis) session->warm(n);
    for (unsigned n : n_axis) {
      enforce_budget(spec, n);
      jobs.push_back({spec.suite + "/" + group + "/n=" + std::to_string(n),
                      [session, n](std::uint64_t case_seed) {
                        VerificationReport report;
                        Rng rng(case_seed);
                        const auto& ctx = session->ctx;
                        const int d = ctx.dim();

                        // dim P(n) = 2^d C(n+d-1, d-1); the blade factor is
                        // shared, so compare monomial counts.
                        const auto monos = space_monomials(d, n);
                        const bool dim_ok =
                            Integer(static_cast<long>(monos.size())) ==
                            binomial(n + d - 1, d - 1);
                        report.add("fischer.dim_pn", dim_ok,
                                   std::to_string(monos.size() * (1u << d)));

                        // The concatenated generating set spans P(n) exactly.
                        std::size_t generator_count = 0;
                        for (unsigned k = 0; k <= n; ++k)
                          generator_count += session->basis(n - k).elements.size();
                        report.add("fischer.direct_sum_count",
                                   generator_count == monos.size() * (1u << d),
                                   std::to_string(generator_count));

                        for (int round = 0; round < 3; ++round) {
                          auto p = random_homogeneous_poly(rng, d, n, 4);
                          const auto dec = fischer_decompose(ctx, p);
                          const auto diff = fischer_recompose(ctx, dec) - p;
                          report.add("fischer.round_trip.p" + std::to_string(round),
                                     diff.is_zero(), to_text(diff));
                          bool parts_monogenic = true;
                          for (const auto& part : dec.parts)
                            if (!is_dunkl_monogenic(ctx, part, MonogenicOperator::Dirac)
                                     .monogenic)
                              parts_monogenic = false;
                          report.add("fischer.parts_monogenic.p" + std::to_string(round),
                                     parts_monogenic);
                        }
                        return report;
                      }});
    }
  }
  return jobs;
}

std::vector<CaseJob> build_ck(const CaseSpec& spec) {
  std::vector<CaseJob> jobs;
  if (!spec.poly_text.empty()) {
    const std::string group = spec.group_spec.empty() ? default_groups().front() : spec.group_spec;
    auto session = std::make_shared<GroupSession>(group);
    jobs.push_back({spec.suite + "/" + group + "/poly",
                    [session, text = spec.poly_text](std::uint64_t) {
                      VerificationReport report;
                      const auto g = parse_clifford_poly(text, session->ctx.dim());
                      const auto extension = ck_extend(session->ctx, g);
                      report.add("ck.extension", true, to_text(extension));
                      const auto residual =
                          dunkl_cauchy_riemann(session->ctx, extension);
                      report.add("ck.monogenic", residual.is_zero(), to_text(residual));
                      const auto restricted = restrict_to_space(extension) - g;
                      report.add("ck.restriction", restricted.is_zero(), to_text(restricted));
                      return report;
                    }});
    return jobs;
  }
  for (const auto& group : group_list(spec, default_groups())) {
    auto session = std::make_shared<GroupSession>(group);
    for (int p = 0; p < 20; ++p) {
      jobs.push_back({spec.suite + "/" + group + "/p" + std::to_string(p),
                      [session](std::uint64_t case_seed) {
                        VerificationReport report;
                        Rng rng(case_seed);
                        const int d = session->ctx.dim();
                        const auto g = random_clifford_poly(rng, d, 4, 4, false);
                        const auto extension = ck_extend(session->ctx, g);
                        const auto residual = dunkl_cauchy_riemann(session->ctx, extension);
                        report.add("ck.monogenic", residual.is_zero(), to_text(residual));
                        const auto restricted = restrict_to_space(extension) - g;
                        report.add("ck.restriction", restricted.is_zero(), to_text(restricted));
                        return report;
                      }});
    }
    jobs.push_back({spec.suite + "/" + group + "/homogeneity",
                    [session](std::uint64_t case_seed) {
                      VerificationReport report;
                      Rng rng(case_seed);
                      const int d = session->ctx.dim();
                      for (unsigned n = 0; n <= 4; ++n) {
                        const auto g = random_homogeneous_poly(rng, d, n, 3);
                        const auto extension = ck_extend(session->ctx, g);
                        const bool ok =
                            extension.is_zero() || homogeneous_degree(extension) == n;
                        report.add("ck.homogeneous.n=" + std::to_string(n), ok);
                      }
                      return report;
                    }});
  }
  return jobs;
}

std::vector<CaseJob> build_validate(const CaseSpec& spec) {
  std::vector<CaseJob> jobs;
  for (const auto& group : group_list(spec, default_groups())) {
    jobs.push_back({spec.suite + "/" + group, [group](std::uint64_t) {
                      return validate(parse_group_spec(group));
                    }});
  }
  return jobs;
}

std::vector<CaseJob> build_jobs(const CaseSpec& spec, const std::string& suite);

std::vector<CaseJob> build_all(const CaseSpec& spec) {
  std::vector<CaseJob> jobs;
  for (const char* suite : {"validate-group", "commute", "gamma", "lemma21", "lemma32",
                            "fischer", "ck", "fueter31", "fueter43"}) {
    auto sub = build_jobs(spec, suite);
    for (auto& job : sub) jobs.push_back(std::move(job));
  }
  return jobs;
}

std::vector<CaseJob> build_jobs(const CaseSpec& spec, const std::string& suite) {
  CaseSpec local = spec;
  local.suite = suite;
  if (suite == "commute") return build_commute(local);
  if (suite == "gamma") return build_gamma(local);
  if (suite == "lemma21") return build_lemma21(local);
  if (suite == "lemma32") return build_lemma32(local);
  if (suite == "fueter31") return build_fueter31(local, {});
  if (suite == "fueter43") return build_fueter43(local);
  if (suite == "fischer") return build_fischer(local);
  if (suite == "ck") return build_ck(local);
  if (suite == "validate-group") return build_validate(local);
  if (suite == "all") return build_all(local);
  throw UsageError("unknown suite: " + suite);
}

// Negative-control sweeps for fueter31: the same grid with the exponent
// reduced by one, and with seeds just past the admissible conjugate order.
std::vector<VerificationReport> run_fueter31_controls(const CaseSpec& spec) {
  std::vector<VerificationReport> reports;

  Fueter31Sweep exponent_sweep{-1, false, "exponent-1"};
  auto exponent_jobs = build_fueter31(spec, exponent_sweep);
  auto exponent_reports = run_jobs(exponent_jobs, derive_seed(spec.rand_seed, 0xE1));

  Fueter31Sweep overflow_sweep{0, true, "j=m+1"};
  auto overflow_jobs = build_fueter31(spec, overflow_sweep);
  auto overflow_reports = run_jobs(overflow_jobs, derive_seed(spec.rand_seed, 0xE2));

  auto count_monogenic_failures = [](const std::vector<VerificationReport>& rs) {
    std::size_t failures = 0;
    for (const auto& r : rs)
      for (const auto& c : r.checks)
        if (!c.pass && c.name.find("fueter.monogenic_result") != std::string::npos) ++failures;
    return failures;
  };
  const std::size_t exponent_failures = count_monogenic_failures(exponent_reports);
  const std::size_t overflow_failures = count_monogenic_failures(overflow_reports);

  reports.insert(reports.end(), exponent_reports.begin(), exponent_reports.end());
  reports.insert(reports.end(), overflow_reports.begin(), overflow_reports.end());

  VerificationReport summary;
  summary.case_id = "fueter31/negative-control";
  summary.rand_seed = spec.rand_seed;
  summary.add("negative_control.exponent_minus_one.triggered", exponent_failures > 0,
              std::to_string(exponent_failures) + " failing cases");
  summary.add("negative_control.seed_order.triggered", overflow_failures > 0,
              std::to_string(overflow_failures) + " failing cases");
  reports.push_back(std::move(summary));
  return reports;
}

}  // namespace

const std::vector<std::string>& default_groups() {
  static const std::vector<std::string> groups = {
      "a1:d=2:kappa=1/2,1", "sd:d=3:kappa=1", "bd:d=2:kappa=1,1/2"};
  return groups;
}

const std::vector<std::string>& mu_odd_groups() {
  static const std::vector<std::string> groups = {
      "a1:d=2:kappa=1/2,1", "a1:d=3:kappa=1,0,0", "a1:d=3:kappa=0,0,0"};
  return groups;
}

std::vector<VerificationReport> run_suite(const CaseSpec& spec) {
  if (spec.negative_control) {
    if (spec.suite != "fueter31")
      throw UsageError("negative-control mode applies to the fueter31 suite");
    return run_fueter31_controls(spec);
  }
  return run_jobs(build_jobs(spec, spec.suite), spec.rand_seed);
}

bool suite_passed(const CaseSpec& spec, const std::vector<VerificationReport>& reports) {
  if (spec.negative_control) {
    bool ok = true;
    bool found_trigger = false;
    for (const auto& report : reports) {
      for (const auto& check : report.checks) {
        if (check.name.rfind("negative_control.", 0) == 0) {
          found_trigger = true;
          ok = ok && check.pass;
        }
      }
    }
    return found_trigger && ok;
  }
  for (const auto& report : reports)
    if (!report.all_pass()) return false;
  return true;
}

CliffordPolynomial random_clifford_poly(Rng& rng, int dim, unsigned max_degree, int terms,
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

CliffordPolynomial random_homogeneous_poly(Rng& rng, int dim, unsigned degree, int terms) {
  const auto monos = space_monomials(dim, degree);
  CliffordPolynomial p(dim);
  for (int t = 0; t < terms; ++t) {
    const auto& mono = monos[rng.below(monos.size())];
    const auto bits = static_cast<std::uint32_t>(rng.below(1u << dim));
    p.add_component(Blade::from_bits(bits), ScalarPoly::monomial(mono, rng.rational()));
  }
  return p;
}

std::vector<CliffordPolynomial> pick_test_factors(const MonogenicBasis& basis, Rng& rng,
                                                  std::size_t count) {
  std::vector<CliffordPolynomial> factors;
  const auto& elements = basis.elements;
  if (elements.empty()) return factors;
  factors.push_back(elements.front());
  if (count >= 2 && elements.size() > 1) factors.push_back(elements[elements.size() / 2]);
  if (count >= 3) {
    const auto& a = elements[rng.below(elements.size())];
    const auto& b = elements[rng.below(elements.size())];
    auto combo = a.scaled(rng.nonzero_rational()) + b.scaled(rng.nonzero_rational());
    if (combo.is_zero()) combo = elements.front();
    factors.push_back(std::move(combo));
  }
  return factors;
}

}  // namespace dunkl
