// Batch front end: parse group/seed/polynomial specifications, run the
// verification suites, and emit deterministic reports.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/pipeline.hpp"
#include "dunkl/poly_text.hpp"
#include "dunkl/report.hpp"
#include "dunkl/suites.hpp"
#include "dunkl/version.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitSpecError = 2;
constexpr int kExitInternalError = 3;

struct CommonFlags {
  std::string group;
  std::string seed;
  int m = -1, n = -1, k = -1;
  std::string poly;
  bool json = false;
  bool negative_control = false;
  unsigned max_degree = 8;
  std::uint64_t rand_seed = 12345;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--group", flags.group, "group spec, e.g. a1:d=2:kappa=1/2,1");
  cmd->add_option("--seed", flags.seed, "seed spec, e.g. zbar^1*z^3");
  cmd->add_option("--m", flags.m, "pin the iteration order m")->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", flags.n, "pin the factor degree n")->check(CLI::NonNegativeNumber);
  cmd->add_option("--k", flags.k, "pin the power k")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--json", flags.json, "structured report on stdout");
  cmd->add_flag("--negative-control", flags.negative_control,
                "expect a failure instead of a pass (fueter31)");
  cmd->add_option("--max-degree", flags.max_degree, "refuse inputs above this total degree");
  cmd->add_option("--rand-seed", flags.rand_seed, "deterministic random seed");
}

dunkl::CaseSpec to_spec(const std::string& suite, const CommonFlags& flags) {
  dunkl::CaseSpec spec;
  spec.suite = suite;
  spec.group_spec = flags.group;
  spec.seed_spec = flags.seed;
  if (flags.m >= 0) spec.m = static_cast<unsigned>(flags.m);
  if (flags.n >= 0) spec.n = static_cast<unsigned>(flags.n);
  if (flags.k >= 0) spec.k = static_cast<unsigned>(flags.k);
  spec.poly_text = flags.poly;
  spec.negative_control = flags.negative_control;
  spec.max_degree = flags.max_degree;
  spec.rand_seed = flags.rand_seed;
  return spec;
}

int emit_and_grade(const dunkl::CaseSpec& spec,
                   const std::vector<dunkl::VerificationReport>& reports, bool json) {
  std::cout << (json ? dunkl::render_json(reports) : dunkl::render_text(reports));
  return dunkl::suite_passed(spec, reports) ? kExitPass : kExitCheckFailure;
}

int run_verify(const std::string& suite, const CommonFlags& flags) {
  const auto spec = to_spec(suite, flags);
  const auto reports = dunkl::run_suite(spec);
  return emit_and_grade(spec, reports, flags.json);
}

int run_single_poly(const std::string& suite, const CommonFlags& flags) {
  if (flags.poly.empty()) throw dunkl::UsageError("--poly is required");
  auto spec = to_spec(suite, flags);
  const auto reports = dunkl::run_suite(spec);
  return emit_and_grade(spec, reports, flags.json);
}

int run_basis(const CommonFlags& flags) {
  if (flags.n < 0) throw dunkl::UsageError("--n is required");
  const std::string group =
      flags.group.empty() ? dunkl::default_groups().front() : flags.group;
  dunkl::DunklContext ctx(dunkl::parse_group_spec(group));
  const auto basis = dunkl::monogenic_basis(ctx, static_cast<unsigned>(flags.n));
  if (flags.json) {
    std::vector<dunkl::VerificationReport> reports(1);
    reports[0].case_id = "basis/" + group + "/n=" + std::to_string(flags.n);
    reports[0].rand_seed = flags.rand_seed;
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
      reports[0].add("basis.elt" + std::to_string(i), true, dunkl::to_text(basis.elements[i]));
    std::cout << dunkl::render_json(reports);
  } else {
    std::cout << "# " << group << " M(" << flags.n << "), dimension "
              << basis.elements.size() << "\n";
    for (const auto& element : basis.elements) std::cout << dunkl::to_text(element) << "\n";
  }
  return kExitPass;
}

int run_list_groups() {
  std::cout << "a1  sign flips per axis; spec a1:d=<n>:kappa=<k1,..,kd>\n"
            << "sd  symmetric group on the space coordinates; spec sd:d=<n>:kappa=<k>\n"
            << "bd  signed permutations; spec bd:d=<n>:kappa=<short,long>\n"
            << "b2planar  alias for bd:d=2, the dihedral group of the square\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Dunkl-Clifford operator identities"};
  app.set_version_flag("--version", std::string(dunkl::kEngineVersion));
  app.require_subcommand(1);

  std::string verify_suite;
  CommonFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", verify_suite,
                     "one of: commute gamma lemma21 lemma32 fueter31 fueter43 "
                     "fischer ck validate-group all")
      ->required();
  add_common(verify, verify_flags);

  CommonFlags fischer_flags;
  auto* fischer = app.add_subcommand("fischer", "decompose one homogeneous polynomial");
  fischer->add_option("--poly", fischer_flags.poly, "polynomial text")->required();
  add_common(fischer, fischer_flags);

  CommonFlags ck_flags;
  auto* ck = app.add_subcommand("ck", "monogenic extension of one x_0-free polynomial");
  ck->add_option("--poly", ck_flags.poly, "polynomial text")->required();
  add_common(ck, ck_flags);

  CommonFlags basis_flags;
  auto* basis = app.add_subcommand("basis", "print a monogenic basis");
  add_common(basis, basis_flags);

  app.add_subcommand("list-groups", "describe the built-in group families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitSpecError;
  }

  try {
    if (verify->parsed()) return run_verify(verify_suite, verify_flags);
    if (fischer->parsed()) return run_single_poly("fischer", fischer_flags);
    if (ck->parsed()) return run_single_poly("ck", ck_flags);
    if (basis->parsed()) return run_basis(basis_flags);
    return run_list_groups();
  } catch (const dunkl::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const dunkl::NonDivisible& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const dunkl::SolveFailed& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const dunkl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}
