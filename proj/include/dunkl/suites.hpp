#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dunkl/pipeline.hpp"
#include "dunkl/random.hpp"
#include "dunkl/report.hpp"

namespace dunkl {

// One batch verification request. Optional integers pin a grid axis; absent
// values run the suite's default grid.
struct CaseSpec {
  std::string suite;  // lemma21 | commute | gamma | lemma32 | fueter31 |
                      // fueter43 | fischer | ck | validate-group | all
  std::string group_spec;  // empty -> suite default group list
  std::string seed_spec;   // empty -> suite default seed grid
  std::optional<unsigned> m;
  std::optional<unsigned> n;
  std::optional<unsigned> k;
  std::string poly_text;  // single-polynomial mode for fischer / ck
  bool negative_control = false;
  unsigned max_degree = 8;
  std::uint64_t rand_seed = 12345;
};

// Groups exercised by default: one per built-in family.
const std::vector<std::string>& default_groups();
// Odd Dunkl dimension, as the Fueter exponent requires; includes the
// classical d=3 configuration.
const std::vector<std::string>& mu_odd_groups();

std::vector<VerificationReport> run_suite(const CaseSpec& spec);

// Exit-code semantics: in negative-control mode only the *.triggered checks
// decide; otherwise every check must pass.
bool suite_passed(const CaseSpec& spec, const std::vector<VerificationReport>& reports);

// Deterministic random polynomial helpers shared by suites and tests.
CliffordPolynomial random_clifford_poly(Rng& rng, int dim, unsigned max_degree, int terms,
                                        bool include_x0);
CliffordPolynomial random_homogeneous_poly(Rng& rng, int dim, unsigned degree, int terms);

// A few deterministic factors from a monogenic basis: edge elements plus a
// random rational combination.
std::vector<CliffordPolynomial> pick_test_factors(const MonogenicBasis& basis, Rng& rng,
                                                  std::size_t count);

}  // namespace dunkl
