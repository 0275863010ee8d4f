#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dunkl/poly.hpp"
#include "dunkl/rational.hpp"
#include "dunkl/report.hpp"

namespace dunkl {

// Root in R^{d+1} with coordinate 0 forced to zero, so every reflection
// fixes the x_0-axis.
struct Root {
  std::vector<Rational> coords;  // length d+1

  int ambient_size() const { return static_cast<int>(coords.size()); }
};

// Primitive integer direction with positive leading coordinate; identifies
// alpha with -alpha and with all rational rescalings.
std::vector<Rational> canonical_root_key(const Root& root);

// sigma_alpha = I - 2 alpha alpha^T / |alpha|^2. Orthogonal, involutive,
// fixes x_0, scale-invariant in alpha.
Mat reflection_matrix(const Root& alpha);

class MultiplicityFunction {
 public:
  void set(const Root& root, Rational value);
  Rational at(const Root& root) const;  // throws UnknownGroup if absent
  bool defined_on(const Root& root) const;

 private:
  std::map<std::vector<Rational>, Rational> values_;
};

class ReflectionGroup {
 public:
  ReflectionGroup(std::string name, int d, std::vector<Root> positive_roots,
                  MultiplicityFunction kappa);

  const std::string& name() const { return name_; }
  int d() const { return d_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const MultiplicityFunction& kappa() const { return kappa_; }
  // Generated closure of the root reflections, identity included.
  const std::vector<Mat>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  Rational gamma_kappa() const;   // sum of kappa over positive roots
  Rational dunkl_dimension() const;  // mu = 2 gamma_kappa + d
  bool classical() const { return is_zero(gamma_kappa()); }

 private:
  std::string name_;
  int d_;
  std::vector<Root> positive_roots_;
  MultiplicityFunction kappa_;
  std::vector<Mat> elements_;
};

// name: a1 (A_1^d, kappa per axis), sd (symmetric group, one kappa),
// bd (hyperoctahedral, kappa = (short, long)), b2planar (= bd at d = 2,
// the rational realization of the dihedral group of the square).
ReflectionGroup builtin_group(std::string_view name, int d,
                              const std::vector<Rational>& kappa_params);

// Root-system axioms, kappa invariance, x_0 fixing, orthogonality, closure.
VerificationReport validate(const ReflectionGroup& group);

// `a1:d=2:kappa=1/2,1` and friends.
ReflectionGroup parse_group_spec(std::string_view spec);

}  // namespace dunkl
