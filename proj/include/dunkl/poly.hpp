#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "dunkl/clifford.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

// Dense exponent vector over a fixed variable count. For polynomials on
// R^d_1 the count is d+1 with index 0 = x_0; the axial calculus reuses the
// type with two variables (t, q).
class Monomial {
 public:
  explicit Monomial(int nvars) : exps_(static_cast<std::size_t>(nvars), 0u) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static Monomial unit(int nvars, int var, unsigned power = 1);

  int nvars() const { return static_cast<int>(exps_.size()); }
  unsigned exp(int var) const { return exps_[static_cast<std::size_t>(var)]; }
  const std::vector<unsigned>& exps() const { return exps_; }
  unsigned total_degree() const;

  Monomial times(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
  // Graded, then x_0-major lexicographic.
  bool operator<(const Monomial& other) const;

 private:
  std::vector<unsigned> exps_;
};

// Polynomial with rational coefficients; no zero coefficients stored.
class ScalarPoly {
 public:
  explicit ScalarPoly(int nvars);

  static ScalarPoly constant(int nvars, Rational value);
  static ScalarPoly variable(int nvars, int var);
  static ScalarPoly monomial(Monomial m, Rational coeff);

  int nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  // Max total degree; 0 for the zero polynomial (callers guard with is_zero).
  unsigned degree() const;
  unsigned degree_in(int var) const;

  ScalarPoly operator+(const ScalarPoly& other) const;
  ScalarPoly operator-(const ScalarPoly& other) const;
  ScalarPoly operator-() const;
  ScalarPoly operator*(const ScalarPoly& other) const;
  ScalarPoly scaled(const Rational& factor) const;
  ScalarPoly pow(unsigned e) const;

  ScalarPoly derivative(int var) const;

  // Replaces var i by images[i]; the images fix the target ring (all must
  // share one variable count, not necessarily nvars()).
  ScalarPoly substitute(const std::vector<ScalarPoly>& images) const;

  Rational evaluate(std::span<const Rational> point) const;

  void add_term(Monomial m, const Rational& coeff);

  bool operator==(const ScalarPoly& other) const;

 private:
  int nvars_;
  std::map<Monomial, Rational> terms_;
};

// Square rational matrix acting on the variable vector; row i gives the
// image of variable i.
class Mat {
 public:
  Mat(int rows, int cols);
  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }

  Mat operator*(const Mat& other) const;
  Mat transpose() const;
  bool operator==(const Mat& other) const = default;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// R_{0,d}-valued polynomial in x_0..x_d: mapping blade -> component
// polynomial, every component over d+1 variables. The universal value type
// every operator acts on.
class CliffordPolynomial {
 public:
  explicit CliffordPolynomial(int dim);

  static CliffordPolynomial scalar(int dim, Rational value);
  static CliffordPolynomial variable(int dim, int var);        // x_var
  static CliffordPolynomial basis_vector(int dim, int i);      // e_i
  static CliffordPolynomial component(int dim, Blade blade, ScalarPoly poly);
  static CliffordPolynomial from_multivector(const Multivector& m);
  static CliffordPolynomial vector_x(int dim);                 // sum x_i e_i
  static ScalarPoly radial_q(int dim);                         // sum_{i>=1} x_i^2

  int dim() const { return dim_; }
  int nvars() const { return dim_ + 1; }
  const std::map<Blade, ScalarPoly>& terms() const { return terms_; }
  ScalarPoly component(Blade blade) const;
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;
  bool depends_on(int var) const;

  CliffordPolynomial operator+(const CliffordPolynomial& other) const;
  CliffordPolynomial operator-(const CliffordPolynomial& other) const;
  CliffordPolynomial operator-() const;
  CliffordPolynomial operator*(const CliffordPolynomial& other) const;
  CliffordPolynomial scaled(const Rational& factor) const;
  CliffordPolynomial scaled(const ScalarPoly& factor) const;
  CliffordPolynomial pow(unsigned e) const;

  CliffordPolynomial derivative(int var) const;

  // p o M, i.e. x |-> p(Mx); M is (d+1)x(d+1).
  CliffordPolynomial substitute_linear(const Mat& m) const;

  // Exact division by <alpha, x>; throws NonDivisible on remainder.
  CliffordPolynomial divide_by_linear(std::span<const Rational> alpha) const;

  // Partition by total degree, ascending; empty for the zero polynomial.
  std::vector<std::pair<unsigned, CliffordPolynomial>> homogeneous_components() const;

  Multivector evaluate(std::span<const Rational> point) const;

  void add_component(Blade blade, const ScalarPoly& poly);

  bool operator==(const CliffordPolynomial& other) const;

 private:
  void check_same_dim(const CliffordPolynomial& other) const;

  int dim_;
  std::map<Blade, ScalarPoly> terms_;
};

// Exact division of a scalar polynomial by the linear form <alpha, x>.
ScalarPoly divide_scalar_by_linear(const ScalarPoly& p, std::span<const Rational> alpha);

}  // namespace dunkl
