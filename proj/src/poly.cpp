#include "dunkl/poly.hpp"

#include <algorithm>

#include "dunkl/errors.hpp"

namespace dunkl {

Monomial Monomial::unit(int nvars, int var, unsigned power) {
  if (var < 0 || var >= nvars) throw IndexOutOfRange("variable index out of range");
  Monomial m(nvars);
  m.exps_[static_cast<std::size_t>(var)] = power;
  return m;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (unsigned e : exps_) d += e;
  return d;
}

Monomial Monomial::times(const Monomial& other) const {
  if (exps_.size() != other.exps_.size())
    throw DimensionMismatch("monomial variable counts differ");
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

bool Monomial::operator<(const Monomial& other) const {
  const unsigned da = total_degree(), db = other.total_degree();
  if (da != db) return da < db;
  return exps_ > other.exps_;  // x_0-major within a degree
}

ScalarPoly::ScalarPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw DimensionMismatch("polynomial needs at least one variable");
}

ScalarPoly ScalarPoly::constant(int nvars, Rational value) {
  ScalarPoly p(nvars);
  p.add_term(Monomial(nvars), value);
  return p;
}

ScalarPoly ScalarPoly::variable(int nvars, int var) {
  return monomial(Monomial::unit(nvars, var), Rational(1));
}

ScalarPoly ScalarPoly::monomial(Monomial m, Rational coeff) {
  ScalarPoly p(m.nvars());
  p.add_term(std::move(m), coeff);
  return p;
}

Rational ScalarPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned ScalarPoly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

unsigned ScalarPoly::degree_in(int var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
  return d;
}

void ScalarPoly::add_term(Monomial m, const Rational& coeff) {
  if (m.nvars() != nvars_) throw DimensionMismatch("monomial variable count differs");
  if (dunkl::is_zero(coeff)) return;
  auto [it, inserted] = terms_.emplace(std::move(m), coeff);
  if (!inserted) {
    it->second += coeff;
    if (dunkl::is_zero(it->second)) terms_.erase(it);
  }
}

ScalarPoly ScalarPoly::operator+(const ScalarPoly& other) const {
  if (nvars_ != other.nvars_) throw DimensionMismatch("polynomial rings differ");
  ScalarPoly out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

ScalarPoly ScalarPoly::operator-(const ScalarPoly& other) const {
  if (nvars_ != other.nvars_) throw DimensionMismatch("polynomial rings differ");
  ScalarPoly out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

ScalarPoly ScalarPoly::operator-() const {
  ScalarPoly out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ScalarPoly ScalarPoly::operator*(const ScalarPoly& other) const {
  if (nvars_ != other.nvars_) throw DimensionMismatch("polynomial rings differ");
  ScalarPoly out(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

ScalarPoly ScalarPoly::scaled(const Rational& factor) const {
  ScalarPoly out(nvars_);
  if (dunkl::is_zero(factor)) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * factor);
  return out;
}

ScalarPoly ScalarPoly::pow(unsigned e) const {
  ScalarPoly out = constant(nvars_, Rational(1));
  for (unsigned i = 0; i < e; ++i) out = out * (*this);
  return out;
}

ScalarPoly ScalarPoly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw IndexOutOfRange("derivative variable out of range");
  ScalarPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exp(var);
    if (e == 0) continue;
    std::vector<unsigned> exps = m.exps();
    exps[static_cast<std::size_t>(var)] = e - 1;
    out.add_term(Monomial(std::move(exps)), c * Rational(static_cast<long>(e)));
  }
  return out;
}

ScalarPoly ScalarPoly::substitute(const std::vector<ScalarPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw DimensionMismatch("substitution needs one image per variable");
  const int target_vars = images.empty() ? nvars_ : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != target_vars) throw DimensionMismatch("images live in different rings");
  ScalarPoly out(target_vars);
  for (const auto& [m, c] : terms_) {
    ScalarPoly term = ScalarPoly::constant(target_vars, c);
    for (int v = 0; v < nvars_; ++v) {
      const unsigned e = m.exp(v);
      if (e > 0) term = term * images[static_cast<std::size_t>(v)].pow(e);
    }
    out = out + term;
  }
  return out;
}

Rational ScalarPoly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DimensionMismatch("evaluation point arity differs");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int v = 0; v < nvars_; ++v)
      for (unsigned e = 0; e < m.exp(v); ++e) term *= point[static_cast<std::size_t>(v)];
    sum += term;
  }
  return sum;
}

bool ScalarPoly::operator==(const ScalarPoly& other) const {
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

// Synthetic division viewing p as univariate in the leading variable of
// alpha. With L = a*x_i - B (B free of x_i) and p = sum_k c_k x_i^k:
//   q_{k-1} = (c_k + B q_k)/a   for k = D..1, q_D = 0,
//   remainder = c_0 + B q_0, which must vanish.
ScalarPoly divide_scalar_by_linear(const ScalarPoly& p, std::span<const Rational> alpha) {
  const int nvars = p.nvars();
  if (static_cast<int>(alpha.size()) != nvars)
    throw DimensionMismatch("linear form arity differs");
  int lead = -1;
  for (int v = 0; v < nvars; ++v) {
    if (!is_zero(alpha[static_cast<std::size_t>(v)])) {
      lead = v;
      break;
    }
  }
  if (lead < 0) throw ZeroLinearForm("division by the zero form");
  const Rational a = alpha[static_cast<std::size_t>(lead)];

  ScalarPoly b_form(nvars);  // B = -(L - a x_lead)
  for (int v = 0; v < nvars; ++v) {
    if (v == lead) continue;
    const Rational& av = alpha[static_cast<std::size_t>(v)];
    if (!is_zero(av)) b_form = b_form + ScalarPoly::variable(nvars, v).scaled(-av);
  }

  const unsigned deg = p.is_zero() ? 0 : p.degree_in(lead);
  // c_k: coefficient of x_lead^k, with the x_lead exponent stripped.
  std::vector<ScalarPoly> c(deg + 1, ScalarPoly(nvars));
  for (const auto& [m, coeff] : p.terms()) {
    std::vector<unsigned> exps = m.exps();
    const unsigned k = exps[static_cast<std::size_t>(lead)];
    exps[static_cast<std::size_t>(lead)] = 0;
    c[k].add_term(Monomial(std::move(exps)), coeff);
  }

  std::vector<ScalarPoly> q(deg, ScalarPoly(nvars));
  ScalarPoly carry(nvars);  // q_k for the previous k
  for (unsigned k = deg; k >= 1; --k) {
    ScalarPoly qk = (c[k] + b_form * carry).scaled(Rational(1) / a);
    q[k - 1] = qk;
    carry = std::move(qk);
  }
  ScalarPoly remainder = c[0] + b_form * carry;
  if (!remainder.is_zero()) throw NonDivisible("linear form does not divide polynomial");

  ScalarPoly quotient(nvars);
  for (unsigned k = 0; k < deg; ++k) {
    for (const auto& [m, coeff] : q[k].terms()) {
      std::vector<unsigned> exps = m.exps();
      exps[static_cast<std::size_t>(lead)] += k;
      quotient.add_term(Monomial(std::move(exps)), coeff);
    }
  }
  return quotient;
}

Mat::Mat(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), Rational(0)) {}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Mat Mat::operator*(const Mat& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Mat out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (dunkl::is_zero(aik)) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += aik * other.at(k, j);
    }
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

CliffordPolynomial::CliffordPolynomial(int dim) : dim_(dim) {
  if (dim < 1) throw DimensionMismatch("dimension must be >= 1");
}

CliffordPolynomial CliffordPolynomial::scalar(int dim, Rational value) {
  CliffordPolynomial p(dim);
  p.add_component(Blade(), ScalarPoly::constant(dim + 1, std::move(value)));
  return p;
}

CliffordPolynomial CliffordPolynomial::variable(int dim, int var) {
  CliffordPolynomial p(dim);
  p.add_component(Blade(), ScalarPoly::variable(dim + 1, var));
  return p;
}

CliffordPolynomial CliffordPolynomial::basis_vector(int dim, int i) {
  if (i < 1 || i > dim) throw IndexOutOfRange("basis vector index out of range");
  CliffordPolynomial p(dim);
  p.add_component(Blade::from_indices({i}), ScalarPoly::constant(dim + 1, Rational(1)));
  return p;
}

CliffordPolynomial CliffordPolynomial::component(int dim, Blade blade, ScalarPoly poly) {
  CliffordPolynomial p(dim);
  p.add_component(blade, poly);
  return p;
}

CliffordPolynomial CliffordPolynomial::from_multivector(const Multivector& m) {
  CliffordPolynomial p(m.dim());
  for (const auto& [blade, coeff] : m.terms())
    p.add_component(blade, ScalarPoly::constant(m.dim() + 1, coeff));
  return p;
}

CliffordPolynomial CliffordPolynomial::vector_x(int dim) {
  CliffordPolynomial p(dim);
  for (int i = 1; i <= dim; ++i)
    p.add_component(Blade::from_indices({i}), ScalarPoly::variable(dim + 1, i));
  return p;
}

ScalarPoly CliffordPolynomial::radial_q(int dim) {
  ScalarPoly q(dim + 1);
  for (int i = 1; i <= dim; ++i)
    q.add_term(Monomial::unit(dim + 1, i, 2), Rational(1));
  return q;
}

ScalarPoly CliffordPolynomial::component(Blade blade) const {
  auto it = terms_.find(blade);
  return it == terms_.end() ? ScalarPoly(dim_ + 1) : it->second;
}

unsigned CliffordPolynomial::degree() const {
  unsigned d = 0;
  for (const auto& [blade, poly] : terms_) d = std::max(d, poly.degree());
  return d;
}

bool CliffordPolynomial::depends_on(int var) const {
  for (const auto& [blade, poly] : terms_)
    if (poly.degree_in(var) > 0) return true;
  return false;
}

void CliffordPolynomial::add_component(Blade blade, const ScalarPoly& poly) {
  if (blade.max_index() > dim_) throw DimensionMismatch("blade exceeds dimension");
  if (poly.nvars() != dim_ + 1) throw DimensionMismatch("component ring mismatch");
  if (poly.is_zero()) return;
  auto [it, inserted] = terms_.emplace(blade, poly);
  if (!inserted) {
    it->second = it->second + poly;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CliffordPolynomial::check_same_dim(const CliffordPolynomial& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("polynomial dimensions differ");
}

CliffordPolynomial CliffordPolynomial::operator+(const CliffordPolynomial& other) const {
  check_same_dim(other);
  CliffordPolynomial out = *this;
  for (const auto& [blade, poly] : other.terms_) out.add_component(blade, poly);
  return out;
}

CliffordPolynomial CliffordPolynomial::operator-(const CliffordPolynomial& other) const {
  check_same_dim(other);
  CliffordPolynomial out = *this;
  for (const auto& [blade, poly] : other.terms_) out.add_component(blade, -poly);
  return out;
}

CliffordPolynomial CliffordPolynomial::operator-() const {
  CliffordPolynomial out(dim_);
  for (const auto& [blade, poly] : terms_) out.terms_.emplace(blade, -poly);
  return out;
}

CliffordPolynomial CliffordPolynomial::operator*(const CliffordPolynomial& other) const {
  check_same_dim(other);
  CliffordPolynomial out(dim_);
  for (const auto& [a, pa] : terms_) {
    for (const auto& [b, pb] : other.terms_) {
      auto [sign, blade] = blade_product(a, b);
      ScalarPoly prod = pa * pb;
      if (sign < 0) prod = -prod;
      out.add_component(blade, prod);
    }
  }
  return out;
}

CliffordPolynomial CliffordPolynomial::scaled(const Rational& factor) const {
  CliffordPolynomial out(dim_);
  if (dunkl::is_zero(factor)) return out;
  for (const auto& [blade, poly] : terms_) out.terms_.emplace(blade, poly.scaled(factor));
  return out;
}

CliffordPolynomial CliffordPolynomial::scaled(const ScalarPoly& factor) const {
  CliffordPolynomial out(dim_);
  for (const auto& [blade, poly] : terms_) out.add_component(blade, poly * factor);
  return out;
}

CliffordPolynomial CliffordPolynomial::pow(unsigned e) const {
  CliffordPolynomial out = scalar(dim_, Rational(1));
  for (unsigned i = 0; i < e; ++i) out = out * (*this);
  return out;
}

CliffordPolynomial CliffordPolynomial::derivative(int var) const {
  if (var < 0 || var > dim_) throw IndexOutOfRange("derivative variable out of range");
  CliffordPolynomial out(dim_);
  for (const auto& [blade, poly] : terms_) out.add_component(blade, poly.derivative(var));
  return out;
}

CliffordPolynomial CliffordPolynomial::substitute_linear(const Mat& m) const {
  if (m.rows() != dim_ + 1 || m.cols() != dim_ + 1)
    throw DimensionMismatch("substitution matrix shape mismatch");
  std::vector<ScalarPoly> images;
  images.reserve(static_cast<std::size_t>(dim_ + 1));
  for (int i = 0; i <= dim_; ++i) {
    ScalarPoly image(dim_ + 1);
    for (int j = 0; j <= dim_; ++j) {
      const Rational& mij = m.at(i, j);
      if (!dunkl::is_zero(mij)) image.add_term(Monomial::unit(dim_ + 1, j), mij);
    }
    images.push_back(std::move(image));
  }
  CliffordPolynomial out(dim_);
  for (const auto& [blade, poly] : terms_) out.add_component(blade, poly.substitute(images));
  return out;
}

CliffordPolynomial CliffordPolynomial::divide_by_linear(std::span<const Rational> alpha) const {
  CliffordPolynomial out(dim_);
  for (const auto& [blade, poly] : terms_)
    out.add_component(blade, divide_scalar_by_linear(poly, alpha));
  return out;
}

std::vector<std::pair<unsigned, CliffordPolynomial>>
CliffordPolynomial::homogeneous_components() const {
  std::map<unsigned, CliffordPolynomial> buckets;
  for (const auto& [blade, poly] : terms_) {
    for (const auto& [m, c] : poly.terms()) {
      const unsigned deg = m.total_degree();
      auto it = buckets.find(deg);
      if (it == buckets.end()) it = buckets.emplace(deg, CliffordPolynomial(dim_)).first;
      it->second.add_component(blade, ScalarPoly::monomial(m, c));
    }
  }
  std::vector<std::pair<unsigned, CliffordPolynomial>> out;
  out.reserve(buckets.size());
  for (auto& [deg, part] : buckets) out.emplace_back(deg, std::move(part));
  return out;
}

Multivector CliffordPolynomial::evaluate(std::span<const Rational> point) const {
  Multivector out(dim_);
  for (const auto& [blade, poly] : terms_)
    out = out + Multivector::term(dim_, blade, poly.evaluate(point));
  return out;
}

bool CliffordPolynomial::operator==(const CliffordPolynomial& other) const {
  return dim_ == other.dim_ && terms_ == other.terms_;
}

}  // namespace dunkl
