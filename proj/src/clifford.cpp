#include "dunkl/clifford.hpp"

#include <algorithm>

#include "dunkl/errors.hpp"

namespace dunkl {

Blade Blade::from_indices(const std::vector<int>& indices) {
  std::uint32_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > 31) throw IndexOutOfRange("blade index out of range");
    std::uint32_t bit = 1u << (i - 1);
    if (bits & bit) throw IndexOutOfRange("repeated blade index");
    bits |= bit;
  }
  return from_bits(bits);
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i)
    if (bits_ & (1u << (i - 1))) out.push_back(i);
  return out;
}

bool Blade::operator<(const Blade& other) const {
  const int ga = grade(), gb = other.grade();
  if (ga != gb) return ga < gb;
  if (bits_ == other.bits_) return false;
  // Lowest differing index decides: whoever contains it sorts first.
  std::uint32_t diff = bits_ ^ other.bits_;
  std::uint32_t low = diff & (~diff + 1u);
  return (bits_ & low) != 0;
}

std::pair<int, Blade> blade_product(Blade a, Blade b) {
  // Transposition count: pairs (i in a, j in b) with i > j.
  int swaps = 0;
  std::uint32_t t = a.bits() >> 1;
  while (t != 0) {
    swaps += __builtin_popcount(t & b.bits());
    t >>= 1;
  }
  // One sign flip per repeated index, from e_i^2 = -1.
  swaps += __builtin_popcount(a.bits() & b.bits());
  const int sign = (swaps % 2 == 0) ? 1 : -1;
  return {sign, Blade::from_bits(a.bits() ^ b.bits())};
}

int conjugation_sign(int grade) {
  return (grade * (grade + 1) / 2) % 2 == 0 ? 1 : -1;
}

Multivector::Multivector(int dim) : dim_(dim) {
  if (dim < 1) throw DimensionMismatch("multivector dimension must be >= 1");
}

Multivector Multivector::scalar(int dim, Rational value) {
  Multivector m(dim);
  m.add_term(Blade(), value);
  return m;
}

Multivector Multivector::basis_vector(int dim, int i) {
  if (i < 1 || i > dim) throw IndexOutOfRange("basis vector index out of range");
  Multivector m(dim);
  m.add_term(Blade::from_indices({i}), Rational(1));
  return m;
}

Multivector Multivector::term(int dim, Blade blade, Rational coeff) {
  Multivector m(dim);
  if (blade.max_index() > dim) throw DimensionMismatch("blade exceeds dimension");
  m.add_term(blade, coeff);
  return m;
}

Rational Multivector::coefficient(Blade blade) const {
  auto it = terms_.find(blade);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(Blade blade, const Rational& coeff) {
  if (dunkl::is_zero(coeff)) return;
  auto [it, inserted] = terms_.emplace(blade, coeff);
  if (!inserted) {
    it->second += coeff;
    if (dunkl::is_zero(it->second)) terms_.erase(it);
  }
}

void Multivector::check_same_dim(const Multivector& other) const {
  if (dim_ != other.dim_)
    throw DimensionMismatch("multivector dimensions differ");
}

Multivector Multivector::operator+(const Multivector& other) const {
  check_same_dim(other);
  Multivector out = *this;
  for (const auto& [blade, coeff] : other.terms_) out.add_term(blade, coeff);
  return out;
}

Multivector Multivector::operator-(const Multivector& other) const {
  check_same_dim(other);
  Multivector out = *this;
  for (const auto& [blade, coeff] : other.terms_) out.add_term(blade, -coeff);
  return out;
}

Multivector Multivector::operator-() const {
  Multivector out(dim_);
  for (const auto& [blade, coeff] : terms_) out.terms_.emplace(blade, -coeff);
  return out;
}

Multivector Multivector::operator*(const Multivector& other) const {
  check_same_dim(other);
  Multivector out(dim_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      auto [sign, blade] = blade_product(a, b);
      Rational coeff = ca * cb;
      if (sign < 0) coeff = -coeff;
      out.add_term(blade, coeff);
    }
  }
  return out;
}

Multivector Multivector::scaled(const Rational& factor) const {
  Multivector out(dim_);
  if (dunkl::is_zero(factor)) return out;
  for (const auto& [blade, coeff] : terms_) out.terms_.emplace(blade, coeff * factor);
  return out;
}

Multivector Multivector::conjugate() const {
  Multivector out(dim_);
  for (const auto& [blade, coeff] : terms_) {
    Rational c = coeff;
    if (conjugation_sign(blade.grade()) < 0) c = -c;
    out.terms_.emplace(blade, c);
  }
  return out;
}

Rational Multivector::scalar_part() const { return coefficient(Blade()); }

Multivector Multivector::invert_paravector() const {
  Rational norm_sq(0);
  for (const auto& [blade, coeff] : terms_) {
    if (blade.grade() > 1)
      throw NotParavector("element has grade > 1 components");
    norm_sq += coeff * coeff;  // x xbar = x_0^2 + |v|^2 for paravectors
  }
  if (dunkl::is_zero(norm_sq)) throw ZeroVector("zero paravector has no inverse");
  return conjugate().scaled(Rational(1) / norm_sq);
}

bool Multivector::operator==(const Multivector& other) const {
  return dim_ == other.dim_ && terms_ == other.terms_;
}

}  // namespace dunkl
