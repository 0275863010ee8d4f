#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

// Basis blade e_A of R_{0,d}: bit i-1 set <=> index i in A. Empty set is the
// scalar unit. Canonical by construction.
class Blade {
 public:
  Blade() = default;

  static Blade from_bits(std::uint32_t bits) {
    Blade b;
    b.bits_ = bits;
    return b;
  }

  // Indices must be distinct and in 1..31; order irrelevant.
  static Blade from_indices(const std::vector<int>& indices);

  std::uint32_t bits() const { return bits_; }
  int grade() const { return __builtin_popcount(bits_); }
  bool is_scalar() const { return bits_ == 0; }
  // Largest index in the set, 0 for the scalar blade.
  int max_index() const { return bits_ == 0 ? 0 : 32 - __builtin_clz(bits_); }
  std::vector<int> indices() const;

  bool operator==(const Blade&) const = default;
  // Grade first, then lexicographic on the index sequence.
  bool operator<(const Blade& other) const;

 private:
  std::uint32_t bits_ = 0;
};

// e_A * e_B under e_i^2 = -1, e_i e_j = -e_j e_i. The result's index set is
// the symmetric difference; the sign counts transpositions in the merge plus
// one flip per repeated index.
std::pair<int, Blade> blade_product(Blade a, Blade b);

// (-1)^{g(g+1)/2}, the conjugation sign on a grade-g blade.
int conjugation_sign(int grade);

// Element of R_{0,d} with exact rational coefficients. Immutable value type;
// zero coefficients are never stored.
class Multivector {
 public:
  explicit Multivector(int dim);

  static Multivector scalar(int dim, Rational value);
  static Multivector basis_vector(int dim, int i);  // e_i, 1 <= i <= dim
  static Multivector term(int dim, Blade blade, Rational coeff);

  int dim() const { return dim_; }
  const std::map<Blade, Rational>& terms() const { return terms_; }
  Rational coefficient(Blade blade) const;
  bool is_zero() const { return terms_.empty(); }

  Multivector operator+(const Multivector& other) const;
  Multivector operator-(const Multivector& other) const;
  Multivector operator-() const;
  Multivector operator*(const Multivector& other) const;  // geometric product
  Multivector scaled(const Rational& factor) const;

  Multivector conjugate() const;
  Rational scalar_part() const;

  // Requires grades <= 1 and x != 0; returns conj(x)/|x|^2.
  Multivector invert_paravector() const;

  bool operator==(const Multivector& other) const;

 private:
  void add_term(Blade blade, const Rational& coeff);
  void check_same_dim(const Multivector& other) const;

  int dim_;
  std::map<Blade, Rational> terms_;
};

}  // namespace dunkl
