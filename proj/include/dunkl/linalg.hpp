#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dunkl/poly.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

// Fraction-free row echelon over the integers (rows pre-scaled to primitive
// integer vectors; every elimination step is followed by a gcd
// renormalization). Row operations preserve the nullspace exactly.
struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<int> pivot_cols;  // ascending
  int cols = 0;

  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Echelon echelon_fraction_free(const Mat& m);

int rank(const Mat& m);

// Nullspace basis, one vector per free column (ascending), each normalized
// to a primitive integer vector with positive leading entry.
std::vector<std::vector<Rational>> nullspace(const Mat& m);

enum class SolveStatus { Unique, NoSolution, Underdetermined };

struct SolveResult {
  SolveStatus status;
  std::vector<Rational> x;  // valid for Unique (and a particular solution
                            // for Underdetermined)
};

// Exact solve of A x = b.
SolveResult solve(const Mat& a, std::span<const Rational> b);

}  // namespace dunkl
