#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dunkl/clifford.hpp"
#include "dunkl/poly.hpp"

namespace dunkl {

// Shared text grammar: rationals `p/q`, variables `x0..x9`, blades `e1`,
// `e12`, operators `+ - * ^`, parentheses. No juxtaposition. Printing is
// deterministic (blades by grade then index set, monomials graded then
// x_0-major) and round-trips: parse(print(p)) == p.

std::string to_text(const Multivector& m);
std::string to_text(const CliffordPolynomial& p);

// Renders a bare scalar polynomial with caller-chosen variable names,
// e.g. {"t","q"} for the axial calculus.
std::string to_text(const ScalarPoly& p, const std::vector<std::string>& var_names);

CliffordPolynomial parse_clifford_poly(std::string_view text, int dim);

}  // namespace dunkl
