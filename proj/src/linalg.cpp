#include "dunkl/linalg.hpp"

#include <algorithm>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

// Clears denominators and divides by the content; canonical sign is not
// fixed here (elimination does not care).
std::vector<Integer> primitive_row(const Mat& m, int r) {
  Integer lcm(1);
  for (int c = 0; c < m.cols(); ++c) {
    const Rational& v = m.at(r, c);
    if (!is_zero(v)) lcm = ::lcm(lcm, v.get_den());
  }
  std::vector<Integer> row(static_cast<std::size_t>(m.cols()));
  Integer content(0);
  for (int c = 0; c < m.cols(); ++c) {
    const Rational& v = m.at(r, c);
    Integer entry = v.get_num() * (lcm / v.get_den());
    content = gcd(content, entry);
    row[static_cast<std::size_t>(c)] = std::move(entry);
  }
  if (sgn(content) != 0)
    for (auto& entry : row) entry /= content;
  return row;
}

void normalize_row(std::vector<Integer>& row) {
  Integer content(0);
  for (const auto& entry : row) content = gcd(content, entry);
  if (sgn(content) == 0) return;
  for (auto& entry : row) entry /= content;
}

}  // namespace

Echelon echelon_fraction_free(const Mat& m) {
  Echelon e;
  e.cols = m.cols();
  std::vector<std::vector<Integer>> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) rows.push_back(primitive_row(m, r));

  int pivot_row = 0;
  for (int col = 0; col < m.cols() && pivot_row < static_cast<int>(rows.size()); ++col) {
    // First row with a nonzero entry in this column keeps the result
    // deterministic.
    int found = -1;
    for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r) {
      if (sgn(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(rows[static_cast<std::size_t>(pivot_row)], rows[static_cast<std::size_t>(found)]);
    const auto& prow = rows[static_cast<std::size_t>(pivot_row)];
    const Integer pivot = prow[static_cast<std::size_t>(col)];
    for (int r = pivot_row + 1; r < static_cast<int>(rows.size()); ++r) {
      auto& row = rows[static_cast<std::size_t>(r)];
      const Integer factor = row[static_cast<std::size_t>(col)];
      if (sgn(factor) == 0) continue;
      for (int c = 0; c < m.cols(); ++c) {
        row[static_cast<std::size_t>(c)] =
            pivot * row[static_cast<std::size_t>(c)] - factor * prow[static_cast<std::size_t>(c)];
      }
      normalize_row(row);
    }
    e.pivot_cols.push_back(col);
    ++pivot_row;
  }
  rows.resize(static_cast<std::size_t>(pivot_row));
  e.rows = std::move(rows);
  return e;
}

int rank(const Mat& m) { return echelon_fraction_free(m).rank(); }

std::vector<std::vector<Rational>> nullspace(const Mat& m) {
  const Echelon e = echelon_fraction_free(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(e.cols), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < e.cols; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(e.cols), Rational(0));
    v[static_cast<std::size_t>(free_col)] = Rational(1);
    // Back-substitution over the rationals.
    for (int r = e.rank() - 1; r >= 0; --r) {
      const auto& row = e.rows[static_cast<std::size_t>(r)];
      const int pc = e.pivot_cols[static_cast<std::size_t>(r)];
      Rational sum(0);
      for (int c = pc + 1; c < e.cols; ++c) {
        if (sgn(row[static_cast<std::size_t>(c)]) == 0) continue;
        sum += Rational(row[static_cast<std::size_t>(c)]) * v[static_cast<std::size_t>(c)];
      }
      v[static_cast<std::size_t>(pc)] = -sum / Rational(row[static_cast<std::size_t>(pc)]);
    }
    // Primitive integer form, positive leading entry.
    Integer lcm_den(1);
    for (const auto& entry : v)
      if (!is_zero(entry)) lcm_den = lcm(lcm_den, entry.get_den());
    Integer content(0);
    for (auto& entry : v) {
      entry *= Rational(lcm_den);
      entry.canonicalize();
      content = gcd(content, entry.get_num());
    }
    int lead_sign = 0;
    for (const auto& entry : v) {
      if (!is_zero(entry)) {
        lead_sign = sgn(entry);
        break;
      }
    }
    for (auto& entry : v) {
      entry /= Rational(content);
      if (lead_sign < 0) entry = -entry;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const Mat& a, std::span<const Rational> b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw DimensionMismatch("right-hand side length differs from row count");
  Mat aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[static_cast<std::size_t>(r)];
  }
  const Echelon e = echelon_fraction_free(aug);
  for (int pc : e.pivot_cols)
    if (pc == a.cols()) return {SolveStatus::NoSolution, {}};

  const bool unique = e.rank() == a.cols();
  std::vector<Rational> x(static_cast<std::size_t>(a.cols()), Rational(0));
  for (int r = e.rank() - 1; r >= 0; --r) {
    const auto& row = e.rows[static_cast<std::size_t>(r)];
    const int pc = e.pivot_cols[static_cast<std::size_t>(r)];
    Rational sum = Rational(row[static_cast<std::size_t>(a.cols())]);
    for (int c = pc + 1; c < a.cols(); ++c) {
      if (sgn(row[static_cast<std::size_t>(c)]) == 0) continue;
      sum -= Rational(row[static_cast<std::size_t>(c)]) * x[static_cast<std::size_t>(c)];
    }
    x[static_cast<std::size_t>(pc)] = sum / Rational(row[static_cast<std::size_t>(pc)]);
  }
  return {unique ? SolveStatus::Unique : SolveStatus::Underdetermined, std::move(x)};
}

}  // namespace dunkl
