#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/linalg.hpp"
#include "dunkl/random.hpp"

using namespace dunkl;

namespace {

Mat random_matrix(Rng& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rng.rational(3, 2);
  return m;
}

}  // namespace

TEST_CASE("rank of identity and zero") {
  CHECK(rank(Mat::identity(4)) == 4);
  CHECK(rank(Mat(3, 5)) == 0);
}

TEST_CASE("nullspace of a known matrix") {
  // x + y + z = 0 has a 2-dimensional kernel.
  Mat m(1, 3);
  m.at(0, 0) = m.at(0, 1) = m.at(0, 2) = Rational(1);
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    Rational sum(0);
    for (const auto& c : v) sum += c;
    CHECK(is_zero(sum));
  }
}

TEST_CASE("nullspace vectors are primitive integer with positive lead") {
  Mat m(1, 2);
  m.at(0, 0) = make_rational(2, 3);
  m.at(0, 1) = make_rational(-4, 5);
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  // 2/3 x = 4/5 y  =>  direction (6, 5).
  CHECK(basis[0][0] == Rational(6));
  CHECK(basis[0][1] == Rational(5));
}

TEST_CASE("nullspace annihilates, randomly") {
  Rng rng(53);
  for (int round = 0; round < 10; ++round) {
    const int rows = 2 + static_cast<int>(rng.below(3));
    const int cols = rows + 1 + static_cast<int>(rng.below(3));
    Mat m = random_matrix(rng, rows, cols);
    auto basis = nullspace(m);
    CHECK(static_cast<int>(basis.size()) == cols - rank(m));
    for (const auto& v : basis) {
      for (int r = 0; r < rows; ++r) {
        Rational sum(0);
        for (int c = 0; c < cols; ++c) sum += m.at(r, c) * v[static_cast<std::size_t>(c)];
        CHECK(is_zero(sum));
      }
    }
  }
}

TEST_CASE("solve recovers a planted solution") {
  Rng rng(59);
  for (int round = 0; round < 10; ++round) {
    const int n = 3 + static_cast<int>(rng.below(3));
    Mat a = random_matrix(rng, n, n);
    if (rank(a) < n) continue;
    std::vector<Rational> x_true;
    for (int i = 0; i < n; ++i) x_true.push_back(rng.rational(4, 3));
    std::vector<Rational> b(static_cast<std::size_t>(n), Rational(0));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) b[static_cast<std::size_t>(r)] += a.at(r, c) * x_true[static_cast<std::size_t>(c)];
    auto result = solve(a, b);
    REQUIRE(result.status == SolveStatus::Unique);
    CHECK(result.x == x_true);
  }
}

TEST_CASE("solve detects inconsistency") {
  Mat a(2, 1);
  a.at(0, 0) = Rational(1);
  a.at(1, 0) = Rational(1);
  std::vector<Rational> b = {Rational(1), Rational(2)};
  CHECK(solve(a, b).status == SolveStatus::NoSolution);
}

TEST_CASE("solve flags underdetermined systems") {
  Mat a(1, 2);
  a.at(0, 0) = Rational(1);
  a.at(0, 1) = Rational(1);
  std::vector<Rational> b = {Rational(3)};
  CHECK(solve(a, b).status == SolveStatus::Underdetermined);
}
