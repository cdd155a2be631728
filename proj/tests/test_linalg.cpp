#include <doctest.h>

#include <cstdlib>

#include "msat/linalg.hpp"
#include "test_util.hpp"

using namespace msat;
using msat_test::rand_int;

namespace {

IntMat random_matrix(int rows, int cols, long long bound) {
  IntMat m(rows, IntVec(cols));
  for (auto& row : m)
    for (auto& x : row) x = rand_int(-bound, bound);
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  IntMat c(a.size(), IntVec(b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Int det3(const IntMat& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST_CASE("smith normal form factors the matrix") {
  for (int trial = 0; trial < 40; ++trial) {
    int rows = static_cast<int>(rand_int(1, 4));
    int cols = static_cast<int>(rand_int(1, 4));
    IntMat a = random_matrix(rows, cols, 6);
    SmithResult s = smith_normal_form(a);
    CHECK(mat_mul(mat_mul(s.U, a), s.V) == s.D);
    // Invariant factors divide in order.
    for (size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      if (s.diagonal[i + 1] == 0) continue;
      CHECK(s.diagonal[i] != 0);
      CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
    // U, V unimodular: |det| = 1 for sizes we can check directly.
    if (rows == 3) CHECK(std::abs(det3(s.U)) == 1);
    if (cols == 3) CHECK(std::abs(det3(s.V)) == 1);
  }
}

TEST_CASE("rank agrees with smith normal form") {
  for (int trial = 0; trial < 30; ++trial) {
    IntMat a = random_matrix(static_cast<int>(rand_int(1, 4)),
                             static_cast<int>(rand_int(1, 4)), 5);
    SmithResult s = smith_normal_form(a);
    int nonzero = 0;
    for (Int d : s.diagonal)
      if (d != 0) ++nonzero;
    CHECK(rank(a) == nonzero);
  }
}

TEST_CASE("integer kernel basis spans the kernel") {
  for (int trial = 0; trial < 30; ++trial) {
    int rows = static_cast<int>(rand_int(1, 3));
    int cols = static_cast<int>(rand_int(1, 4));
    IntMat a = random_matrix(rows, cols, 4);
    IntMat kernel = integer_kernel_basis(a, cols);
    for (const IntVec& k : kernel)
      for (int i = 0; i < rows; ++i) CHECK(dot(a[i], k) == 0);
    CHECK(static_cast<int>(kernel.size()) == cols - rank(a));
    if (!kernel.empty()) CHECK(rank(kernel) == static_cast<int>(kernel.size()));
  }
}

TEST_CASE("kernel of an empty constraint list is the standard basis") {
  IntMat kernel = integer_kernel_basis({}, 3);
  REQUIRE(kernel.size() == 3);
  CHECK(kernel[0] == IntVec{1, 0, 0});
  CHECK(kernel[1] == IntVec{0, 1, 0});
  CHECK(kernel[2] == IntVec{0, 0, 1});
}

TEST_CASE("solve_integer finds exact solutions and rejects inconsistency") {
  for (int trial = 0; trial < 40; ++trial) {
    int rows = static_cast<int>(rand_int(1, 3));
    int cols = static_cast<int>(rand_int(1, 3));
    IntMat a = random_matrix(rows, cols, 4);
    IntVec x(cols);
    for (auto& v : x) v = rand_int(-5, 5);
    IntVec b(rows, 0);
    for (int i = 0; i < rows; ++i) b[i] = dot(a[i], x);
    auto sol = solve_integer(a, b);
    REQUIRE(sol.has_value());
    for (int i = 0; i < rows; ++i) CHECK(dot(a[i], *sol) == b[i]);
  }
  // 2x = 1 has no integer solution.
  CHECK_FALSE(solve_integer({{2}}, {1}).has_value());
}

TEST_CASE("solve_columns_independent solves rational systems") {
  IntMat a = {{2, 0}, {0, 3}, {1, 1}};  // columns independent
  IntVec b = {2, 3, 2};                 // = columns * (1, 1)
  auto sol = solve_columns_independent(a, b);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0].num == 1);
  CHECK((*sol)[0].den == 1);
  CHECK((*sol)[1].num == 1);
  // Inconsistent right-hand side.
  CHECK_FALSE(solve_columns_independent(a, {1, 0, 0}).has_value());
}

TEST_CASE("hermite column basis is canonical for the column span") {
  std::vector<IntVec> cols = {{2, 1}, {4, 3}};
  std::vector<IntVec> h = hermite_column_basis(cols, 2);
  CHECK(h.size() == 2);
  // Extra generators of the same lattice leave the basis unchanged.
  std::vector<IntVec> redundant = {{2, 1}, {4, 3}, {2, 3}, {6, 4}};
  CHECK(hermite_column_basis(redundant, 2) == h);
}
