#pragma once

// Exact small-scale linear algebra over Z and Q: everything in this project
// runs on lattices of rank <= ~8 with single-digit entries, so the code favors
// clarity and determinism over asymptotics.

#include <cstdint>
#include <optional>
#include <vector>

namespace msat {

using Int = long long;
using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;  // row-major

// Reduced fraction with positive denominator. Intermediate products go
// through __int128 and overflow raises msat::error.
struct Rat {
  Int num = 0;
  Int den = 1;

  Rat() = default;
  Rat(Int n);  // NOLINT: implicit on purpose
  Rat(Int n, Int d);

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a);
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  // sign-based comparison
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
};

Int dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec neg(const IntVec& a);
IntVec scale(Int c, const IntVec& a);

// Solve A x = b over Q where the columns of A are linearly independent
// (throws msat::error otherwise). Returns the unique solution, or nullopt if
// the system is inconsistent. A is m x k, b has length m.
std::optional<std::vector<Rat>> solve_columns_independent(const IntMat& A,
                                                          const IntVec& b);

// Rank over Q.
int rank(const IntMat& A);

// Smith normal form: U * A * V = D with U (m x m), V (n x n) unimodular and D
// diagonal with non-negative entries d_1 | d_2 | ... . Deterministic.
struct SmithResult {
  IntMat U, V, D;
  int rank = 0;                 // number of nonzero diagonal entries
  IntVec diagonal;              // length min(m, n)
};
SmithResult smith_normal_form(const IntMat& A);

// Basis of { x in Z^n : A x = 0 }, one vector per element, canonicalized by
// column Hermite reduction. A has n columns; an empty A (zero rows) yields
// the standard basis.
std::vector<IntVec> integer_kernel_basis(const IntMat& A, int n);

// Solve A x = b over Z; nullopt if no integer solution. When the columns of A
// are linearly independent the solution is unique.
std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b);

// Column-style Hermite normal form of the lattice spanned by the given
// columns (each of length n): returns a canonical basis of that lattice.
// Pivots are positive and entries to the right of a pivot row are reduced to
// [0, pivot).
std::vector<IntVec> hermite_column_basis(std::vector<IntVec> columns, int n);

}  // namespace msat
