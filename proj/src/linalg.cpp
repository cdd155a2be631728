#include "msat/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "msat/error.hpp"

namespace msat {

namespace {

using I128 = __int128;

Int checked(I128 v) {
  if (v > I128(INT64_MAX) / 4 || v < I128(INT64_MIN) / 4)
    throw error("integer overflow in exact arithmetic");
  return static_cast<Int>(v);
}

Int mul_checked(Int a, Int b) { return checked(I128(a) * I128(b)); }

Int gcd_ll(Int a, Int b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int floordiv(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Rat::Rat(Int n) : num(n), den(1) {}

Rat::Rat(Int n, Int d) {
  if (d == 0) throw error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int g = gcd_ll(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(checked(I128(a.num) * b.den + I128(b.num) * a.den),
             mul_checked(a.den, b.den));
}
Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
Rat operator*(const Rat& a, const Rat& b) {
  return Rat(mul_checked(a.num, b.num), mul_checked(a.den, b.den));
}
Rat operator/(const Rat& a, const Rat& b) {
  if (b.num == 0) throw error("division by zero rational");
  return Rat(mul_checked(a.num, b.den), mul_checked(a.den, b.num));
}
Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }
bool operator<(const Rat& a, const Rat& b) {
  return I128(a.num) * b.den < I128(b.num) * a.den;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw error("dot: size mismatch");
  I128 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += I128(a[i]) * b[i];
  return checked(s);
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw error("add: size mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw error("sub: size mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVec scale(Int c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mul_checked(c, a[i]);
  return r;
}

std::optional<std::vector<Rat>> solve_columns_independent(const IntMat& A,
                                                          const IntVec& b) {
  size_t m = A.size();
  size_t k = m ? A[0].size() : 0;
  if (b.size() != m) throw error("solve: rhs size mismatch");
  if (k == 0) {
    for (Int v : b)
      if (v != 0) return std::nullopt;
    return std::vector<Rat>{};
  }
  // Augmented rational elimination.
  std::vector<std::vector<Rat>> M(m, std::vector<Rat>(k + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < k; ++j) M[i][j] = Rat(A[i][j]);
    M[i][k] = Rat(b[i]);
  }
  std::vector<int> pivot_row(k, -1);
  size_t row = 0;
  for (size_t col = 0; col < k && row < m; ++col) {
    size_t p = row;
    while (p < m && M[p][col].is_zero()) ++p;
    if (p == m) continue;  // no pivot in this column
    std::swap(M[p], M[row]);
    Rat inv = Rat(1) / M[row][col];
    for (size_t j = col; j <= k; ++j) M[row][j] = M[row][j] * inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || M[i][col].is_zero()) continue;
      Rat f = M[i][col];
      for (size_t j = col; j <= k; ++j) M[i][j] = M[i][j] - f * M[row][j];
    }
    pivot_row[col] = static_cast<int>(row);
    ++row;
  }
  for (size_t col = 0; col < k; ++col)
    if (pivot_row[col] < 0) throw error("solve: columns are linearly dependent");
  for (size_t i = row; i < m; ++i)
    if (!M[i][k].is_zero()) return std::nullopt;
  std::vector<Rat> x(k);
  for (size_t col = 0; col < k; ++col) x[col] = M[pivot_row[col]][k];
  return x;
}

int rank(const IntMat& A) {
  size_t m = A.size();
  size_t n = m ? A[0].size() : 0;
  std::vector<std::vector<Rat>> M(m, std::vector<Rat>(n));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) M[i][j] = Rat(A[i][j]);
  int r = 0;
  for (size_t col = 0; col < n && size_t(r) < m; ++col) {
    size_t p = r;
    while (p < m && M[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    for (size_t i = r + 1; i < m; ++i) {
      if (M[i][col].is_zero()) continue;
      Rat f = M[i][col] / M[r][col];
      for (size_t j = col; j < n; ++j) M[i][j] = M[i][j] - f * M[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

void add_row(IntMat& M, size_t dst, size_t src, Int c) {
  for (size_t j = 0; j < M[dst].size(); ++j)
    M[dst][j] = M[dst][j] + mul_checked(c, M[src][j]);
}

void add_col(IntMat& M, size_t dst, size_t src, Int c) {
  for (size_t i = 0; i < M.size(); ++i)
    M[i][dst] = M[i][dst] + mul_checked(c, M[i][src]);
}

void swap_cols(IntMat& M, size_t a, size_t b) {
  for (auto& row : M) std::swap(row[a], row[b]);
}

IntMat identity(size_t n) {
  IntMat I(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& A) {
  size_t m = A.size();
  size_t n = m ? A[0].size() : 0;
  SmithResult res;
  res.U = identity(m);
  res.V = identity(n);
  res.D = A;
  if (n == 0 || m == 0) {
    res.rank = 0;
    return res;
  }
  IntMat& D = res.D;
  IntMat& U = res.U;
  IntMat& V = res.V;

  size_t t = 0;
  while (t < m && t < n) {
    // Locate the entry of smallest nonzero magnitude in the trailing block.
    size_t pi = m, pj = n;
    Int best = 0;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j) {
        Int v = std::llabs(D[i][j]);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    std::swap(D[pi], D[t]);
    std::swap(U[pi], U[t]);
    swap_cols(D, pj, t);
    swap_cols(V, pj, t);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        Int q = D[i][t] / D[t][t];
        add_row(D, i, t, -q);
        add_row(U, i, t, -q);
        if (D[i][t] != 0) {  // remainder becomes the new, smaller pivot
          std::swap(D[i], D[t]);
          std::swap(U[i], U[t]);
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        Int q = D[t][j] / D[t][t];
        add_col(D, j, t, -q);
        add_col(V, j, t, -q);
        if (D[t][j] != 0) {
          swap_cols(D, j, t);
          swap_cols(V, j, t);
          dirty = true;
        }
      }
      if (!dirty) {
        // Pivot must divide every remaining entry for the divisibility chain.
        for (size_t i = t + 1; i < m && !dirty; ++i)
          for (size_t j = t + 1; j < n && !dirty; ++j)
            if (D[i][j] % D[t][t] != 0) {
              add_row(D, t, i, 1);
              add_row(U, t, i, 1);
              dirty = true;
            }
      }
    }
    if (D[t][t] < 0) {
      for (size_t j = 0; j < n; ++j) D[t][j] = -D[t][j];
      for (size_t j = 0; j < m; ++j) U[t][j] = -U[t][j];
    }
    ++t;
  }
  res.rank = static_cast<int>(t);
  res.diagonal.resize(std::min(m, n));
  for (size_t i = 0; i < res.diagonal.size(); ++i) res.diagonal[i] = D[i][i];
  return res;
}

std::vector<IntVec> integer_kernel_basis(const IntMat& A, int n) {
  if (A.empty()) {
    std::vector<IntVec> basis;
    for (int i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != n) throw error("kernel: ragged matrix");
  SmithResult s = smith_normal_form(A);
  std::vector<IntVec> cols;
  for (int j = s.rank; j < n; ++j) {
    IntVec v(n);
    for (int i = 0; i < n; ++i) v[i] = s.V[i][j];
    cols.push_back(v);
  }
  return hermite_column_basis(std::move(cols), n);
}

std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b) {
  size_t m = A.size();
  if (b.size() != m) throw error("solve_integer: rhs size mismatch");
  size_t n = m ? A[0].size() : 0;
  if (m == 0) return IntVec{};
  SmithResult s = smith_normal_form(A);
  // D y = U b, x = V y.
  IntVec ub(m, 0);
  for (size_t i = 0; i < m; ++i) {
    I128 acc = 0;
    for (size_t j = 0; j < m; ++j) acc += I128(s.U[i][j]) * b[j];
    ub[i] = checked(acc);
  }
  IntVec y(n, 0);
  for (size_t i = 0; i < m; ++i) {
    Int d = (i < std::min(m, n)) ? s.D[i][i] : 0;
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  IntVec x(n, 0);
  for (size_t i = 0; i < n; ++i) {
    I128 acc = 0;
    for (size_t j = 0; j < n; ++j) acc += I128(s.V[i][j]) * y[j];
    x[i] = checked(acc);
  }
  return x;
}

std::vector<IntVec> hermite_column_basis(std::vector<IntVec> columns, int n) {
  for (const auto& c : columns)
    if (static_cast<int>(c.size()) != n) throw error("hermite: bad column size");
  std::vector<IntVec> pivots;
  std::vector<int> pivot_rows;
  std::vector<IntVec> active = std::move(columns);
  for (int r = 0; r < n; ++r) {
    // Euclid on row r across the active columns.
    while (true) {
      int ia = -1, ib = -1;
      for (size_t j = 0; j < active.size(); ++j) {
        if (active[j][r] == 0) continue;
        if (ia < 0 || std::llabs(active[j][r]) < std::llabs(active[ia][r]))
          ib = ia, ia = static_cast<int>(j);
        else if (ib < 0 || std::llabs(active[j][r]) < std::llabs(active[ib][r]))
          ib = static_cast<int>(j);
      }
      if (ib < 0) break;  // at most one nonzero left in this row
      Int q = active[ib][r] / active[ia][r];
      active[ib] = sub(active[ib], scale(q, active[ia]));
    }
    int ia = -1;
    for (size_t j = 0; j < active.size(); ++j)
      if (active[j][r] != 0) ia = static_cast<int>(j);
    if (ia < 0) continue;
    IntVec piv = active[ia];
    active.erase(active.begin() + ia);
    if (piv[r] < 0) piv = neg(piv);
    pivots.push_back(piv);
    pivot_rows.push_back(r);
  }
  for (const auto& c : active)
    for (Int v : c)
      if (v != 0) throw error("hermite: reduction left a nonzero column");
  // Each pivot column is zero above its pivot row; canonicalize the entries
  // of earlier pivot columns at later pivot rows into [0, pivot).
  for (size_t i = 0; i < pivots.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Int d = pivots[i][pivot_rows[i]];
      Int q = floordiv(pivots[j][pivot_rows[i]], d);
      if (q != 0) pivots[j] = sub(pivots[j], scale(q, pivots[i]));
    }
  return pivots;
}

}  // namespace msat
