#pragma once

// Brute-force verification backend: O-lattices in F_q((t))^n confined to the
// window t^{-a} O^n >= L >= t^a O^n. Every such lattice has a unique
// upper-triangular basis (columns, scaled by t^a so all valuations are
// non-negative) with monomial diagonal t^{D_i}, 0 <= D_i <= 2a, and the entry
// in row i reduced mod t^{D_i}. Enumerating those bases directly walks each
// lattice exactly once, and triangularity makes both the Iwasawa component
// (diagonal valuations) and relative positions (valuations of minor gcds)
// exact integer computations -- no linear algebra over the field of fractions.

#include <cstdint>
#include <string>
#include <vector>

#include "msat/finite_field.hpp"
#include "msat/root_datum.hpp"

namespace msat {

struct TruncationWindow {
  int n = 0;       // matrix size
  long long q = 0; // residue field size, prime power
  int a = 0;       // window radius
  long long p = 0; // char(F_q)
  int e = 0;       // q = p^e

  TruncationWindow(int n, long long q, int a);
  int depth() const { return 2 * a; }
  bool operator==(const TruncationWindow& o) const {
    return n == o.n && q == o.q && a == o.a;
  }
};

// Finite Laurent polynomial over F_q; coeffs are field element codes starting
// at t^offset, first and last nonzero (empty = 0).
struct LaurentSeries {
  int offset = 0;
  std::vector<uint32_t> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const LaurentSeries& o) const {
    return is_zero() ? o.is_zero() : (offset == o.offset && coeffs == o.coeffs);
  }
  bool operator<(const LaurentSeries& o) const;
  std::string to_string() const;
};

using LaurentMatrix = std::vector<std::vector<LaurentSeries>>;  // [row][col]

class LatticePoint {
 public:
  // `basis` spans t^a L: upper triangular, diag exactly t^{diag[i]},
  // row-i entries reduced mod t^{diag[i]}. Validated.
  LatticePoint(TruncationWindow window, IntVec diag, LaurentMatrix basis);

  const TruncationWindow& window() const { return window_; }
  const IntVec& diag_valuations() const { return diag_; }
  const LaurentMatrix& basis() const { return basis_; }
  Coweight iwasawa_component() const;  // diag[i] - a

  bool operator==(const LatticePoint& o) const;
  bool operator<(const LatticePoint& o) const;
  std::string to_string() const;

 private:
  TruncationWindow window_;
  IntVec diag_;
  LaurentMatrix basis_;
};

// All lattices in the window, in a fixed deterministic order.
std::vector<LatticePoint> enumerate_lattices(const TruncationWindow& w);

// t^nu O^n; needs |nu_i| <= a.
LatticePoint diagonal_lattice(const TruncationWindow& w, const Coweight& nu);

// Canonical form of span_O(columns) + t^a * (window floor). Columns are in
// unscaled coordinates and must lie in t^{-a} O^n.
LatticePoint lattice_from_generators(const TruncationWindow& w,
                                     const std::vector<std::vector<LaurentSeries>>& columns);

// Elementary divisors of the lattice against O^n (resp. against `base`),
// sorted weakly decreasing.
Coweight relative_position(const LatticePoint& l);
Coweight relative_position(const LatticePoint& target, const LatticePoint& base);

// |{L : L in orbit lambda (or its closure), Iwasawa component nu}|.
// lambda must be dominant with |lambda_i| <= a.
unsigned long long mv_count(const TruncationWindow& w, const Coweight& lambda,
                            const Coweight& nu, bool closure, int jobs = 1);

struct CountRow {
  long long q = 0;
  Coweight lambda;
  Coweight nu;
  unsigned long long raw = 0;
  uint32_t mod_p = 0;

  bool operator==(const CountRow& o) const {
    return q == o.q && lambda == o.lambda && nu == o.nu && raw == o.raw && mod_p == o.mod_p;
  }
};

// Counts for every Iwasawa component meeting the orbit (or closure) of
// lambda, sorted by nu; the mod-p column is raw mod char(F_q).
std::vector<CountRow> satake_transform_oracle(const TruncationWindow& w,
                                              const Coweight& lambda, bool closure,
                                              int jobs = 1);

// |{L' : L' in orbit mu1 from O^n, and t^lambda O^n in orbit mu2 from L'}|.
// mu1, mu2 dominant with |.|_inf <= a; lambda dominant (count is 0 when the
// determinants cannot match).
unsigned long long convolution_count(const TruncationWindow& w, const Coweight& mu1,
                                     const Coweight& mu2, const Coweight& lambda,
                                     int jobs = 1);

struct ConvolutionRow {
  long long q = 0;
  Coweight mu1, mu2, lambda;
  unsigned long long raw = 0;
  uint32_t mod_p = 0;

  bool operator==(const ConvolutionRow& o) const {
    return q == o.q && mu1 == o.mu1 && mu2 == o.mu2 && lambda == o.lambda &&
           raw == o.raw && mod_p == o.mod_p;
  }
};

// Convolution counts for all dominant lambda with a matching determinant,
// sorted by lambda; rows with raw = 0 are dropped.
std::vector<ConvolutionRow> convolution_oracle(const TruncationWindow& w,
                                               const Coweight& mu1, const Coweight& mu2,
                                               int jobs = 1);

}  // namespace msat
