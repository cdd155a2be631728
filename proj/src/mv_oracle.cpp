#include "msat/mv_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include "msat/error.hpp"
#include "msat/log.hpp"

namespace msat {

namespace {

constexpr int kInfVal = 1 << 28;

using Elem = FiniteField::Elem;

FieldPtr window_field(const TruncationWindow& w) {
  static std::mutex mu;
  static std::map<std::pair<long long, int>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(w.p, w.e);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FieldPtr f = make_field(w.p, w.e);
  cache.emplace(key, f);
  return f;
}

// ---- Laurent polynomials over F_q (internal working form) ----

struct LP {
  int off = 0;
  std::vector<Elem> c;  // first and last entries nonzero unless empty

  bool zero() const { return c.empty(); }
};

void lp_trim(LP& a) {
  size_t lead = 0;
  while (lead < a.c.size() && a.c[lead] == 0) ++lead;
  if (lead > 0) {
    a.c.erase(a.c.begin(), a.c.begin() + static_cast<long>(lead));
    a.off += static_cast<int>(lead);
  }
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
  if (a.c.empty()) a.off = 0;
}

LP lp_mono(Elem v, int e) {
  LP r;
  if (v != 0) {
    r.off = e;
    r.c = {v};
  }
  return r;
}

int lp_val(const LP& a) { return a.zero() ? kInfVal : a.off; }

LP lp_shift(LP a, int k) {
  if (!a.zero()) a.off += k;
  return a;
}

LP lp_add(const FiniteField& f, const LP& a, const LP& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  int lo = std::min(a.off, b.off);
  int hi = std::max(a.off + static_cast<int>(a.c.size()), b.off + static_cast<int>(b.c.size()));
  LP r;
  r.off = lo;
  r.c.assign(hi - lo, 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[a.off - lo + i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i)
    r.c[b.off - lo + i] = f.add(r.c[b.off - lo + i], b.c[i]);
  lp_trim(r);
  return r;
}

LP lp_neg(const FiniteField& f, LP a) {
  for (Elem& v : a.c) v = f.neg(v);
  return a;
}

LP lp_sub(const FiniteField& f, const LP& a, const LP& b) { return lp_add(f, a, lp_neg(f, b)); }

LP lp_mul(const FiniteField& f, const LP& a, const LP& b) {
  if (a.zero() || b.zero()) return {};
  LP r;
  r.off = a.off + b.off;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
  }
  lp_trim(r);
  return r;
}

using LPMat = std::vector<std::vector<LP>>;

LaurentSeries to_series(const LP& a) {
  LaurentSeries s;
  s.offset = a.off;
  s.coeffs = a.c;
  return s;
}

LP from_series(const LaurentSeries& s) {
  LP a;
  a.off = s.offset;
  a.c = s.coeffs;
  lp_trim(a);
  return a;
}

// Solve base * x = rhs where base is upper triangular with monic monomial
// diagonal t^{db[k]}; exact over Laurent polynomials.
std::vector<LP> solve_upper(const FiniteField& f, const LPMat& base, const IntVec& db,
                            const std::vector<LP>& rhs) {
  int n = static_cast<int>(rhs.size());
  std::vector<LP> x(n);
  for (int k = n - 1; k >= 0; --k) {
    LP acc = rhs[k];
    for (int l = k + 1; l < n; ++l)
      if (!base[k][l].zero() && !x[l].zero())
        acc = lp_sub(f, acc, lp_mul(f, base[k][l], x[l]));
    x[k] = lp_shift(acc, -static_cast<int>(db[k]));
  }
  return x;
}

LP lp_det(const FiniteField& f, const LPMat& m, const std::vector<int>& rows,
          const std::vector<int>& cols) {
  size_t k = rows.size();
  if (k == 1) return m[rows[0]][cols[0]];
  LP acc;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < k; ++j) {
    const LP& pivot = m[rows[0]][cols[j]];
    if (pivot.zero()) continue;
    std::vector<int> sub_cols;
    for (size_t t = 0; t < k; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    LP term = lp_mul(f, pivot, lp_det(f, m, sub_rows, sub_cols));
    if (j % 2 == 1) term = lp_neg(f, term);
    acc = lp_add(f, acc, term);
  }
  return acc;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      fn(pick);
      return;
    }
    for (int i = start; i <= n - (k - pos); ++i) {
      pick[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  if (k == 0)
    fn({});
  else
    rec(0, 0);
}

// Elementary divisors (ascending) of the module spanned by the columns of c,
// via minimum valuations of k x k minors.
IntVec divisors_from_transition(const FiniteField& f, const LPMat& c) {
  int n = static_cast<int>(c.size());
  IntVec cum(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    int best = kInfVal;
    for_each_subset(n, k, [&](const std::vector<int>& rows) {
      for_each_subset(n, k, [&](const std::vector<int>& cols) {
        best = std::min(best, lp_val(lp_det(f, c, rows, cols)));
      });
    });
    if (best >= kInfVal) throw error("transition matrix is singular");
    cum[k] = best;
  }
  IntVec v(n, 0);
  for (int k = 1; k <= n; ++k) v[k - 1] = cum[k] - cum[k - 1];
  return v;
}

Coweight rel_position_of(const FiniteField& f, const LPMat& scaled, int a) {
  LPMat shifted = scaled;
  for (auto& row : shifted)
    for (LP& e : row) e = lp_shift(e, -a);
  IntVec v = divisors_from_transition(f, shifted);
  std::reverse(v.begin(), v.end());
  return v;
}

bool is_weakly_decreasing(const IntVec& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

Int linf(const IntVec& v) {
  Int m = 0;
  for (Int x : v) m = std::max(m, x < 0 ? -x : x);
  return m;
}

// mu <= lambda in dominance order for weakly decreasing integer vectors.
bool dominance_leq_parts(const IntVec& mu, const IntVec& lambda) {
  Int pm = 0, pl = 0;
  for (size_t i = 0; i < mu.size(); ++i) {
    pm += mu[i];
    pl += lambda[i];
    if (pm > pl) return false;
  }
  return pm == pl;
}

bool floor_contained(const FiniteField& f, const LPMat& w, const IntVec& d, int depth) {
  int n = static_cast<int>(d.size());
  for (int j = 0; j < n; ++j) {
    std::vector<LP> x(n);
    for (int k = n - 1; k >= 0; --k) {
      LP acc = (k == j) ? lp_mono(1, depth) : LP{};
      for (int l = k + 1; l < n; ++l)
        if (!w[k][l].zero() && !x[l].zero()) acc = lp_sub(f, acc, lp_mul(f, w[k][l], x[l]));
      if (acc.zero()) {
        x[k] = LP{};
        continue;
      }
      if (acc.off < d[k]) return false;
      x[k] = lp_shift(acc, -static_cast<int>(d[k]));
    }
  }
  return true;
}

// Enumerate the canonical bases in a fixed order, calling fn(d, w) on every
// candidate whose span contains the window floor. Workers share the stream by
// processing candidate indices congruent to `worker` mod `jobs`.
template <typename Fn>
void scan_lattices(const TruncationWindow& win, const FiniteField& f, int jobs, int worker,
                   Fn&& fn) {
  int n = win.n;
  int depth = win.depth();
  long long q = win.q;
  long long counter = 0;
  IntVec d(n, 0);
  while (true) {
    std::vector<std::tuple<int, int, int>> digit_pos;  // (row, col, exponent)
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        for (int k = 0; k < d[i]; ++k) digit_pos.emplace_back(i, j, k);
    std::vector<Elem> digits(digit_pos.size(), 0);
    while (true) {
      if (counter % jobs == worker) {
        LPMat w(n, std::vector<LP>(n));
        for (int i = 0; i < n; ++i) w[i][i] = lp_mono(1, static_cast<int>(d[i]));
        std::vector<std::vector<std::vector<Elem>>> raw(
            n, std::vector<std::vector<Elem>>(n));
        for (size_t t = 0; t < digits.size(); ++t) {
          auto [i, j, k] = digit_pos[t];
          if (raw[i][j].empty()) raw[i][j].assign(d[i], 0);
          raw[i][j][k] = digits[t];
        }
        for (int j = 1; j < n; ++j)
          for (int i = 0; i < j; ++i)
            if (!raw[i][j].empty()) {
              LP e;
              e.off = 0;
              e.c = raw[i][j];
              lp_trim(e);
              w[i][j] = e;
            }
        if (floor_contained(f, w, d, depth)) fn(d, w);
      }
      ++counter;
      size_t t = 0;
      while (t < digits.size() && digits[t] == static_cast<Elem>(q - 1)) digits[t++] = 0;
      if (t == digits.size()) break;
      ++digits[t];
    }
    int j = n - 1;
    while (j >= 0 && d[j] == depth) d[j--] = 0;
    if (j < 0) break;
    ++d[j];
  }
}

LaurentMatrix to_matrix(const LPMat& w) {
  LaurentMatrix m(w.size(), std::vector<LaurentSeries>(w.size()));
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = 0; j < w.size(); ++j) m[i][j] = to_series(w[i][j]);
  return m;
}

LPMat to_lp(const LaurentMatrix& m) {
  LPMat w(m.size(), std::vector<LP>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) w[i][j] = from_series(m[i][j]);
  return w;
}

int clamp_jobs(int jobs) {
  if (jobs < 1 || jobs > 64) throw invalid_input("jobs must be between 1 and 64");
  return jobs;
}

// Dominant integer vectors of the given length with entries in [-hi, hi]
// summing to `total`, lex-descending order.
std::vector<IntVec> dominant_vectors(int length, Int hi, Int total) {
  std::vector<IntVec> out;
  IntVec cur(length, 0);
  std::function<void(int, Int, Int)> rec = [&](int pos, Int prev, Int remaining) {
    if (pos == length) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (Int v = std::min(prev, hi); v >= -hi; --v) {
      Int rest = remaining - v;
      if (rest > (length - pos - 1) * hi || rest < -(length - pos - 1) * hi) continue;
      if (rest != 0 && pos == length - 1) continue;
      cur[pos] = v;
      rec(pos + 1, v, rest);
    }
  };
  rec(0, hi, total);
  return out;
}

}  // namespace

TruncationWindow::TruncationWindow(int n_, long long q_, int a_) : n(n_), q(q_), a(a_) {
  if (n < 1 || n > 4) throw invalid_input("window size n must be between 1 and 4");
  if (a < 1 || a > 3) throw invalid_input("window radius a must be between 1 and 3");
  if (q < 2 || q > 8) throw invalid_input("residue field size q must be between 2 and 8");
  factor_prime_power(q, &p, &e);
}

bool LaurentSeries::operator<(const LaurentSeries& o) const {
  if (is_zero() != o.is_zero()) return is_zero();
  if (is_zero()) return false;
  if (offset != o.offset) return offset < o.offset;
  return coeffs < o.coeffs;
}

std::string LaurentSeries::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    int e = offset + static_cast<int>(i);
    if (e == 0)
      os << coeffs[i];
    else {
      if (coeffs[i] != 1) os << coeffs[i] << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LatticePoint::LatticePoint(TruncationWindow window, IntVec diag, LaurentMatrix basis)
    : window_(window), diag_(std::move(diag)), basis_(std::move(basis)) {
  int n = window_.n;
  if (static_cast<int>(diag_.size()) != n) throw invalid_input("diagonal has wrong length");
  if (static_cast<int>(basis_.size()) != n) throw invalid_input("basis has wrong shape");
  for (const auto& row : basis_)
    if (static_cast<int>(row.size()) != n) throw invalid_input("basis has wrong shape");
  for (int i = 0; i < n; ++i) {
    if (diag_[i] < 0 || diag_[i] > window_.depth())
      throw invalid_input("diagonal valuation outside the window");
    const LaurentSeries& dd = basis_[i][i];
    if (dd.coeffs != std::vector<uint32_t>{1} || dd.offset != diag_[i])
      throw invalid_input("diagonal entry must be the monomial t^diag");
    for (int j = 0; j < i; ++j)
      if (!basis_[i][j].is_zero()) throw invalid_input("basis must be upper triangular");
    for (int j = i + 1; j < n; ++j) {
      const LaurentSeries& s = basis_[i][j];
      if (s.is_zero()) continue;
      if (s.offset < 0 || s.offset + static_cast<int>(s.coeffs.size()) > diag_[i])
        throw invalid_input("row entry is not reduced mod the row pivot");
      for (uint32_t c : s.coeffs)
        if (c >= window_.q) throw invalid_input("coefficient code out of range");
      if (s.coeffs.front() == 0 || s.coeffs.back() == 0)
        throw invalid_input("series coefficients must be trimmed");
    }
  }
  FieldPtr f = window_field(window_);
  if (!floor_contained(*f, to_lp(basis_), diag_, window_.depth()))
    throw invalid_input("basis does not contain the window floor");
}

Coweight LatticePoint::iwasawa_component() const {
  Coweight nu(diag_.size(), 0);
  for (size_t i = 0; i < diag_.size(); ++i) nu[i] = diag_[i] - window_.a;
  return nu;
}

bool LatticePoint::operator==(const LatticePoint& o) const {
  return window_ == o.window_ && diag_ == o.diag_ && basis_ == o.basis_;
}

bool LatticePoint::operator<(const LatticePoint& o) const {
  if (!(window_ == o.window_)) throw invalid_input("comparing lattices from different windows");
  if (diag_ != o.diag_) return diag_ < o.diag_;
  for (size_t i = 0; i < basis_.size(); ++i)
    for (size_t j = 0; j < basis_.size(); ++j) {
      if (basis_[i][j] == o.basis_[i][j]) continue;
      return basis_[i][j] < o.basis_[i][j];
    }
  return false;
}

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < window_.n; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < window_.n; ++j) {
      if (j) os << ", ";
      os << basis_[i][j].to_string();
    }
  }
  os << "]";
  return os.str();
}

std::vector<LatticePoint> enumerate_lattices(const TruncationWindow& w) {
  FieldPtr f = window_field(w);
  std::vector<LatticePoint> out;
  scan_lattices(w, *f, 1, 0,
                [&](const IntVec& d, const LPMat& m) { out.emplace_back(w, d, to_matrix(m)); });
  return out;
}

LatticePoint diagonal_lattice(const TruncationWindow& w, const Coweight& nu) {
  if (static_cast<int>(nu.size()) != w.n) throw invalid_input("coweight has wrong length");
  if (linf(nu) > w.a) throw invalid_input("diagonal lattice outside the window");
  IntVec d(w.n, 0);
  LaurentMatrix m(w.n, std::vector<LaurentSeries>(w.n));
  for (int i = 0; i < w.n; ++i) {
    d[i] = nu[i] + w.a;
    m[i][i].offset = static_cast<int>(d[i]);
    m[i][i].coeffs = {1};
  }
  return LatticePoint(w, d, m);
}

LatticePoint lattice_from_generators(const TruncationWindow& w,
                                     const std::vector<std::vector<LaurentSeries>>& columns) {
  FieldPtr fp = window_field(w);
  const FiniteField& f = *fp;
  int n = w.n;
  int depth = w.depth();
  // Working precision. Entries only matter mod t^depth in the end, but the
  // elimination divides by pivots (valuation <= depth, once per row), so keep
  // n*depth spare digits; tails beyond that lie inside the floor lattice.
  int prec = n * depth + 1;

  // Columns as coefficient arrays mod t^prec, scaled by t^a.
  using RPoly = std::vector<Elem>;
  auto rp_val = [&](const RPoly& g) {
    for (int k = 0; k < prec; ++k)
      if (g[k] != 0) return k;
    return prec;
  };
  auto rp_mul = [&](const RPoly& x, const RPoly& y) {
    RPoly r(prec, 0);
    for (int i = 0; i < prec; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j + i < prec; ++j)
        if (y[j] != 0) r[i + j] = f.add(r[i + j], f.mul(x[i], y[j]));
    }
    return r;
  };
  auto rp_sub = [&](const RPoly& x, const RPoly& y) {
    RPoly r(prec, 0);
    for (int k = 0; k < prec; ++k) r[k] = f.sub(x[k], y[k]);
    return r;
  };
  auto series_inv = [&](const RPoly& u) {
    RPoly r(prec, 0);
    Elem u0 = f.inv(u[0]);
    r[0] = u0;
    for (int k = 1; k < prec; ++k) {
      Elem acc = 0;
      for (int i = 1; i <= k; ++i) acc = f.add(acc, f.mul(u[i], r[k - i]));
      r[k] = f.neg(f.mul(u0, acc));
    }
    return r;
  };

  using RCol = std::vector<RPoly>;
  std::vector<RCol> active;
  for (const auto& col : columns) {
    if (static_cast<int>(col.size()) != n) throw invalid_input("generator has wrong length");
    RCol c(n, RPoly(prec, 0));
    for (int i = 0; i < n; ++i) {
      const LaurentSeries& s = col[i];
      if (s.is_zero()) continue;
      if (s.offset < -w.a) throw invalid_input("generator lies outside the window");
      for (size_t k = 0; k < s.coeffs.size(); ++k) {
        if (s.coeffs[k] >= w.q) throw invalid_input("coefficient code out of range");
        int e = s.offset + static_cast<int>(k) + w.a;  // scaled exponent
        if (e < prec) c[i][e] = s.coeffs[k];
      }
    }
    active.push_back(std::move(c));
  }
  // The floor vectors t^a e_i are generators too; they interact with the
  // columns above their pivot rows, so they go through the same elimination.
  for (int i = 0; i < n; ++i) {
    RCol c(n, RPoly(prec, 0));
    c[i][depth] = 1;
    active.push_back(std::move(c));
  }

  IntVec d(n, 0);
  std::vector<RCol> pivot(n, RCol(n, RPoly(prec, 0)));
  for (int i = n - 1; i >= 0; --i) {
    int best = -1, best_val = prec;
    for (size_t t = 0; t < active.size(); ++t) {
      int v = rp_val(active[t][i]);
      if (v < best_val) {
        best_val = v;
        best = static_cast<int>(t);
      }
    }
    if (best < 0 || best_val > depth) throw error("window floor lost during elimination");
    RCol g = active[best];
    active.erase(active.begin() + best);
    // Normalize so that row i is exactly t^{best_val}.
    RPoly unit(prec, 0);
    for (int k = best_val; k < prec; ++k) unit[k - best_val] = g[i][k];
    RPoly uinv = series_inv(unit);
    for (int r = 0; r < n; ++r) g[r] = rp_mul(g[r], uinv);
    for (RCol& h : active) {
      int hv = rp_val(h[i]);
      if (hv == prec) continue;
      RPoly c(prec, 0);
      for (int k = best_val; k < prec; ++k) c[k - best_val] = h[i][k];
      for (int r = 0; r < n; ++r) h[r] = rp_sub(h[r], rp_mul(c, g[r]));
    }
    d[i] = best_val;
    pivot[i] = g;
  }
  for (const RCol& h : active)
    for (const RPoly& entry : h)
      if (rp_val(entry) != prec) throw error("column elimination left a nonzero residue");

  // Reduce entries above each pivot row.
  for (int j = 0; j < n; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      RPoly c(prec, 0);
      bool any = false;
      for (int k = static_cast<int>(d[i]); k < prec; ++k)
        if (pivot[j][i][k] != 0) {
          c[k - d[i]] = pivot[j][i][k];
          any = true;
        }
      if (!any) continue;
      for (int r = 0; r < n; ++r) pivot[j][r] = rp_sub(pivot[j][r], rp_mul(c, pivot[i][r]));
    }
  }

  LaurentMatrix m(n, std::vector<LaurentSeries>(n));
  for (int j = 0; j < n; ++j) {
    m[j][j].offset = static_cast<int>(d[j]);
    m[j][j].coeffs = {1};
    for (int i = 0; i < j; ++i) {
      LP e;
      e.off = 0;
      e.c = pivot[j][i];
      lp_trim(e);
      m[i][j] = to_series(e);
    }
    for (int i = j + 1; i < n; ++i)
      if (rp_val(pivot[j][i]) != prec) throw error("elimination produced a non-triangular basis");
  }
  return LatticePoint(w, d, m);
}

Coweight relative_position(const LatticePoint& l) {
  FieldPtr f = window_field(l.window());
  return rel_position_of(*f, to_lp(l.basis()), l.window().a);
}

Coweight relative_position(const LatticePoint& target, const LatticePoint& base) {
  if (!(target.window() == base.window()))
    throw invalid_input("lattices live in different windows");
  FieldPtr fp = window_field(target.window());
  const FiniteField& f = *fp;
  int n = target.window().n;
  LPMat wb = to_lp(base.basis());
  LPMat wt = to_lp(target.basis());
  LPMat c(n, std::vector<LP>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<LP> rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = wt[i][j];
    std::vector<LP> x = solve_upper(f, wb, base.diag_valuations(), rhs);
    for (int i = 0; i < n; ++i) c[i][j] = x[i];
  }
  IntVec v = divisors_from_transition(f, c);
  std::reverse(v.begin(), v.end());
  return v;
}

unsigned long long mv_count(const TruncationWindow& w, const Coweight& lambda,
                            const Coweight& nu, bool closure, int jobs) {
  jobs = clamp_jobs(jobs);
  if (static_cast<int>(lambda.size()) != w.n || static_cast<int>(nu.size()) != w.n)
    throw invalid_input("coweight has wrong length");
  if (!is_weakly_decreasing(lambda)) throw invalid_input("lambda must be dominant");
  if (linf(lambda) > w.a) throw invalid_input("lambda exceeds the window radius");
  FieldPtr fp = window_field(w);
  const FiniteField& f = *fp;

  std::vector<unsigned long long> partial(jobs, 0);
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t)
    workers.emplace_back([&, t] {
      scan_lattices(w, f, jobs, t, [&](const IntVec& d, const LPMat& m) {
        for (int i = 0; i < w.n; ++i)
          if (d[i] - w.a != nu[i]) return;
        Coweight rel = rel_position_of(f, m, w.a);
        if (closure ? dominance_leq_parts(rel, lambda) : rel == lambda) ++partial[t];
      });
    });
  for (auto& th : workers) th.join();
  return std::accumulate(partial.begin(), partial.end(), 0ULL);
}

std::vector<CountRow> satake_transform_oracle(const TruncationWindow& w,
                                              const Coweight& lambda, bool closure,
                                              int jobs) {
  jobs = clamp_jobs(jobs);
  if (static_cast<int>(lambda.size()) != w.n) throw invalid_input("coweight has wrong length");
  if (!is_weakly_decreasing(lambda)) throw invalid_input("lambda must be dominant");
  if (linf(lambda) > w.a) throw invalid_input("lambda exceeds the window radius");
  FieldPtr fp = window_field(w);
  const FiniteField& f = *fp;

  std::vector<std::map<Coweight, unsigned long long>> partial(jobs);
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t)
    workers.emplace_back([&, t] {
      scan_lattices(w, f, jobs, t, [&](const IntVec& d, const LPMat& m) {
        Coweight rel = rel_position_of(f, m, w.a);
        if (!(closure ? dominance_leq_parts(rel, lambda) : rel == lambda)) return;
        Coweight nu(w.n, 0);
        for (int i = 0; i < w.n; ++i) nu[i] = d[i] - w.a;
        ++partial[t][nu];
      });
    });
  for (auto& th : workers) th.join();

  std::map<Coweight, unsigned long long> merged;
  for (const auto& p : partial)
    for (const auto& [nu, c] : p) merged[nu] += c;
  std::vector<CountRow> rows;
  for (const auto& [nu, c] : merged)
    rows.push_back(CountRow{w.q, lambda, nu, c, static_cast<uint32_t>(c % w.p)});
  MSAT_LOG_INFO("satake oracle: q=%lld lambda-components %zu", w.q, rows.size());
  return rows;
}

namespace {

unsigned long long convolution_count_impl(const TruncationWindow& w, const FiniteField& f,
                                          const Coweight& mu1, const Coweight& mu2,
                                          const std::vector<IntVec>& targets,
                                          std::map<IntVec, unsigned long long>* table,
                                          int jobs) {
  std::vector<std::map<IntVec, unsigned long long>> partial(jobs);
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t)
    workers.emplace_back([&, t] {
      scan_lattices(w, f, jobs, t, [&](const IntVec& d, const LPMat& m) {
        if (rel_position_of(f, m, w.a) != mu1) return;
        for (const IntVec& lambda : targets) {
          LPMat c(w.n, std::vector<LP>(w.n));
          for (int j = 0; j < w.n; ++j) {
            std::vector<LP> rhs(w.n);
            rhs[j] = lp_mono(1, static_cast<int>(lambda[j]) + w.a);
            std::vector<LP> x = solve_upper(f, m, d, rhs);
            for (int i = 0; i < w.n; ++i) c[i][j] = x[i];
          }
          IntVec v = divisors_from_transition(f, c);
          std::reverse(v.begin(), v.end());
          if (v == mu2) ++partial[t][lambda];
        }
      });
    });
  for (auto& th : workers) th.join();

  unsigned long long total = 0;
  for (const auto& p : partial)
    for (const auto& [lambda, c] : p) {
      total += c;
      if (table) (*table)[lambda] += c;
    }
  return total;
}

}  // namespace

unsigned long long convolution_count(const TruncationWindow& w, const Coweight& mu1,
                                     const Coweight& mu2, const Coweight& lambda, int jobs) {
  jobs = clamp_jobs(jobs);
  for (const Coweight* v : {&mu1, &mu2, &lambda})
    if (static_cast<int>(v->size()) != w.n) throw invalid_input("coweight has wrong length");
  if (!is_weakly_decreasing(mu1) || !is_weakly_decreasing(mu2) || !is_weakly_decreasing(lambda))
    throw invalid_input("convolution arguments must be dominant");
  if (linf(mu1) > w.a || linf(mu2) > w.a)
    throw invalid_input("mu exceeds the window radius");
  Int sum = std::accumulate(lambda.begin(), lambda.end(), Int{0});
  Int expect = std::accumulate(mu1.begin(), mu1.end(), Int{0}) +
               std::accumulate(mu2.begin(), mu2.end(), Int{0});
  if (sum != expect) return 0;
  FieldPtr fp = window_field(w);
  return convolution_count_impl(w, *fp, mu1, mu2, {lambda}, nullptr, jobs);
}

std::vector<ConvolutionRow> convolution_oracle(const TruncationWindow& w, const Coweight& mu1,
                                               const Coweight& mu2, int jobs) {
  jobs = clamp_jobs(jobs);
  if (static_cast<int>(mu1.size()) != w.n || static_cast<int>(mu2.size()) != w.n)
    throw invalid_input("coweight has wrong length");
  if (!is_weakly_decreasing(mu1) || !is_weakly_decreasing(mu2))
    throw invalid_input("convolution arguments must be dominant");
  if (linf(mu1) > w.a || linf(mu2) > w.a)
    throw invalid_input("mu exceeds the window radius");
  Int total = std::accumulate(mu1.begin(), mu1.end(), Int{0}) +
              std::accumulate(mu2.begin(), mu2.end(), Int{0});
  std::vector<IntVec> targets = dominant_vectors(w.n, 2 * w.a, total);
  FieldPtr fp = window_field(w);
  std::map<IntVec, unsigned long long> table;
  convolution_count_impl(w, *fp, mu1, mu2, targets, &table, jobs);
  std::vector<ConvolutionRow> rows;
  for (const auto& [lambda, c] : table)
    if (c > 0)
      rows.push_back(
          ConvolutionRow{w.q, mu1, mu2, lambda, c, static_cast<uint32_t>(c % w.p)});
  return rows;
}

}  // namespace msat
