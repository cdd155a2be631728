#include "msat/satake_params.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "msat/error.hpp"
#include "msat/log.hpp"

namespace msat {

namespace {

constexpr long long kLiftSearchCap = 2000000;
constexpr long long kHilbertBoxCap = 5000000;
constexpr long long kCosetWindowCap = 1000000;

Int ceil_div(Int a, Int b) {  // b > 0
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

// x*a + y*b = gcd(|a|, |b|) >= 0.
Int ext_gcd(Int a, Int b, Int* x, Int* y) {
  if (b == 0) {
    *x = a >= 0 ? 1 : -1;
    *y = 0;
    return a >= 0 ? a : -a;
  }
  Int x1 = 0, y1 = 0;
  Int g = ext_gcd(b, a % b, &x1, &y1);
  *x = y1;
  *y = x1 - (a / b) * y1;
  return g;
}

Int linf_norm(const IntVec& v) {
  Int m = 0;
  for (Int x : v) m = std::max(m, x < 0 ? -x : x);
  return m;
}

// Quotient of Z^n by the saturated lattice spanned by `lineality`.
// proj is (n-s) x n with pi(x) = proj * x; section[j] is an integer preimage
// of the j-th quotient unit vector.
struct Quotient {
  int n = 0, s = 0, m = 0;
  IntMat proj;
  std::vector<Coweight> section;

  IntVec apply(const Coweight& x) const {
    IntVec y(m, 0);
    for (int j = 0; j < m; ++j) y[j] = dot(proj[j], x);
    return y;
  }
  Coweight lift(const IntVec& y) const {
    Coweight x(n, 0);
    for (int j = 0; j < m; ++j) x = add(x, scale(y[j], section[j]));
    return x;
  }
};

Quotient quotient_by(const std::vector<Coweight>& lineality, int n) {
  Quotient q;
  q.n = n;
  q.s = static_cast<int>(lineality.size());
  q.m = n - q.s;
  if (q.s == 0) {
    q.proj.assign(n, IntVec(n, 0));
    q.section.assign(n, Coweight(n, 0));
    for (int i = 0; i < n; ++i) {
      q.proj[i][i] = 1;
      q.section[i][i] = 1;
    }
    return q;
  }
  IntMat b(n, IntVec(q.s, 0));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < q.s; ++j) b[r][j] = lineality[j][r];
  SmithResult snf = smith_normal_form(b);
  if (snf.rank != q.s) throw error("lineality basis is not independent");
  for (int i = 0; i < snf.rank; ++i)
    if (snf.diagonal[i] != 1) throw error("lineality lattice is not saturated");
  // Columns of U^{-1} beyond the first s give an integral section.
  IntMat uinv_cols;
  for (int j = q.s; j < n; ++j) {
    IntVec e(n, 0);
    e[j] = 1;
    auto col = solve_integer(snf.U, e);
    if (!col) throw error("failed to invert a unimodular matrix");
    uinv_cols.push_back(*col);
  }
  q.proj.assign(q.m, IntVec(n, 0));
  for (int j = 0; j < q.m; ++j) q.proj[j] = snf.U[q.s + j];
  q.section = uinv_cols;
  return q;
}

// Lex-greatest among the minimal-sup-norm points of x0 + span(lineality).
Coweight canonical_lift(const Coweight& x0, const std::vector<Coweight>& lineality) {
  if (lineality.empty()) return x0;
  int n = static_cast<int>(x0.size());
  int s = static_cast<int>(lineality.size());
  Int n0 = linf_norm(x0);
  if (n0 == 0) return x0;

  std::vector<int> rows;
  IntMat chosen;
  for (int r = 0; r < n && static_cast<int>(rows.size()) < s; ++r) {
    IntVec row(s, 0);
    for (int j = 0; j < s; ++j) row[j] = lineality[j][r];
    chosen.push_back(row);
    if (rank(chosen) == static_cast<int>(chosen.size()))
      rows.push_back(r);
    else
      chosen.pop_back();
  }
  if (static_cast<int>(rows.size()) < s) throw error("lineality basis is degenerate");

  // Row sums of |S^{-1}| bound the coefficients of any candidate.
  std::vector<std::vector<Rat>> inv_cols;  // inv_cols[k][j] = (S^{-1})[j][k]
  for (int k = 0; k < s; ++k) {
    IntVec e(s, 0);
    e[k] = 1;
    auto col = solve_columns_independent(chosen, e);
    if (!col) throw error("lineality basis is degenerate");
    inv_cols.push_back(*col);
  }
  std::vector<Int> bound(s, 0);
  long long total = 1;
  for (int j = 0; j < s; ++j) {
    Rat acc{0, 1};
    for (int k = 0; k < s; ++k) {
      Rat a = inv_cols[k][j];
      if (a.num < 0) a.num = -a.num;
      acc = acc + a;
    }
    bound[j] = ceil_div(acc.num * 2 * n0, acc.den);
    total *= 2 * bound[j] + 1;
    if (total > kLiftSearchCap) throw error("canonical lift search space too large");
  }

  Coweight best = x0;
  Int best_norm = n0;
  IntVec c(s, 0);
  for (int j = 0; j < s; ++j) c[j] = -bound[j];
  while (true) {
    Coweight cand = x0;
    for (int j = 0; j < s; ++j) cand = add(cand, scale(c[j], lineality[j]));
    Int norm = linf_norm(cand);
    if (norm < best_norm || (norm == best_norm && cand > best)) {
      best_norm = norm;
      best = cand;
    }
    int j = s - 1;
    while (j >= 0 && c[j] == bound[j]) {
      c[j] = -bound[j];
      --j;
    }
    if (j < 0) break;
    ++c[j];
  }
  return best;
}

// Rows of the pairing matrix of the simple roots against quotient units,
// negated on the dominant side so the cone is always { R y <= 0 }.
IntMat cone_rows(const BasedRootDatum& rd, const Quotient& q, bool dominant_side) {
  IntMat r(rd.num_simple(), IntVec(q.m, 0));
  for (int i = 0; i < rd.num_simple(); ++i)
    for (int j = 0; j < q.m; ++j) {
      Int v = dot(rd.simple_root(i), q.section[j]);
      r[i][j] = dominant_side ? -v : v;
    }
  return r;
}

bool in_cone(const IntMat& rows, const IntVec& y) {
  for (const IntVec& r : rows)
    if (dot(r, y) > 0) return false;
  return true;
}

std::vector<IntVec> extreme_ray_candidates(const IntMat& rows, int m) {
  std::set<IntVec> rays;
  if (m == 0) return {};
  int l = static_cast<int>(rows.size());
  std::vector<int> pick(m - 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == m - 1) {
      IntMat sub;
      for (int i : pick) sub.push_back(rows[i]);
      std::vector<IntVec> ker = integer_kernel_basis(sub, m);
      if (ker.size() != 1) return;
      const IntVec& r = ker[0];
      if (in_cone(rows, r))
        rays.insert(r);
      else if (in_cone(rows, neg(r)))
        rays.insert(neg(r));
      return;
    }
    for (int i = start; i < l; ++i) {
      pick[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return {rays.begin(), rays.end()};
}

std::vector<IntVec> hilbert_basis(const IntMat& rows, int m) {
  std::vector<IntVec> rays = extreme_ray_candidates(rows, m);
  if (rays.empty()) return {};
  IntVec lo(m, 0), hi(m, 0);
  for (const IntVec& r : rays)
    for (int j = 0; j < m; ++j) {
      lo[j] += std::min<Int>(0, r[j]);
      hi[j] += std::max<Int>(0, r[j]);
    }
  long long total = 1;
  for (int j = 0; j < m; ++j) {
    total *= hi[j] - lo[j] + 1;
    if (total > kHilbertBoxCap) throw error("hilbert basis search space too large");
  }
  std::vector<IntVec> candidates;
  IntVec y = lo;
  while (true) {
    if (std::any_of(y.begin(), y.end(), [](Int v) { return v != 0; }) && in_cone(rows, y))
      candidates.push_back(y);
    int j = m - 1;
    while (j >= 0 && y[j] == hi[j]) {
      y[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++y[j];
  }
  std::vector<IntVec> basis;
  for (const IntVec& h : candidates) {
    bool decomposable = false;
    for (const IntVec& u : candidates) {
      if (u == h) continue;
      if (in_cone(rows, sub(h, u))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) basis.push_back(h);
  }
  return basis;
}

AntidominantMonoid build_monoid(DatumPtr datum, bool dominant_side) {
  if (!datum) throw invalid_input("null root datum");
  const BasedRootDatum& rd = *datum;
  int n = rd.cochar_rank();
  AntidominantMonoid mon;
  mon.datum = datum;
  mon.dominant_side = dominant_side;
  mon.lineality_basis = perp_basis(rd, Levi::full(rd.num_simple()));
  Quotient q = quotient_by(mon.lineality_basis, n);
  IntMat rows = cone_rows(rd, q, dominant_side);
  if (!integer_kernel_basis(rows, q.m).empty())
    throw error("quotient cone has a lineality direction");
  for (const IntVec& h : hilbert_basis(rows, q.m)) {
    Coweight lift = canonical_lift(q.lift(h), mon.lineality_basis);
    for (int i = 0; i < rd.num_simple(); ++i) {
      Int v = dot(rd.simple_root(i), lift);
      if ((dominant_side ? -v : v) > 0) throw error("monoid generator left the cone");
    }
    mon.pointed_generators.push_back(lift);
  }
  std::sort(mon.pointed_generators.begin(), mon.pointed_generators.end());
  mon.generators = mon.pointed_generators;
  for (const Coweight& b : mon.lineality_basis) {
    mon.generators.push_back(b);
    mon.generators.push_back(neg(b));
  }
  std::sort(mon.generators.begin(), mon.generators.end());
  MSAT_LOG_DEBUG("monoid(%s, %s): %zu pointed generators, lineality rank %zu",
                 rd.name().c_str(), dominant_side ? "dominant" : "antidominant",
                 mon.pointed_generators.size(), mon.lineality_basis.size());
  return mon;
}

bool side_in_cone(const BasedRootDatum& rd, bool dominant_side, const Coweight& x) {
  return dominant_side ? is_dominant(rd, x) : is_antidominant(rd, x);
}

}  // namespace

AntidominantMonoid antidominant_monoid(DatumPtr datum) { return build_monoid(std::move(datum), false); }
AntidominantMonoid dominant_monoid(DatumPtr datum) { return build_monoid(std::move(datum), true); }

std::vector<Coweight> perp_basis(const BasedRootDatum& rd, const Levi& levi) {
  check_levi(rd, levi);
  IntMat rows;
  for (int i : levi.indices) rows.push_back(rd.simple_root(i));
  return integer_kernel_basis(rows, rd.cochar_rank());
}

std::vector<Coweight> lambda_alpha_list(const BasedRootDatum& rd) {
  int n = rd.cochar_rank();
  std::vector<Coweight> lineality = perp_basis(rd, Levi::full(rd.num_simple()));
  std::vector<Coweight> out;
  for (int a = 0; a < rd.num_simple(); ++a) {
    IntMat rows;
    for (int i = 0; i < rd.num_simple(); ++i)
      if (i != a) rows.push_back(rd.simple_root(i));
    std::vector<Coweight> ker = integer_kernel_basis(rows, n);
    IntVec t(ker.size(), 0);
    for (size_t j = 0; j < ker.size(); ++j) t[j] = dot(rd.simple_root(a), ker[j]);
    Int g = 0;
    IntVec c(ker.size(), 0);
    for (size_t j = 0; j < ker.size(); ++j) {
      if (t[j] == 0) continue;
      if (g == 0) {
        g = t[j] > 0 ? t[j] : -t[j];
        c[j] = t[j] > 0 ? 1 : -1;
      } else {
        Int x = 0, y = 0;
        Int g2 = ext_gcd(g, t[j], &x, &y);
        for (Int& ci : c) ci *= x;
        c[j] += y;
        g = g2;
      }
    }
    if (g == 0) throw error("simple root is orthogonal to its own kernel complement");
    Coweight x0(n, 0);
    for (size_t j = 0; j < ker.size(); ++j) x0 = add(x0, scale(-c[j], ker[j]));
    out.push_back(canonical_lift(x0, lineality));
  }
  return out;
}

std::vector<BinomialRelation> monoid_relations(const AntidominantMonoid& monoid,
                                               Int degree_bound) {
  if (degree_bound < 0) throw invalid_input("relation degree bound must be non-negative");
  int k = static_cast<int>(monoid.generators.size());
  int n = monoid.datum->cochar_rank();
  std::map<Coweight, std::vector<IntVec>> by_sum;
  IntVec e(k, 0);
  std::function<void(int, Int, const Coweight&)> enumerate = [&](int pos, Int used,
                                                                 const Coweight& sum) {
    if (pos == k) {
      by_sum[sum].push_back(e);
      return;
    }
    for (Int v = 0; used + v <= degree_bound; ++v) {
      e[pos] = v;
      enumerate(pos + 1, used + v, add(sum, scale(v, monoid.generators[pos])));
    }
    e[pos] = 0;
  };
  enumerate(0, 0, Coweight(n, 0));

  std::set<std::pair<IntVec, IntVec>> seen;
  for (const auto& [sum, exps] : by_sum) {
    for (size_t i = 0; i < exps.size(); ++i)
      for (size_t j = i + 1; j < exps.size(); ++j) {
        bool disjoint = true;
        for (int t = 0; t < k && disjoint; ++t)
          if (exps[i][t] != 0 && exps[j][t] != 0) disjoint = false;
        if (!disjoint) continue;
        IntVec left = exps[i], right = exps[j];
        if (left < right) std::swap(left, right);
        seen.insert({left, right});
      }
  }

  auto leq = [](const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  std::vector<std::pair<IntVec, IntVec>> all(seen.begin(), seen.end());
  std::vector<BinomialRelation> out;
  for (const auto& r : all) {
    bool dominated = false;
    for (const auto& o : all) {
      if (o == r) continue;
      if ((leq(o.first, r.first) && leq(o.second, r.second)) ||
          (leq(o.second, r.first) && leq(o.first, r.second))) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(BinomialRelation{r.first, r.second});
  }
  std::sort(out.begin(), out.end(), [](const BinomialRelation& a, const BinomialRelation& b) {
    Int da = std::accumulate(a.left.begin(), a.left.end(), Int{0}) +
             std::accumulate(a.right.begin(), a.right.end(), Int{0});
    Int db = std::accumulate(b.left.begin(), b.left.end(), Int{0}) +
             std::accumulate(b.right.begin(), b.right.end(), Int{0});
    if (da != db) return da < db;
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  });
  return out;
}

std::string relation_to_string(const BinomialRelation& rel) {
  auto side = [](const IntVec& exps) {
    std::string s;
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!s.empty()) s += " + ";
      if (exps[i] != 1) s += std::to_string(exps[i]) + "*";
      s += "g" + std::to_string(i + 1);
    }
    return s.empty() ? std::string("0") : s;
  };
  return side(rel.left) + " = " + side(rel.right);
}

std::optional<IntVec> factor_over_generators(const AntidominantMonoid& monoid,
                                             const Coweight& target) {
  const BasedRootDatum& rd = *monoid.datum;
  int n = rd.cochar_rank();
  if (static_cast<int>(target.size()) != n) throw invalid_input("coweight rank mismatch");
  if (!side_in_cone(rd, monoid.dominant_side, target)) return std::nullopt;

  Quotient q = quotient_by(monoid.lineality_basis, n);
  IntMat rows = cone_rows(rd, q, monoid.dominant_side);
  IntVec phi(q.m, 0);
  for (const IntVec& r : rows)
    for (int j = 0; j < q.m; ++j) phi[j] -= r[j];

  const auto& pg = monoid.pointed_generators;
  std::vector<IntVec> pg_q;
  std::vector<Int> pg_phi;
  for (const Coweight& g : pg) {
    pg_q.push_back(q.apply(g));
    pg_phi.push_back(dot(phi, pg_q.back()));
    if (pg_phi.back() <= 0) throw error("degenerate grading on the pointed cone");
  }
  IntVec y0 = q.apply(target);
  Int phi0 = dot(phi, y0);
  if (phi0 < 0) return std::nullopt;

  IntVec exps(pg.size(), 0);
  std::optional<IntVec> pointed_solution;
  std::function<bool(size_t, IntVec, Int)> rec = [&](size_t idx, IntVec y, Int budget) -> bool {
    if (idx == pg.size()) {
      if (std::all_of(y.begin(), y.end(), [](Int v) { return v == 0; })) {
        pointed_solution = exps;
        return true;
      }
      return false;
    }
    Int step = pg_phi[idx];
    for (Int v = 0; v * step <= budget; ++v) {
      exps[idx] = v;
      if (rec(idx + 1, sub(y, scale(v, pg_q[idx])), budget - v * step)) return true;
    }
    exps[idx] = 0;
    return false;
  };
  if (!rec(0, y0, phi0)) return std::nullopt;

  Coweight residual = target;
  for (size_t j = 0; j < pg.size(); ++j)
    residual = sub(residual, scale((*pointed_solution)[j], pg[j]));
  IntVec lin_coords;
  if (!monoid.lineality_basis.empty()) {
    IntMat b(n, IntVec(monoid.lineality_basis.size(), 0));
    for (int r = 0; r < n; ++r)
      for (size_t j = 0; j < monoid.lineality_basis.size(); ++j)
        b[r][j] = monoid.lineality_basis[j][r];
    auto sol = solve_integer(b, residual);
    if (!sol) throw error("residual left the lineality lattice");
    lin_coords = *sol;
  } else {
    for (Int v : residual)
      if (v != 0) throw error("residual left the lineality lattice");
  }

  IntVec out(monoid.generators.size(), 0);
  auto index_of = [&](const Coweight& g) {
    auto it = std::lower_bound(monoid.generators.begin(), monoid.generators.end(), g);
    if (it == monoid.generators.end() || *it != g) throw error("generator lookup failed");
    return static_cast<size_t>(it - monoid.generators.begin());
  };
  for (size_t j = 0; j < pg.size(); ++j) out[index_of(pg[j])] += (*pointed_solution)[j];
  for (size_t j = 0; j < monoid.lineality_basis.size(); ++j) {
    Int cj = lin_coords[j];
    if (cj > 0)
      out[index_of(monoid.lineality_basis[j])] += cj;
    else if (cj < 0)
      out[index_of(neg(monoid.lineality_basis[j]))] += -cj;
  }
  return out;
}

std::vector<Stratum> strata(const BasedRootDatum& rd) {
  int l = rd.num_simple();
  std::vector<Stratum> out;
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < l; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    out.push_back(Stratum{Levi(idx), rd.cochar_rank() - static_cast<int>(idx.size())});
  }
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
    if (a.levi.size() != b.levi.size()) return a.levi.size() < b.levi.size();
    return a.levi.indices < b.levi.indices;
  });
  return out;
}

bool stratum_in_closure(const Stratum& inner, const Stratum& outer) {
  for (int i : outer.levi.indices)
    if (!inner.levi.contains(i)) return false;
  return true;
}

SatakeParameter::SatakeParameter(DatumPtr datum, FieldPtr field, Levi stratum,
                                 std::vector<FiniteField::Elem> values_on_basis)
    : datum_(std::move(datum)), field_(std::move(field)), stratum_(std::move(stratum)),
      values_(std::move(values_on_basis)) {
  if (!datum_ || !field_) throw invalid_input("parameter needs a root datum and a field");
  check_levi(*datum_, stratum_);
  basis_ = perp_basis(*datum_, stratum_);
  if (values_.size() != basis_.size())
    throw invalid_input("expected one field value per basis vector of the stratum lattice");
  for (FiniteField::Elem v : values_) {
    if (v == 0) throw invalid_input("parameter values must be nonzero on the stratum lattice");
    if (v >= field_->q()) throw invalid_input("field element code out of range");
  }
}

bool SatakeParameter::operator==(const SatakeParameter& o) const {
  return datum_->structurally_equal(*o.datum_) && field_->same_field(*o.field_) &&
         stratum_ == o.stratum_ && values_ == o.values_;
}

namespace {

// Character of the full lattice perp to the stratum, on an arbitrary member.
FiniteField::Elem character_on_perp(const SatakeParameter& chi, const Coweight& v) {
  int n = chi.datum()->cochar_rank();
  IntMat a(n, IntVec(chi.basis().size(), 0));
  for (int r = 0; r < n; ++r)
    for (size_t j = 0; j < chi.basis().size(); ++j) a[r][j] = chi.basis()[j][r];
  auto coords = solve_columns_independent(a, v);
  if (!coords) throw invalid_input("coweight is not orthogonal to the stratum");
  const FiniteField& f = *chi.field();
  FiniteField::Elem acc = f.one();
  for (size_t j = 0; j < coords->size(); ++j) {
    const Rat& c = (*coords)[j];
    if (!c.is_integer()) throw invalid_input("coweight is not in the stratum lattice");
    acc = f.mul(acc, f.pow(chi.values_on_basis()[j], c.num));
  }
  return acc;
}

}  // namespace

FiniteField::Elem evaluate(const SatakeParameter& chi, const Coweight& nu) {
  const BasedRootDatum& rd = *chi.datum();
  if (!is_antidominant(rd, nu))
    throw invalid_input("parameters evaluate on antidominant coweights");
  for (int i : chi.stratum().indices)
    if (dot(rd.simple_root(i), nu) != 0) return chi.field()->zero();
  return character_on_perp(chi, nu);
}

std::vector<std::pair<Coweight, FiniteField::Elem>> generator_values(const SatakeParameter& chi) {
  AntidominantMonoid mon = antidominant_monoid(chi.datum());
  std::vector<std::pair<Coweight, FiniteField::Elem>> out;
  for (const Coweight& g : mon.generators) out.emplace_back(g, evaluate(chi, g));
  return out;
}

SatakeParameter classify(DatumPtr datum, FieldPtr field,
                         const std::vector<std::pair<Coweight, FiniteField::Elem>>& values,
                         Int relation_bound) {
  if (!datum || !field) throw invalid_input("classify needs a root datum and a field");
  const BasedRootDatum& rd = *datum;
  const FiniteField& f = *field;
  AntidominantMonoid mon = antidominant_monoid(datum);

  std::map<Coweight, FiniteField::Elem> val;
  for (const auto& [g, v] : values) {
    if (v >= f.q()) throw invalid_input("field element code out of range");
    if (!val.emplace(g, v).second) throw invalid_input("duplicate generator in value list");
  }
  if (val.size() != mon.generators.size())
    throw invalid_input("expected one value per monoid generator");
  for (const Coweight& g : mon.generators)
    if (!val.count(g)) throw invalid_input("value list does not match the generator set");

  auto product_over = [&](const IntVec& exps) {
    FiniteField::Elem acc = f.one();
    for (size_t j = 0; j < exps.size(); ++j)
      acc = f.mul(acc, f.pow(val[mon.generators[j]], exps[j]));
    return acc;
  };

  for (const BinomialRelation& rel : monoid_relations(mon, relation_bound))
    if (product_over(rel.left) != product_over(rel.right))
      throw verification_error("generator values violate the monoid relation " +
                               relation_to_string(rel));

  auto value_at = [&](const Coweight& target) {
    auto exps = factor_over_generators(mon, target);
    if (!exps) throw error("antidominant coweight failed to factor over the generators");
    return product_over(*exps);
  };

  std::vector<Coweight> lambdas = lambda_alpha_list(rd);
  std::vector<int> zero_set;
  for (int a = 0; a < rd.num_simple(); ++a)
    if (value_at(lambdas[a]) == f.zero()) zero_set.push_back(a);
  Levi stratum(zero_set);

  // Values on the canonical basis of the stratum lattice, shifted into the
  // antidominant cone by a deep direction nu and divided back out.
  std::vector<Coweight> basis = perp_basis(rd, stratum);
  Coweight nu(rd.cochar_rank(), 0);
  for (int a = 0; a < rd.num_simple(); ++a) {
    if (stratum.contains(a)) continue;
    nu = add(nu, lambdas[a]);
  }
  FiniteField::Elem nu_val = f.one();
  bool have_nu = false;
  for (int a = 0; a < rd.num_simple(); ++a)
    if (!stratum.contains(a)) have_nu = true;
  if (have_nu) {
    nu_val = value_at(nu);
    if (nu_val == f.zero())
      throw verification_error("assignment vanishes on the putative stratum lattice");
  }
  std::vector<FiniteField::Elem> basis_values;
  for (const Coweight& b : basis) {
    Int k = 0;
    for (int a = 0; a < rd.num_simple(); ++a) {
      if (stratum.contains(a)) continue;
      Int num = dot(rd.simple_root(a), b);
      Int den = -dot(rd.simple_root(a), nu);  // > 0
      k = std::max(k, ceil_div(num, den));
    }
    Coweight shifted = add(b, scale(k, nu));
    FiniteField::Elem v = value_at(shifted);
    if (v == f.zero())
      throw verification_error("assignment vanishes on the putative stratum lattice");
    basis_values.push_back(f.mul(v, f.pow(nu_val, -k)));
  }

  SatakeParameter chi(datum, field, stratum, basis_values);
  for (const Coweight& g : mon.generators)
    if (evaluate(chi, g) != val[g])
      throw verification_error("generator values are not the values of any parameter");
  MSAT_LOG_INFO("classify: stratum size %zu, rank %d", stratum.size(), chi.rank());
  return chi;
}

SatakeParameter multiply(const SatakeParameter& a, const SatakeParameter& b) {
  if (!a.datum()->structurally_equal(*b.datum()))
    throw invalid_input("parameters live over different root data");
  if (!a.field()->same_field(*b.field()))
    throw invalid_input("parameters live over different fields");
  std::vector<int> merged = a.stratum().indices;
  merged.insert(merged.end(), b.stratum().indices.begin(), b.stratum().indices.end());
  Levi stratum(merged);
  std::vector<Coweight> basis = perp_basis(*a.datum(), stratum);
  const FiniteField& f = *a.field();
  std::vector<FiniteField::Elem> vals;
  for (const Coweight& v : basis)
    vals.push_back(f.mul(character_on_perp(a, v), character_on_perp(b, v)));
  return SatakeParameter(a.datum(), a.field(), stratum, vals);
}

SatakeParameter unit_parameter(DatumPtr datum, FieldPtr field) {
  if (!datum || !field) throw invalid_input("unit parameter needs a root datum and a field");
  std::vector<FiniteField::Elem> vals(datum->cochar_rank(), field->one());
  return SatakeParameter(datum, field, Levi::torus(), vals);
}

bool is_unit(const SatakeParameter& chi) { return chi.stratum().indices.empty(); }

bool is_supersingular(const SatakeParameter& chi) {
  return static_cast<int>(chi.stratum().size()) == chi.datum()->num_simple();
}

SatakeParameter inverse(const SatakeParameter& chi) {
  if (!is_unit(chi)) throw invalid_input("only unit parameters are invertible");
  const FiniteField& f = *chi.field();
  std::vector<FiniteField::Elem> vals;
  for (FiniteField::Elem v : chi.values_on_basis()) vals.push_back(f.inv(v));
  return SatakeParameter(chi.datum(), chi.field(), chi.stratum(), vals);
}

std::vector<CosetClass> coset_decomposition(const BasedRootDatum& rd, Int bound) {
  if (bound < 0) throw invalid_input("window bound must be non-negative");
  int n = rd.cochar_rank();
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= bound + 1;
    if (total > kCosetWindowCap) throw invalid_input("coset window too large");
  }
  std::vector<Coweight> lineality = perp_basis(rd, Levi::full(rd.num_simple()));
  Quotient q = quotient_by(lineality, n);

  std::map<IntVec, std::vector<Coweight>> classes;
  Coweight x(n, 0);
  while (true) {
    if (is_antidominant(rd, x)) classes[q.apply(x)].push_back(x);
    int j = n - 1;
    while (j >= 0 && x[j] == bound) x[j--] = 0;
    if (j < 0) break;
    ++x[j];
  }
  std::vector<CosetClass> out;
  for (auto& [label, members] : classes) {
    std::sort(members.begin(), members.end());
    out.push_back(CosetClass{members.front(), label, members});
  }
  std::sort(out.begin(), out.end(), [](const CosetClass& a, const CosetClass& b) {
    return a.representative < b.representative;
  });
  return out;
}

}  // namespace msat
