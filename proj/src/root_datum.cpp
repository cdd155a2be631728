#include "msat/root_datum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "msat/error.hpp"

namespace msat {

namespace {

constexpr Int kWeylOrderCap = 100000;
constexpr size_t kRootClosureCap = 10000;

IntMat cartan_matrix(int n) {  // type A_{n-1}, size (n-1) x (n-1)
  IntMat c(n - 1, IntVec(n - 1, 0));
  for (int i = 0; i < n - 1; ++i) {
    c[i][i] = 2;
    if (i > 0) c[i][i - 1] = -1;
    if (i + 1 < n - 1) c[i][i + 1] = -1;
  }
  return c;
}

}  // namespace

Levi::Levi(std::vector<int> idx) : indices(std::move(idx)) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!indices.empty() && indices.front() < 0)
    throw invalid_input("Levi indices must be non-negative");
}

Levi Levi::full(int num_simple) {
  std::vector<int> idx(num_simple);
  for (int i = 0; i < num_simple; ++i) idx[i] = i;
  return Levi(std::move(idx));
}

bool Levi::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

Coweight WeylElement::apply(const Coweight& mu) const {
  size_t n = matrix.size();
  if (mu.size() != n) throw invalid_input("coweight rank mismatch");
  Coweight out(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i] += matrix[i][j] * mu[j];
  return out;
}

IntVec WeylElement::coapply_inverse(const IntVec& character) const {
  size_t n = matrix.size();
  if (character.size() != n) throw invalid_input("character rank mismatch");
  IntVec out(n, 0);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) out[j] += matrix[i][j] * character[i];
  return out;
}

bool WeylElement::is_identity() const {
  for (size_t i = 0; i < matrix.size(); ++i)
    for (size_t j = 0; j < matrix.size(); ++j)
      if (matrix[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

BasedRootDatum::BasedRootDatum(std::string name, int cochar_rank,
                               IntMat simple_roots, IntMat simple_coroots)
    : name_(std::move(name)),
      rank_(cochar_rank),
      simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)) {
  validate();
  compute_positive_roots();
}

Int BasedRootDatum::cartan(int i, int j) const {
  return dot(simple_roots_.at(i), simple_coroots_.at(j));
}

Int BasedRootDatum::pairing(const IntVec& character, const Coweight& mu) const {
  return dot(character, mu);
}

void BasedRootDatum::validate() const {
  if (rank_ < 0) throw invalid_input("negative cocharacter rank");
  if (simple_roots_.size() != simple_coroots_.size())
    throw invalid_input("simple root / coroot count mismatch");
  int l = static_cast<int>(simple_roots_.size());
  if (l > rank_)
    throw invalid_input("more simple roots than the cocharacter rank");
  for (const auto& v : simple_roots_)
    if (static_cast<int>(v.size()) != rank_)
      throw invalid_input("simple root has wrong length");
  for (const auto& v : simple_coroots_)
    if (static_cast<int>(v.size()) != rank_)
      throw invalid_input("simple coroot has wrong length");
  if (l == 0) return;
  if (rank(simple_roots_) != l)
    throw invalid_input("simple roots are linearly dependent");
  if (rank(simple_coroots_) != l)
    throw invalid_input("simple coroots are linearly dependent");
  // Cartan matrix conditions for a finite based root datum.
  IntMat c(l, IntVec(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) c[i][j] = cartan(i, j);
  for (int i = 0; i < l; ++i) {
    if (c[i][i] != 2) throw invalid_input("Cartan diagonal entry is not 2");
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0) throw invalid_input("positive off-diagonal Cartan entry");
      if ((c[i][j] == 0) != (c[j][i] == 0))
        throw invalid_input("asymmetric zero pattern in Cartan matrix");
    }
  }
  // Finite type <=> all leading principal minors are positive.
  for (int k = 1; k <= l; ++k) {
    std::vector<std::vector<Rat>> M(k, std::vector<Rat>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) M[i][j] = Rat(c[i][j]);
    Rat det(1);
    for (int col = 0; col < k; ++col) {
      int p = -1;
      for (int i = col; i < k; ++i)
        if (!M[i][col].is_zero()) {
          p = i;
          break;
        }
      if (p < 0) {
        det = Rat(0);
        break;
      }
      if (p != col) {
        std::swap(M[p], M[col]);
        det = -det;
      }
      det = det * M[col][col];
      for (int i = col + 1; i < k; ++i) {
        if (M[i][col].is_zero()) continue;
        Rat f = M[i][col] / M[col][col];
        for (int j = col; j < k; ++j) M[i][j] = M[i][j] - f * M[col][j];
      }
    }
    if (!(Rat(0) < det))
      throw invalid_input("Cartan matrix is not of finite type");
  }
}

void BasedRootDatum::compute_positive_roots() {
  int l = num_simple();
  if (l == 0) return;
  // Closure of the simple roots under all simple reflections (character side).
  std::set<IntVec> all(simple_roots_.begin(), simple_roots_.end());
  std::vector<IntVec> queue(simple_roots_.begin(), simple_roots_.end());
  while (!queue.empty()) {
    IntVec beta = queue.back();
    queue.pop_back();
    for (int i = 0; i < l; ++i) {
      Int c = dot(beta, simple_coroots_[i]);
      if (c == 0) continue;
      IntVec img = sub(beta, scale(c, simple_roots_[i]));
      if (all.insert(img).second) {
        if (all.size() > kRootClosureCap)
          throw invalid_input("root closure exceeds cap; datum is not finite");
        queue.push_back(img);
      }
    }
  }
  // Positive roots: non-negative coordinates on the simple roots. Order by
  // height, then lexicographically.
  std::vector<std::pair<Int, IntVec>> pos;
  IntMat cols(rank_, IntVec(l));
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < rank_; ++i) cols[i][j] = simple_roots_[j][i];
  for (const auto& beta : all) {
    auto sol = solve_columns_independent(cols, beta);
    if (!sol) throw error("root outside the span of the simple roots");
    bool nonneg = true, integral = true;
    Int height = 0;
    for (const Rat& r : *sol) {
      if (!r.is_integer()) integral = false;
      if (r.num < 0) nonneg = false;
      height += r.num;  // exact when integral; only used if kept
    }
    if (!integral) throw error("root with non-integer simple coordinates");
    if (nonneg) pos.emplace_back(height, beta);
  }
  std::sort(pos.begin(), pos.end());
  positive_roots_.clear();
  for (auto& p : pos) positive_roots_.push_back(std::move(p.second));
}

std::vector<IntVec> BasedRootDatum::positive_roots_levi(const Levi& levi) const {
  for (int i : levi.indices)
    if (i >= num_simple()) throw invalid_input("Levi index out of range");
  if (static_cast<int>(levi.size()) == num_simple()) return positive_roots_;
  // Closure of the Levi simple roots under the Levi reflections.
  std::set<IntVec> all;
  std::vector<IntVec> queue;
  for (int i : levi.indices) {
    all.insert(simple_roots_[i]);
    queue.push_back(simple_roots_[i]);
  }
  while (!queue.empty()) {
    IntVec beta = queue.back();
    queue.pop_back();
    for (int i : levi.indices) {
      Int c = dot(beta, simple_coroots_[i]);
      if (c == 0) continue;
      IntVec img = sub(beta, scale(c, simple_roots_[i]));
      if (all.insert(img).second) queue.push_back(img);
    }
  }
  std::vector<IntVec> pos;
  for (const auto& beta : positive_roots_)
    if (all.count(beta)) pos.push_back(beta);
  return pos;
}

bool BasedRootDatum::is_positive_root(const IntVec& character) const {
  return std::find(positive_roots_.begin(), positive_roots_.end(), character) !=
         positive_roots_.end();
}

bool BasedRootDatum::structurally_equal(const BasedRootDatum& o) const {
  return rank_ == o.rank_ && simple_roots_ == o.simple_roots_ &&
         simple_coroots_ == o.simple_coroots_;
}

DatumPtr build_standard(Family family, int rank_param) {
  switch (family) {
    case Family::GL: {
      int n = rank_param;
      if (n < 1) throw invalid_input("GL_n needs n >= 1");
      IntMat roots, coroots;
      for (int i = 0; i < n - 1; ++i) {
        IntVec v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
        coroots.push_back(v);
      }
      return std::make_shared<BasedRootDatum>("GL" + std::to_string(n), n,
                                              roots, coroots);
    }
    case Family::SL: {
      int n = rank_param;
      if (n < 2) throw invalid_input("SL_n needs n >= 2");
      IntMat roots = cartan_matrix(n);
      IntMat coroots;
      for (int i = 0; i < n - 1; ++i) {
        IntVec v(n - 1, 0);
        v[i] = 1;
        coroots.push_back(v);
      }
      return std::make_shared<BasedRootDatum>("SL" + std::to_string(n), n - 1,
                                              roots, coroots);
    }
    case Family::PGL: {
      int n = rank_param;
      if (n < 2) throw invalid_input("PGL_n needs n >= 2");
      IntMat roots;
      for (int i = 0; i < n - 1; ++i) {
        IntVec v(n - 1, 0);
        v[i] = 1;
        roots.push_back(v);
      }
      IntMat c = cartan_matrix(n);
      IntMat coroots(n - 1, IntVec(n - 1));
      for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) coroots[i][j] = c[j][i];
      return std::make_shared<BasedRootDatum>("PGL" + std::to_string(n), n - 1,
                                              roots, coroots);
    }
    case Family::Sp: {
      int m = rank_param;
      if (m < 2) throw invalid_input("Sp_2m needs m >= 2");
      IntMat roots, coroots;
      for (int i = 0; i < m - 1; ++i) {
        IntVec v(m, 0);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
        coroots.push_back(v);
      }
      IntVec last(m, 0), lastco(m, 0);
      last[m - 1] = 2;
      lastco[m - 1] = 1;
      roots.push_back(last);
      coroots.push_back(lastco);
      return std::make_shared<BasedRootDatum>("Sp" + std::to_string(2 * m), m,
                                              roots, coroots);
    }
  }
  throw invalid_input("unknown family");
}

DatumPtr build_standard(const std::string& name) {
  auto parse = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    std::string digits = name.substr(prefix.size());
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    return std::stoi(digits);
  };
  if (auto n = parse("PGL")) return build_standard(Family::PGL, *n);
  if (auto n = parse("GL")) return build_standard(Family::GL, *n);
  if (auto n = parse("SL")) return build_standard(Family::SL, *n);
  if (auto n = parse("Sp")) {
    if (*n % 2 != 0) throw invalid_input("Sp needs an even matrix size");
    return build_standard(Family::Sp, *n / 2);
  }
  throw invalid_input("unknown group name: " + name);
}

bool is_dominant(const BasedRootDatum& rd, const Coweight& mu) {
  return is_dominant_levi(rd, Levi::full(rd.num_simple()), mu);
}

bool is_dominant_levi(const BasedRootDatum& rd, const Levi& levi,
                      const Coweight& mu) {
  if (static_cast<int>(mu.size()) != rd.cochar_rank())
    throw invalid_input("coweight rank mismatch");
  for (int i : levi.indices)
    if (dot(rd.simple_root(i), mu) < 0) return false;
  return true;
}

bool is_antidominant(const BasedRootDatum& rd, const Coweight& mu) {
  if (static_cast<int>(mu.size()) != rd.cochar_rank())
    throw invalid_input("coweight rank mismatch");
  for (int i = 0; i < rd.num_simple(); ++i)
    if (dot(rd.simple_root(i), mu) > 0) return false;
  return true;
}

bool is_antidominant_levi(const BasedRootDatum& rd, const Levi& levi,
                          const Coweight& mu) {
  if (static_cast<int>(mu.size()) != rd.cochar_rank())
    throw invalid_input("coweight rank mismatch");
  for (int i : levi.indices)
    if (dot(rd.simple_root(i), mu) > 0) return false;
  return true;
}

void check_levi(const BasedRootDatum& rd, const Levi& levi) {
  for (int i : levi.indices)
    if (i < 0 || i >= rd.num_simple())
      throw invalid_input("Levi index out of range");
}

namespace {

IntMat coroot_columns(const BasedRootDatum& rd, const Levi& levi) {
  IntMat cols(rd.cochar_rank(), IntVec(levi.size()));
  for (size_t j = 0; j < levi.indices.size(); ++j) {
    const Coweight& cv = rd.simple_coroot(levi.indices[j]);
    for (int i = 0; i < rd.cochar_rank(); ++i) cols[i][j] = cv[i];
  }
  return cols;
}

// lambda - mu as non-negative integer coordinates on the Levi coroots.
std::optional<IntVec> dominance_coords(const BasedRootDatum& rd,
                                       const Levi& levi, const Coweight& mu,
                                       const Coweight& lambda) {
  auto sol = solve_columns_independent(coroot_columns(rd, levi),
                                       sub(lambda, mu));
  if (!sol) return std::nullopt;
  IntVec out;
  for (const Rat& r : *sol) {
    if (!r.is_integer() || r.num < 0) return std::nullopt;
    out.push_back(r.num);
  }
  return out;
}

}  // namespace

bool dominance_leq(const BasedRootDatum& rd, const Coweight& mu,
                   const Coweight& lambda) {
  return dominance_leq_levi(rd, Levi::full(rd.num_simple()), mu, lambda);
}

bool dominance_leq_levi(const BasedRootDatum& rd, const Levi& levi,
                        const Coweight& mu, const Coweight& lambda) {
  if (mu.size() != lambda.size() ||
      static_cast<int>(mu.size()) != rd.cochar_rank())
    throw invalid_input("coweight rank mismatch");
  return dominance_coords(rd, levi, mu, lambda).has_value();
}

std::vector<Coweight> dominant_interval(const BasedRootDatum& rd,
                                        const Coweight& lambda, Int depth_cap) {
  return dominant_interval_levi(rd, Levi::full(rd.num_simple()), lambda,
                                depth_cap);
}

std::vector<Coweight> dominant_interval_levi(const BasedRootDatum& rd,
                                             const Levi& levi,
                                             const Coweight& lambda,
                                             Int depth_cap) {
  if (!is_dominant_levi(rd, levi, lambda))
    throw invalid_input("dominant_interval: coweight is not dominant");
  // Every dominant mu <= lambda satisfies lambda - mu <= lambda - w0(lambda)
  // coordinate-wise on the coroots, which bounds the search box.
  WeylElement w0 = longest_element_levi(rd, levi);
  auto box = dominance_coords(rd, levi, w0.apply(lambda), lambda);
  if (!box) throw error("lambda - w0(lambda) not in the coroot cone");
  Int cap = depth_cap >= 0 ? depth_cap
                           : std::accumulate(box->begin(), box->end(), Int(0));
  std::vector<Coweight> out;
  IntVec c(levi.size(), 0);
  // Depth-first product scan over 0 <= c <= box with sum <= cap.
  std::function<void(size_t, Coweight, Int)> rec = [&](size_t pos, Coweight mu,
                                                       Int used) {
    if (pos == levi.size()) {
      if (is_dominant_levi(rd, levi, mu)) out.push_back(mu);
      return;
    }
    Coweight cur = mu;
    for (Int k = 0; k <= (*box)[pos] && used + k <= cap; ++k) {
      if (k > 0) cur = sub(cur, rd.simple_coroot(levi.indices[pos]));
      rec(pos + 1, cur, used + k);
    }
  };
  rec(0, lambda, 0);
  std::sort(out.begin(), out.end());
  return out;
}

WeylElement weyl_identity(const BasedRootDatum& rd) {
  int n = rd.cochar_rank();
  WeylElement w;
  w.matrix.assign(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) w.matrix[i][i] = 1;
  return w;
}

WeylElement simple_reflection(const BasedRootDatum& rd, int i) {
  if (i < 0 || i >= rd.num_simple())
    throw invalid_input("simple reflection index out of range");
  int n = rd.cochar_rank();
  WeylElement w = weyl_identity(rd);
  const IntVec& alpha = rd.simple_root(i);
  const Coweight& coalpha = rd.simple_coroot(i);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) w.matrix[r][c] -= coalpha[r] * alpha[c];
  w.word = {i};
  return w;
}

WeylElement compose(const BasedRootDatum& rd, const WeylElement& a,
                    const WeylElement& b) {
  int n = rd.cochar_rank();
  WeylElement out;
  out.matrix.assign(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a.matrix[i][k] == 0) continue;
      for (int j = 0; j < n; ++j)
        out.matrix[i][j] += a.matrix[i][k] * b.matrix[k][j];
    }
  out.word = a.word;
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  return out;
}

namespace {

// Integer vector with <alpha_i, v> > 0 for exactly the Levi's simple roots
// (and 0 pairing is fine elsewhere; regularity within the Levi is all that
// the greedy descent needs).
Coweight levi_regular_vector(const BasedRootDatum& rd, const Levi& levi) {
  size_t l = levi.size();
  IntMat cl(l, IntVec(l));
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < l; ++j)
      cl[i][j] = rd.cartan(levi.indices[i], levi.indices[j]);
  IntVec ones(l, 1);
  auto sol = solve_columns_independent(cl, ones);
  if (!sol) throw error("Cartan system has no solution");
  Int lcm = 1;
  for (const Rat& r : *sol) lcm = lcm / std::gcd((long long)lcm, r.den) * r.den;
  Coweight v(rd.cochar_rank(), 0);
  for (size_t j = 0; j < l; ++j) {
    Int c = (*sol)[j].num * (lcm / (*sol)[j].den);
    v = add(v, scale(c, rd.simple_coroot(levi.indices[j])));
  }
  for (int i : levi.indices)
    if (dot(rd.simple_root(i), v) <= 0)
      throw error("failed to build a regular dominant vector");
  return v;
}

}  // namespace

WeylElement longest_element(const BasedRootDatum& rd) {
  return longest_element_levi(rd, Levi::full(rd.num_simple()));
}

WeylElement longest_element_levi(const BasedRootDatum& rd, const Levi& levi) {
  for (int i : levi.indices)
    if (i >= rd.num_simple()) throw invalid_input("Levi index out of range");
  WeylElement w = weyl_identity(rd);
  if (levi.size() == 0) return w;
  Coweight u = levi_regular_vector(rd, levi);
  std::vector<int> steps;
  while (true) {
    int next = -1;
    for (int i : levi.indices)
      if (dot(rd.simple_root(i), u) > 0) {
        next = i;
        break;
      }
    if (next < 0) break;
    WeylElement s = simple_reflection(rd, next);
    u = s.apply(u);
    w = compose(rd, s, w);
    steps.push_back(next);
    if (steps.size() > 2 * kRootClosureCap)
      throw error("longest element descent failed to terminate");
  }
  std::reverse(steps.begin(), steps.end());
  w.word = steps;
  return w;
}

Int weyl_group_order(const BasedRootDatum& rd) {
  std::set<IntMat> seen;
  std::vector<WeylElement> gens;
  for (int i = 0; i < rd.num_simple(); ++i)
    gens.push_back(simple_reflection(rd, i));
  std::vector<IntMat> queue;
  seen.insert(weyl_identity(rd).matrix);
  queue.push_back(weyl_identity(rd).matrix);
  while (!queue.empty()) {
    IntMat m = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      WeylElement a{g.matrix, {}};
      WeylElement b{m, {}};
      IntMat prod = compose(rd, a, b).matrix;
      if (seen.insert(prod).second) {
        if (static_cast<Int>(seen.size()) > kWeylOrderCap)
          throw error("Weyl group order exceeds the 1e5 cap");
        queue.push_back(prod);
      }
    }
  }
  return static_cast<Int>(seen.size());
}

Int two_rho(const BasedRootDatum& rd, const Coweight& nu) {
  Int s = 0;
  for (const auto& alpha : rd.positive_roots()) s += dot(alpha, nu);
  return s;
}

Int two_rho_levi(const BasedRootDatum& rd, const Levi& levi,
                 const Coweight& nu) {
  Int s = 0;
  for (const auto& alpha : rd.positive_roots_levi(levi)) s += dot(alpha, nu);
  return s;
}

IntVec ComponentGroup::component_of(const Coweight& nu) const {
  size_t n = U.size();
  if (nu.size() != n) throw invalid_input("coweight rank mismatch");
  IntVec z(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) z[i] += U[i][j] * nu[j];
  IntVec label;
  for (size_t i = 0; i < n; ++i) {
    Int d = i < diag.size() ? diag[i] : 0;
    if (d == 1) continue;  // trivial factor
    if (d > 1)
      label.push_back(((z[i] % d) + d) % d);
    else
      label.push_back(z[i]);  // free coordinate
  }
  return label;
}

ComponentGroup component_group(const BasedRootDatum& rd, const Levi& levi) {
  for (int i : levi.indices)
    if (i >= rd.num_simple()) throw invalid_input("Levi index out of range");
  IntMat A = coroot_columns(rd, levi);
  SmithResult s = smith_normal_form(A);
  ComponentGroup g;
  g.U = s.U;
  g.diag.assign(rd.cochar_rank(), 0);
  for (size_t i = 0; i < s.diagonal.size(); ++i) g.diag[i] = s.diagonal[i];
  g.free_rank = rd.cochar_rank() - s.rank;
  for (Int d : s.diagonal)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

Int parabolic_degree(const BasedRootDatum& rd, const Levi& levi,
                     const Coweight& nu) {
  return two_rho(rd, nu) - two_rho_levi(rd, levi, nu);
}

Int length(const BasedRootDatum& rd, const AffineWeylElement& x) {
  if (static_cast<int>(x.translation.size()) != rd.cochar_rank())
    throw invalid_input("translation rank mismatch");
  // Check the word and matrix agree before trusting either.
  WeylElement rebuilt = weyl_identity(rd);
  for (int i : x.finite.word)
    rebuilt = compose(rd, rebuilt, simple_reflection(rd, i));
  if (!(rebuilt.matrix == x.finite.matrix))
    throw invalid_input("Weyl word does not reproduce the matrix");
  Int len = 0;
  for (const auto& alpha : rd.positive_roots()) {
    IntVec pre = x.finite.coapply_inverse(alpha);  // w^{-1}(alpha)
    Int pair = dot(alpha, x.translation);
    if (rd.is_positive_root(pre)) {
      len += std::llabs(pair);
    } else {
      len += std::llabs(pair + 1);
    }
  }
  return len;
}

bool is_length_zero(const BasedRootDatum& rd, const AffineWeylElement& x) {
  return length(rd, x) == 0;
}

}  // namespace msat
