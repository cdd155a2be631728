#include "msat/hecke.hpp"

#include <algorithm>
#include <string>

#include "msat/error.hpp"
#include "msat/log.hpp"
#include "msat/satake_params.hpp"

namespace msat {

namespace {

void check_prime(Int p) {
  if (!is_prime(p)) throw invalid_input("p must be prime, got " + std::to_string(p));
}

void check_compatible(const HeckeElement& a, const HeckeElement& b) {
  if (!a.datum || !b.datum) throw invalid_input("hecke element without root datum");
  if (!a.datum->structurally_equal(*b.datum))
    throw invalid_input("hecke elements live over different root data");
  if (!(a.levi == b.levi)) throw invalid_input("hecke elements live in different Levi algebras");
  if (a.p != b.p) throw invalid_input("hecke elements have different coefficient characteristics");
}

uint32_t reduce_mod(Int c, Int p) {
  Int r = c % p;
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

void add_term(std::map<Coweight, uint32_t>& coeffs, const Coweight& key, Int c, Int p) {
  Int cur = 0;
  auto it = coeffs.find(key);
  if (it != coeffs.end()) cur = it->second;
  uint32_t r = reduce_mod(cur + c, p);
  if (r == 0) {
    if (it != coeffs.end()) coeffs.erase(it);
  } else if (it != coeffs.end()) {
    it->second = r;
  } else {
    coeffs.emplace(key, r);
  }
}

// Support ordered so that every ic-to-std dependency points backwards:
// strictly larger <2rho_L, .> first, lex as a deterministic tiebreak.
std::vector<Coweight> height_sorted_support(const BasedRootDatum& rd, const Levi& levi,
                                            const std::map<Coweight, uint32_t>& coeffs) {
  IntVec rho2(rd.cochar_rank(), 0);
  for (const IntVec& alpha : rd.positive_roots_levi(levi)) rho2 = add(rho2, alpha);
  std::vector<Coweight> keys;
  keys.reserve(coeffs.size());
  for (const auto& [k, v] : coeffs) keys.push_back(k);
  std::stable_sort(keys.begin(), keys.end(), [&](const Coweight& a, const Coweight& b) {
    Int ha = dot(rho2, a), hb = dot(rho2, b);
    if (ha != hb) return ha > hb;
    return a < b;
  });
  return keys;
}

}  // namespace

bool HeckeElement::operator==(const HeckeElement& o) const {
  return datum->structurally_equal(*o.datum) && levi == o.levi && p == o.p &&
         basis == o.basis && coeffs == o.coeffs;
}

bool MonoidAlgebraElement::operator==(const MonoidAlgebraElement& o) const {
  return datum->structurally_equal(*o.datum) && levi == o.levi && p == o.p && coeffs == o.coeffs;
}

HeckeElement make_hecke(DatumPtr datum, const Levi& levi, Int p, Basis basis,
                        const std::vector<std::pair<Coweight, Int>>& terms) {
  if (!datum) throw invalid_input("null root datum");
  check_prime(p);
  check_levi(*datum, levi);
  HeckeElement f{datum, levi, p, basis, {}};
  for (const auto& [lambda, c] : terms) {
    if (static_cast<int>(lambda.size()) != datum->cochar_rank())
      throw invalid_input("coweight has wrong length");
    if (!is_dominant_levi(*datum, levi, lambda))
      throw invalid_input("hecke support must be L-dominant");
    add_term(f.coeffs, lambda, c, p);
  }
  return f;
}

HeckeElement hecke_term(DatumPtr datum, const Levi& levi, Int p, Basis basis,
                        const Coweight& lambda) {
  return make_hecke(std::move(datum), levi, p, basis, {{lambda, 1}});
}

HeckeElement to_std_basis(const HeckeElement& f) {
  if (f.basis == Basis::Std) return f;
  HeckeElement out{f.datum, f.levi, f.p, Basis::Std, {}};
  for (const auto& [lambda, c] : f.coeffs)
    for (const Coweight& mu : dominant_interval_levi(*f.datum, f.levi, lambda))
      add_term(out.coeffs, mu, c, f.p);
  return out;
}

HeckeElement to_ic_basis(const HeckeElement& f) {
  if (f.basis == Basis::IC) return f;
  // Gather a downward-closed cover of the support, then invert the
  // unitriangular expansion from the top.
  std::map<Coweight, uint32_t> targets;
  for (const auto& [lambda, c] : f.coeffs) {
    targets.emplace(lambda, 0);
    for (const Coweight& mu : dominant_interval_levi(*f.datum, f.levi, lambda))
      targets.emplace(mu, 0);
  }
  for (const auto& [lambda, c] : f.coeffs) targets[lambda] = c;

  std::vector<Coweight> order = height_sorted_support(*f.datum, f.levi, targets);
  HeckeElement out{f.datum, f.levi, f.p, Basis::IC, {}};
  std::vector<std::pair<Coweight, uint32_t>> solved;
  for (const Coweight& nu : order) {
    Int acc = targets[nu];
    for (const auto& [mu, b] : solved)
      if (dominance_leq_levi(*f.datum, f.levi, nu, mu)) acc -= b;
    uint32_t r = reduce_mod(acc, f.p);
    solved.emplace_back(nu, r);
    if (r != 0) out.coeffs.emplace(nu, r);
  }
  return out;
}

HeckeElement in_basis(const HeckeElement& f, Basis basis) {
  return basis == Basis::Std ? to_std_basis(f) : to_ic_basis(f);
}

HeckeElement convolve(const HeckeElement& f, const HeckeElement& g, Basis out_basis) {
  check_compatible(f, g);
  HeckeElement a = to_ic_basis(f);
  HeckeElement b = to_ic_basis(g);
  HeckeElement out{f.datum, f.levi, f.p, Basis::IC, {}};
  for (const auto& [la, ca] : a.coeffs)
    for (const auto& [lb, cb] : b.coeffs)
      add_term(out.coeffs, add(la, lb), static_cast<Int>(ca) * static_cast<Int>(cb), f.p);
  return in_basis(out, out_basis);
}

HeckeElement satake_transform(const HeckeElement& f, const Levi& target, Basis out_basis) {
  if (!f.datum) throw invalid_input("null root datum");
  check_levi(*f.datum, target);
  for (int i : target.indices)
    if (!f.levi.contains(i))
      throw invalid_input("satake transform target must be a sub-Levi of the source");
  WeylElement w0m = longest_element_levi(*f.datum, f.levi);
  WeylElement w0l = longest_element_levi(*f.datum, target);
  HeckeElement a = to_ic_basis(f);
  HeckeElement out{f.datum, target, f.p, Basis::IC, {}};
  for (const auto& [lambda, c] : a.coeffs) {
    Coweight key = w0l.apply(w0m.apply(lambda));
    if (!is_dominant_levi(*f.datum, target, key))
      throw error("satake transform produced a non-dominant key");
    add_term(out.coeffs, key, c, f.p);
  }
  MSAT_LOG_DEBUG("satake_transform: %zu ic terms -> %zu over target Levi",
                 a.coeffs.size(), out.coeffs.size());
  return in_basis(out, out_basis);
}

MonoidAlgebraElement to_monoid_algebra(const HeckeElement& f) {
  HeckeElement a = to_ic_basis(f);
  WeylElement w0m = longest_element_levi(*f.datum, f.levi);
  MonoidAlgebraElement out{f.datum, f.levi, f.p, {}};
  for (const auto& [lambda, c] : a.coeffs) out.coeffs.emplace(w0m.apply(lambda), c);
  return out;
}

HeckeElement from_monoid_algebra(const MonoidAlgebraElement& x, Basis out_basis) {
  if (!x.datum) throw invalid_input("null root datum");
  WeylElement w0m = longest_element_levi(*x.datum, x.levi);
  HeckeElement out{x.datum, x.levi, x.p, Basis::IC, {}};
  for (const auto& [nu, c] : x.coeffs) {
    if (!is_antidominant_levi(*x.datum, x.levi, nu))
      throw invalid_input("monoid algebra support must be L-antidominant");
    out.coeffs.emplace(w0m.apply(nu), c);
  }
  return in_basis(out, out_basis);
}

MonoidAlgebraElement monoid_product(const MonoidAlgebraElement& x, const MonoidAlgebraElement& y) {
  if (!x.datum->structurally_equal(*y.datum) || !(x.levi == y.levi) || x.p != y.p)
    throw invalid_input("monoid algebra elements are incompatible");
  MonoidAlgebraElement out{x.datum, x.levi, x.p, {}};
  for (const auto& [na, ca] : x.coeffs)
    for (const auto& [nb, cb] : y.coeffs)
      add_term(out.coeffs, add(na, nb), static_cast<Int>(ca) * static_cast<Int>(cb), x.p);
  return out;
}

SemisimpleObject make_semisimple(DatumPtr datum,
                                 const std::vector<std::pair<Coweight, unsigned long long>>& terms) {
  if (!datum) throw invalid_input("null root datum");
  SemisimpleObject out{datum, {}};
  Levi full = Levi::full(datum->num_simple());
  for (const auto& [lambda, m] : terms) {
    if (!is_dominant_levi(*datum, full, lambda))
      throw invalid_input("semisimple object support must be dominant");
    if (m != 0) out.multiplicities[lambda] += m;
  }
  return out;
}

SemisimpleObject tensor_product(const SemisimpleObject& a, const SemisimpleObject& b) {
  if (!a.datum->structurally_equal(*b.datum))
    throw invalid_input("tensor factors live over different root data");
  SemisimpleObject out{a.datum, {}};
  for (const auto& [la, ma] : a.multiplicities)
    for (const auto& [lb, mb] : b.multiplicities)
      out.multiplicities[add(la, lb)] += ma * mb;
  return out;
}

GradedDimensions semisimple_fiber(const SemisimpleObject& a) {
  WeylElement w0 = longest_element(*a.datum);
  GradedDimensions out{a.datum, {}};
  for (const auto& [lambda, m] : a.multiplicities) out.dims[w0.apply(lambda)] += m;
  return out;
}

GradedDimensions graded_product(const GradedDimensions& a, const GradedDimensions& b) {
  if (!a.datum->structurally_equal(*b.datum))
    throw invalid_input("graded dimension vectors live over different root data");
  GradedDimensions out{a.datum, {}};
  for (const auto& [na, da] : a.dims)
    for (const auto& [nb, db] : b.dims)
      out.dims[add(na, nb)] += da * db;
  return out;
}

FiniteField::Elem hecke_character(const SatakeParameter& chi, const HeckeElement& f) {
  if (!chi.datum()->structurally_equal(*f.datum))
    throw invalid_input("parameter and hecke element live over different root data");
  if (!(f.levi == Levi::full(f.datum->num_simple())))
    throw invalid_input("hecke_character expects an element of the full spherical algebra");
  if (chi.field()->p() != f.p)
    throw invalid_input("parameter field characteristic does not match coefficient field");
  const FiniteField& F = *chi.field();
  MonoidAlgebraElement x = to_monoid_algebra(f);
  FiniteField::Elem acc = F.zero();
  for (const auto& [nu, c] : x.coeffs)
    acc = F.add(acc, F.mul(F.from_int(c), evaluate(chi, nu)));
  return acc;
}

}  // namespace msat
