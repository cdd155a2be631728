#pragma once

// Mod-p spherical Hecke algebras attached to a based root datum and a
// standard Levi. Elements are finitely supported maps from L-dominant
// coweights to Z/p, stored either in the double-coset basis ("std") or the
// intersection-cohomology basis ("ic"). The two are related by the
// unitriangular expansion [lambda] = sum of 1_mu over dominant mu <= lambda.
//
// In the ic basis the product is additive on supports, which makes the
// convolution, the transform to a Levi and the antidominant monoid-algebra
// model one-line maps; everything else is basis conversion.

#include <cstdint>
#include <map>
#include <vector>

#include "msat/finite_field.hpp"
#include "msat/root_datum.hpp"

namespace msat {

enum class Basis { Std, IC };

struct HeckeElement {
  DatumPtr datum;
  Levi levi;           // the algebra H_L; full set = the whole group
  Int p = 2;
  Basis basis = Basis::Std;
  std::map<Coweight, uint32_t> coeffs;  // nonzero values in [1, p)

  bool operator==(const HeckeElement& o) const;
};

// Group algebra of the L-antidominant coweights, written on the basis e^nu.
struct MonoidAlgebraElement {
  DatumPtr datum;
  Levi levi;
  Int p = 2;
  std::map<Coweight, uint32_t> coeffs;

  bool operator==(const MonoidAlgebraElement& o) const;
};

// Formal non-negative sum of ic classes indexed by dominant coweights.
struct SemisimpleObject {
  DatumPtr datum;
  std::map<Coweight, unsigned long long> multiplicities;
};

// Graded dimension vector over the antidominant coweights (genuine
// non-negative integers, not mod p).
struct GradedDimensions {
  DatumPtr datum;
  std::map<Coweight, unsigned long long> dims;

  bool operator==(const GradedDimensions& o) const { return dims == o.dims; }
};

HeckeElement make_hecke(DatumPtr datum, const Levi& levi, Int p, Basis basis,
                        const std::vector<std::pair<Coweight, Int>>& terms);
// Single basis vector at lambda.
HeckeElement hecke_term(DatumPtr datum, const Levi& levi, Int p, Basis basis,
                        const Coweight& lambda);

HeckeElement to_ic_basis(const HeckeElement& f);
HeckeElement to_std_basis(const HeckeElement& f);
HeckeElement in_basis(const HeckeElement& f, Basis basis);

HeckeElement convolve(const HeckeElement& f, const HeckeElement& g,
                      Basis out_basis = Basis::Std);

// Transform from H_M (M = f.levi) to H_L for a sub-Levi L of M:
// [lambda]_M -> [w_0^L w_0^M lambda]_L on the ic basis.
HeckeElement satake_transform(const HeckeElement& f, const Levi& target,
                              Basis out_basis = Basis::Std);

// [lambda]_M -> e^{w_0^M lambda}; inverse of from_monoid_algebra.
MonoidAlgebraElement to_monoid_algebra(const HeckeElement& f);
HeckeElement from_monoid_algebra(const MonoidAlgebraElement& x,
                                 Basis out_basis = Basis::Std);
MonoidAlgebraElement monoid_product(const MonoidAlgebraElement& x,
                                    const MonoidAlgebraElement& y);

SemisimpleObject make_semisimple(DatumPtr datum,
                                 const std::vector<std::pair<Coweight, unsigned long long>>& terms);
SemisimpleObject tensor_product(const SemisimpleObject& a,
                                const SemisimpleObject& b);
// Graded dimensions of the weight spaces: ic_lambda contributes its
// multiplicity in degree w_0(lambda).
GradedDimensions semisimple_fiber(const SemisimpleObject& a);
GradedDimensions graded_product(const GradedDimensions& a,
                                const GradedDimensions& b);

class SatakeParameter;  // satake_params.hpp
// Evaluate the character attached to a Satake parameter on an element of the
// full spherical algebra (f.levi must be the full set, matching fields).
FiniteField::Elem hecke_character(const SatakeParameter& chi,
                                  const HeckeElement& f);

}  // namespace msat
