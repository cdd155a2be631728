#pragma once

// The antidominant coweight monoid, its generators and binomial relations,
// and its characters valued in a finite field of characteristic p (Satake
// parameters). A parameter is recorded by its stratum -- the set of simple
// roots alpha with chi(lambda_alpha) = 0 -- together with a character of the
// lattice of coweights orthogonal to the stratum, stored as nonzero field
// values on a canonical basis of that lattice.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msat/finite_field.hpp"
#include "msat/root_datum.hpp"

namespace msat {

struct AntidominantMonoid {
  DatumPtr datum;
  bool dominant_side = false;  // true: the negated (dominant) monoid
  // Canonical Hermite basis of the lattice orthogonal to all simple roots.
  std::vector<Coweight> lineality_basis;
  // Canonical lifts of the Hilbert basis of the pointed quotient cone.
  std::vector<Coweight> pointed_generators;
  // pointed_generators plus +/- each lineality basis vector, sorted lex.
  std::vector<Coweight> generators;
};

AntidominantMonoid antidominant_monoid(DatumPtr datum);
AntidominantMonoid dominant_monoid(DatumPtr datum);

// Canonical basis of { nu : <alpha_i, nu> = 0 for all i in levi }.
std::vector<Coweight> perp_basis(const BasedRootDatum& rd, const Levi& levi);

// For each simple root alpha: the canonical antidominant coweight orthogonal
// to the other simple roots with <alpha, lambda_alpha> < 0 of least depth.
std::vector<Coweight> lambda_alpha_list(const BasedRootDatum& rd);

// Exponent vectors over monoid.generators with equal weighted sums and
// disjoint supports; relations implied componentwise by a smaller relation
// are dropped. Sides are normalised so left > right lexicographically.
struct BinomialRelation {
  IntVec left, right;
  bool operator==(const BinomialRelation& o) const {
    return left == o.left && right == o.right;
  }
};
std::vector<BinomialRelation> monoid_relations(const AntidominantMonoid& monoid,
                                               Int degree_bound);

// "3*g1 = g2 + g3" with g-indices into monoid.generators.
std::string relation_to_string(const BinomialRelation& rel);

// Some exponent vector e over monoid.generators with sum e_i g_i = target,
// or nullopt when target is not in the monoid.
std::optional<IntVec> factor_over_generators(const AntidominantMonoid& monoid,
                                             const Coweight& target);

// Stratification of the parameter space by standard Levis.
struct Stratum {
  Levi levi;
  int rank = 0;  // cochar_rank - |levi|

  bool operator==(const Stratum& o) const { return levi == o.levi; }
};
std::vector<Stratum> strata(const BasedRootDatum& rd);
// True when the stratum of `inner` lies in the closure of the stratum of
// `outer`, i.e. outer.levi is a subset of inner.levi.
bool stratum_in_closure(const Stratum& inner, const Stratum& outer);

class SatakeParameter {
 public:
  SatakeParameter(DatumPtr datum, FieldPtr field, Levi stratum,
                  std::vector<FiniteField::Elem> values_on_basis);

  const DatumPtr& datum() const { return datum_; }
  const FieldPtr& field() const { return field_; }
  const Levi& stratum() const { return stratum_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<Coweight>& basis() const { return basis_; }
  const std::vector<FiniteField::Elem>& values_on_basis() const { return values_; }

  bool operator==(const SatakeParameter& o) const;

 private:
  DatumPtr datum_;
  FieldPtr field_;
  Levi stratum_;
  std::vector<Coweight> basis_;  // perp_basis(datum, stratum)
  std::vector<FiniteField::Elem> values_;  // nonzero, one per basis vector
};

// Value of the character on an antidominant coweight: zero off the stratum
// lattice, multiplicative on it.
FiniteField::Elem evaluate(const SatakeParameter& chi, const Coweight& nu);

// Value on the monoid generators, in generator order.
std::vector<std::pair<Coweight, FiniteField::Elem>> generator_values(
    const SatakeParameter& chi);

// Recover a parameter from its values on the monoid generators. Checks the
// assignment is multiplicatively consistent (relations up to relation_bound)
// and that the zero set is exactly a stratum.
SatakeParameter classify(DatumPtr datum, FieldPtr field,
                         const std::vector<std::pair<Coweight, FiniteField::Elem>>& values,
                         Int relation_bound = 6);

SatakeParameter multiply(const SatakeParameter& a, const SatakeParameter& b);
SatakeParameter unit_parameter(DatumPtr datum, FieldPtr field);
bool is_unit(const SatakeParameter& chi);         // stratum = empty set
bool is_supersingular(const SatakeParameter& chi);  // stratum = all simple roots
SatakeParameter inverse(const SatakeParameter& chi);  // units only

// Anti-dominant coweights in [0,bound]^n grouped by their coset modulo the
// lineality lattice; members and representatives are lex-minimal first.
struct CosetClass {
  Coweight representative;
  IntVec label;  // image in the quotient by the lineality lattice
  std::vector<Coweight> members;
};
std::vector<CosetClass> coset_decomposition(const BasedRootDatum& rd, Int bound);

}  // namespace msat
