#pragma once

// Based root data with a chosen integral coordinate system on the cocharacter
// lattice. The pairing between characters and cocharacters is the dot product
// of coordinate vectors.
//
// Coordinate conventions for the built-in families:
//   GL_n   : X_* = Z^n, alpha_i = alpha_i^vee = e_i - e_{i+1}.
//   SL_n   : X_* in the simple-coroot basis (coroot vectors are unit vectors,
//            root vectors are the rows of the A_{n-1} Cartan matrix).
//   PGL_n  : X_* in the fundamental-coweight basis (root vectors are unit
//            vectors, coroot vectors are the columns of the Cartan matrix).
//   Sp_2m  : X_* = Z^m, alpha_i = e_i - e_{i+1} (i < m), alpha_m = 2 e_m,
//            coroots e_i - e_{i+1} and e_m.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "msat/linalg.hpp"

namespace msat {

using Coweight = IntVec;  // coordinates in the cocharacter lattice

enum class Family { GL, SL, PGL, Sp };

// Subset of the simple roots, stored as sorted 0-based indices.
struct Levi {
  std::vector<int> indices;

  Levi() = default;
  explicit Levi(std::vector<int> idx);
  static Levi torus() { return Levi{}; }
  static Levi full(int num_simple);

  bool contains(int i) const;
  size_t size() const { return indices.size(); }
  bool operator==(const Levi& o) const { return indices == o.indices; }
  bool operator!=(const Levi& o) const { return !(*this == o); }
  bool operator<(const Levi& o) const { return indices < o.indices; }
};

class BasedRootDatum;

// Weyl group element: integer matrix action on cocharacter coordinates plus a
// word in the simple reflections that produces it.
struct WeylElement {
  IntMat matrix;           // acts by matrix * coweight
  std::vector<int> word;   // simple reflection indices

  Coweight apply(const Coweight& mu) const;
  // Action on character coordinates of w^{-1} (transpose of `matrix`).
  IntVec coapply_inverse(const IntVec& character) const;
  bool is_identity() const;
  bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
};

// Element t^translation * finite of the extended affine Weyl group.
struct AffineWeylElement {
  Coweight translation;
  WeylElement finite;
};

class BasedRootDatum {
 public:
  BasedRootDatum(std::string name, int cochar_rank, IntMat simple_roots,
                 IntMat simple_coroots);

  const std::string& name() const { return name_; }
  int cochar_rank() const { return rank_; }
  int num_simple() const { return static_cast<int>(simple_roots_.size()); }
  const IntVec& simple_root(int i) const { return simple_roots_.at(i); }
  const Coweight& simple_coroot(int i) const { return simple_coroots_.at(i); }
  const IntMat& simple_roots() const { return simple_roots_; }
  const IntMat& simple_coroots() const { return simple_coroots_; }
  Int cartan(int i, int j) const;  // <alpha_i, alpha_j^vee>

  // All positive roots (character coordinates), simple roots first;
  // deterministic order.
  const std::vector<IntVec>& positive_roots() const { return positive_roots_; }
  std::vector<IntVec> positive_roots_levi(const Levi& levi) const;
  bool is_positive_root(const IntVec& character) const;

  Int pairing(const IntVec& character, const Coweight& mu) const;

  bool structurally_equal(const BasedRootDatum& o) const;

 private:
  void validate() const;
  void compute_positive_roots();

  std::string name_;
  int rank_;
  IntMat simple_roots_;
  IntMat simple_coroots_;
  std::vector<IntVec> positive_roots_;
};

using DatumPtr = std::shared_ptr<const BasedRootDatum>;

// rank_param is the matrix size for GL/SL/PGL (GL_n needs n >= 1, SL/PGL need
// n >= 2) and the Lie rank m for Sp_{2m} (m >= 2).
DatumPtr build_standard(Family family, int rank_param);
// Accepts "GL3", "SL2", "PGL4", "Sp4" (Sp uses the matrix size 2m, even).
DatumPtr build_standard(const std::string& name);

bool is_dominant(const BasedRootDatum& rd, const Coweight& mu);
bool is_dominant_levi(const BasedRootDatum& rd, const Levi& levi,
                      const Coweight& mu);
bool is_antidominant(const BasedRootDatum& rd, const Coweight& mu);
bool is_antidominant_levi(const BasedRootDatum& rd, const Levi& levi,
                          const Coweight& mu);

// Throws invalid_input unless every index is a valid simple-root index.
void check_levi(const BasedRootDatum& rd, const Levi& levi);

// mu <= lambda iff lambda - mu is a non-negative integer combination of the
// simple coroots (of the Levi for the _levi variant).
bool dominance_leq(const BasedRootDatum& rd, const Coweight& mu,
                   const Coweight& lambda);
bool dominance_leq_levi(const BasedRootDatum& rd, const Levi& levi,
                        const Coweight& mu, const Coweight& lambda);

// All dominant mu <= lambda, sorted lexicographically. lambda must be
// dominant. depth_cap < 0 derives the cap from lambda - w0(lambda).
std::vector<Coweight> dominant_interval(const BasedRootDatum& rd,
                                        const Coweight& lambda,
                                        Int depth_cap = -1);
std::vector<Coweight> dominant_interval_levi(const BasedRootDatum& rd,
                                             const Levi& levi,
                                             const Coweight& lambda,
                                             Int depth_cap = -1);

WeylElement weyl_identity(const BasedRootDatum& rd);
WeylElement simple_reflection(const BasedRootDatum& rd, int i);
WeylElement compose(const BasedRootDatum& rd, const WeylElement& a,
                    const WeylElement& b);
WeylElement longest_element(const BasedRootDatum& rd);
WeylElement longest_element_levi(const BasedRootDatum& rd, const Levi& levi);

// Orbit size of the full Weyl group; throws if it exceeds 10^5.
Int weyl_group_order(const BasedRootDatum& rd);

// Sum over positive roots (of the Levi) of <alpha, nu>.
Int two_rho(const BasedRootDatum& rd, const Coweight& nu);
Int two_rho_levi(const BasedRootDatum& rd, const Levi& levi,
                 const Coweight& nu);

// X_*(T) / Z-span(levi coroots): free rank, invariant factors, and a
// canonical labelling of components.
struct ComponentGroup {
  Int free_rank = 0;
  IntVec torsion;  // invariant factors > 1, in divisibility order

  // Canonical label of the component of nu: torsion residues followed by the
  // free coordinates. Equal labels <=> same component.
  IntVec component_of(const Coweight& nu) const;

  // internals (Smith transform of the coroot matrix)
  IntMat U;
  IntVec diag;  // full diagonal incl. 1s and 0s, length = cochar rank
};
ComponentGroup component_group(const BasedRootDatum& rd, const Levi& levi);

// <2(rho - rho_L), nu>; constant on components of X_*/Z-span(levi coroots).
Int parabolic_degree(const BasedRootDatum& rd, const Levi& levi,
                     const Coweight& nu);

// Iwahori-Weyl length of t^nu * w.
Int length(const BasedRootDatum& rd, const AffineWeylElement& x);
bool is_length_zero(const BasedRootDatum& rd, const AffineWeylElement& x);

}  // namespace msat
