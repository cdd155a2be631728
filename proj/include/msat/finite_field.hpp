#pragma once

// F_{p^k} with a deterministic modulus: elements are codes in [0, q) encoding
// polynomial coefficients base p (little-endian). The modulus is the monic
// irreducible of degree k whose non-leading coefficient code is smallest, so
// two runs (or two processes) always agree on the representation.

#include <cstdint>
#include <memory>
#include <vector>

namespace msat {

class FiniteField {
 public:
  using Elem = uint32_t;

  FiniteField(long long p, int k);

  long long p() const { return p_; }
  int k() const { return k_; }
  uint64_t q() const { return q_; }
  // Non-leading coefficients of the monic modulus, length k (constant first).
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws on zero
  Elem pow(Elem a, long long e) const;  // negative e inverts first
  Elem from_int(long long v) const;     // image of an integer in F_p
  std::vector<uint32_t> coeffs(Elem a) const;          // length k
  Elem from_coeffs(const std::vector<uint32_t>& c) const;

  bool same_field(const FiniteField& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

 private:
  Elem mul_slow(Elem a, Elem b) const;

  long long p_;
  int k_;
  uint64_t q_;
  std::vector<uint32_t> modulus_;
  // x^{k+j} mod modulus for j in [0, k-1), as coefficient vectors.
  std::vector<std::vector<uint32_t>> overflow_;
  // Dense multiplication table when q is small enough.
  std::vector<Elem> mul_table_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;
FieldPtr make_field(long long p, int k);

bool is_prime(long long n);
// Factor q = p^e with p prime; throws if q is not a prime power.
void factor_prime_power(long long q, long long* p, int* e);

}  // namespace msat
