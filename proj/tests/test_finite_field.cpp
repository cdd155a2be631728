#include <doctest.h>

#include <set>
#include <vector>

#include "msat/error.hpp"
#include "msat/finite_field.hpp"

using namespace msat;

TEST_CASE("prime detection and prime power factoring") {
  CHECK(is_prime(2));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  long long p = 0;
  int e = 0;
  factor_prime_power(8, &p, &e);
  CHECK(p == 2);
  CHECK(e == 3);
  factor_prime_power(49, &p, &e);
  CHECK(p == 7);
  CHECK(e == 2);
  CHECK_THROWS_AS(factor_prime_power(12, &p, &e), invalid_input);
  CHECK_THROWS_AS(factor_prime_power(1, &p, &e), invalid_input);
}

TEST_CASE("canonical moduli are the lexicographically smallest irreducibles") {
  // Codes list the non-leading coefficients, constant term first.
  CHECK(FiniteField(2, 2).modulus() == std::vector<uint32_t>{1, 1});  // x^2+x+1
  CHECK(FiniteField(2, 3).modulus() == std::vector<uint32_t>{1, 1, 0});  // x^3+x+1
  CHECK(FiniteField(3, 2).modulus() == std::vector<uint32_t>{1, 0});  // x^2+1
  CHECK(FiniteField(5, 1).modulus() == std::vector<uint32_t>{0});
}

TEST_CASE("field axioms hold on every element for small q") {
  for (auto [p, k] : std::vector<std::pair<long long, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 1}, {2, 3}}) {
    FiniteField f(p, k);
    uint64_t q = f.q();
    for (uint64_t a = 0; a < q; ++a) {
      CHECK(f.add(static_cast<FiniteField::Elem>(a), f.zero()) == a);
      CHECK(f.mul(static_cast<FiniteField::Elem>(a), f.one()) == a);
      CHECK(f.add(static_cast<FiniteField::Elem>(a),
                  f.neg(static_cast<FiniteField::Elem>(a))) == f.zero());
      if (a != 0) {
        FiniteField::Elem ia = f.inv(static_cast<FiniteField::Elem>(a));
        CHECK(f.mul(static_cast<FiniteField::Elem>(a), ia) == f.one());
      }
      for (uint64_t b = 0; b < q; ++b) {
        FiniteField::Elem ea = static_cast<FiniteField::Elem>(a);
        FiniteField::Elem eb = static_cast<FiniteField::Elem>(b);
        CHECK(f.add(ea, eb) == f.add(eb, ea));
        CHECK(f.mul(ea, eb) == f.mul(eb, ea));
        CHECK(f.sub(f.add(ea, eb), eb) == ea);
        for (uint64_t c = 0; c < q && q <= 9; ++c) {
          FiniteField::Elem ec = static_cast<FiniteField::Elem>(c);
          CHECK(f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec)));
          CHECK(f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)));
        }
      }
    }
    CHECK_THROWS_AS(f.inv(f.zero()), invalid_input);
  }
}

TEST_CASE("multiplicative group has order q-1") {
  FiniteField f(2, 3);
  for (uint32_t a = 1; a < f.q(); ++a)
    CHECK(f.pow(a, static_cast<long long>(f.q()) - 1) == f.one());
  // Some element generates the full group in F_8.
  bool found = false;
  for (uint32_t a = 2; a < f.q() && !found; ++a) {
    std::set<FiniteField::Elem> seen;
    FiniteField::Elem x = f.one();
    for (int i = 0; i < 7; ++i) {
      x = f.mul(x, a);
      seen.insert(x);
    }
    found = seen.size() == 7;
  }
  CHECK(found);
}

TEST_CASE("pow handles negative exponents and zero") {
  FiniteField f(3, 2);
  FiniteField::Elem a = 5;  // some nonzero element
  CHECK(f.mul(f.pow(a, 3), f.pow(a, -3)) == f.one());
  CHECK(f.pow(a, 0) == f.one());
  CHECK(f.pow(f.zero(), 5) == f.zero());
}

TEST_CASE("coefficient round trips") {
  FiniteField f(3, 2);
  for (uint32_t a = 0; a < f.q(); ++a) {
    auto c = f.coeffs(a);
    CHECK(c.size() == 2);
    CHECK(f.from_coeffs(c) == a);
  }
  CHECK(f.from_int(4) == f.one());   // 4 mod 3
  CHECK(f.from_int(-1) == f.neg(f.one()));
  CHECK_THROWS_AS(f.from_coeffs({3, 0}), invalid_input);  // coefficient >= p
}

TEST_CASE("same_field compares the full presentation") {
  FiniteField a(2, 2), b(2, 2), c(2, 3);
  CHECK(a.same_field(b));
  CHECK_FALSE(a.same_field(c));
  CHECK(make_field(3, 1)->p() == 3);
  CHECK_THROWS_AS(make_field(4, 1), invalid_input);  // p must be prime
}
