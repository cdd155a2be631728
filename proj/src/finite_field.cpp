#include "msat/finite_field.hpp"

#include <algorithm>

#include "msat/error.hpp"

namespace msat {

namespace {

using Poly = std::vector<long long>;  // dense, little-endian, entries in [0,p)

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, long long p);

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_pow_mod(Poly base, long long e, const Poly& f, long long p) {
  Poly result{1};
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_mod(Poly a, const Poly& f, long long p) {
  size_t deg_f = f.size() - 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (i < deg_f) break;
    long long c = a[i];
    if (!c) continue;
    for (size_t j = 0; j < f.size(); ++j) {
      size_t idx = i - deg_f + j;
      a[idx] = ((a[idx] - c * f[j]) % p + p) % p;
    }
  }
  if (a.size() > deg_f) a.resize(deg_f ? deg_f : 1);
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, long long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic first
    long long lead = b.back();
    if (lead != 1) {
      long long inv = 1, base = lead, e = p - 2;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (auto& c : b) c = c * inv % p;
    }
    Poly r = poly_mod(a, b, p);
    a = b;
    b = r;
    trim(b);
  }
  return a;
}

bool poly_irreducible(const Poly& f, long long p) {
  int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  // x^{p^k} == x mod f, and gcd(x^{p^{k/r}} - x, f) = 1 for prime r | k.
  Poly x{0, 1};
  Poly t = x;
  for (int i = 0; i < k; ++i) t = poly_pow_mod(t, p, f, p);
  Poly diff = t;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  trim(diff);
  if (!diff.empty()) return false;
  for (int r = 2; r <= k; ++r) {
    if (k % r != 0) continue;
    bool r_prime = true;
    for (int d = 2; d * d <= r; ++d)
      if (r % d == 0) r_prime = false;
    if (!r_prime) continue;
    Poly u = x;
    for (int i = 0; i < k / r; ++i) u = poly_pow_mod(u, p, f, p);
    Poly d2 = u;
    d2.resize(std::max<size_t>(d2.size(), 2), 0);
    d2[1] = ((d2[1] - 1) % p + p) % p;
    trim(d2);
    Poly g = poly_gcd(f, d2, p);
    if (!(g.size() == 1)) return false;
  }
  return true;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void factor_prime_power(long long q, long long* p, int* e) {
  if (q < 2) throw invalid_input("q must be at least 2");
  long long base = q;
  for (long long d = 2; d * d <= base; ++d)
    if (base % d == 0) {
      base = d;
      break;
    }
  if (!is_prime(base)) throw invalid_input("q is not a prime power");
  long long v = q;
  int exp = 0;
  while (v % base == 0) {
    v /= base;
    ++exp;
  }
  if (v != 1) throw invalid_input("q is not a prime power");
  *p = base;
  *e = exp;
}

FiniteField::FiniteField(long long p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw invalid_input("field characteristic must be prime");
  if (k < 1 || k > 16) throw invalid_input("field degree out of range");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= static_cast<uint64_t>(p);
    if (q_ > (1ull << 30)) throw invalid_input("field too large");
  }
  // Smallest monic irreducible of degree k, ordered by the code of its
  // non-leading coefficient vector.
  modulus_.assign(k, 0);
  if (k > 1) {
    bool found = false;
    for (uint64_t code = 0; code < q_; ++code) {
      Poly f(k + 1, 0);
      uint64_t c = code;
      for (int i = 0; i < k; ++i) {
        f[i] = static_cast<long long>(c % p);
        c /= p;
      }
      f[k] = 1;
      if (poly_irreducible(f, p)) {
        for (int i = 0; i < k; ++i) modulus_[i] = static_cast<uint32_t>(f[i]);
        found = true;
        break;
      }
    }
    if (!found) throw error("no irreducible modulus found");
  }
  // x^{k+j} mod modulus, iteratively: x^k = -modulus_low, x^{k+j+1} = x * x^{k+j}.
  overflow_.clear();
  std::vector<uint32_t> cur(k, 0);
  for (int i = 0; i < k; ++i)
    cur[i] = static_cast<uint32_t>((p - modulus_[i]) % p);
  overflow_.push_back(cur);
  for (int j = 1; j < k; ++j) {
    std::vector<uint32_t> nxt(k, 0);
    uint32_t carry = cur[k - 1];
    for (int i = k - 1; i > 0; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    if (carry)
      for (int i = 0; i < k; ++i)
        nxt[i] = static_cast<uint32_t>((nxt[i] + 1ull * carry * overflow_[0][i]) % p);
    overflow_.push_back(nxt);
    cur = nxt;
  }
  if (q_ <= 256) {
    mul_table_.resize(q_ * q_);
    for (uint64_t a = 0; a < q_; ++a)
      for (uint64_t b = 0; b <= a; ++b) {
        Elem v = mul_slow(static_cast<Elem>(a), static_cast<Elem>(b));
        mul_table_[a * q_ + b] = v;
        mul_table_[b * q_ + a] = v;
      }
  }
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (k_ == 1) {
    uint64_t s = static_cast<uint64_t>(a) + b;
    return static_cast<Elem>(s >= q_ ? s - q_ : s);
  }
  Elem out = 0;
  uint64_t mult = 1;
  for (int i = 0; i < k_; ++i) {
    uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    uint32_t s = da + db;
    if (s >= p_) s -= p_;
    out += static_cast<Elem>(s * mult);
    mult *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (k_ == 1) return a == 0 ? 0 : static_cast<Elem>(q_ - a);
  Elem out = 0;
  uint64_t mult = 1;
  for (int i = 0; i < k_; ++i) {
    uint32_t d = a % p_;
    a /= p_;
    out += static_cast<Elem>(((p_ - d) % p_) * mult);
    mult *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const {
  return add(a, neg(b));
}

FiniteField::Elem FiniteField::mul_slow(Elem a, Elem b) const {
  std::vector<uint64_t> prod(2 * k_ - 1, 0);
  std::vector<uint32_t> da(k_), db(k_);
  for (int i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (int i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (int j = 0; j < k_; ++j) prod[i + j] += 1ull * da[i] * db[j];
  }
  std::vector<uint32_t> red(k_, 0);
  for (int i = 0; i < k_; ++i) red[i] = static_cast<uint32_t>(prod[i] % p_);
  for (int j = 0; j < k_ - 1; ++j) {
    uint64_t c = prod[k_ + j] % p_;
    if (!c) continue;
    for (int i = 0; i < k_; ++i)
      red[i] = static_cast<uint32_t>((red[i] + c * overflow_[j][i]) % p_);
  }
  Elem out = 0;
  uint64_t mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += static_cast<Elem>(red[i] * mult);
    mult *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<uint64_t>(a) * q_ + b];
  return mul_slow(a, b);
}

FiniteField::Elem FiniteField::pow(Elem a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw invalid_input("inverse of zero in finite field");
  return pow(a, static_cast<long long>(q_) - 2);
}

FiniteField::Elem FiniteField::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<uint32_t> FiniteField::coeffs(Elem a) const {
  std::vector<uint32_t> c(k_);
  for (int i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

FiniteField::Elem FiniteField::from_coeffs(const std::vector<uint32_t>& c) const {
  if (static_cast<int>(c.size()) > k_)
    throw invalid_input("too many field element coefficients");
  Elem out = 0;
  uint64_t mult = 1;
  for (int i = 0; i < k_; ++i) {
    uint32_t d = i < static_cast<int>(c.size()) ? c[i] : 0;
    if (d >= p_) throw invalid_input("field coefficient out of range");
    out += static_cast<Elem>(d * mult);
    mult *= p_;
  }
  return out;
}

FieldPtr make_field(long long p, int k) {
  return std::make_shared<FiniteField>(p, k);
}

}  // namespace msat
