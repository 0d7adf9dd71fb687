#pragma once

#include <cstdint>
#include <numeric>

#include "errors.hpp"

namespace anum {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Deterministic trial division; the desk-scale range is p < 2^20 so this
// is never the bottleneck.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Products go through 128-bit width before reduction; moduli stay in one word.
inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

inline u64 addmod(u64 a, u64 b, u64 p) {
  u64 r = a + b;
  return r >= p ? r - p : r;
}

inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 powmod(u64 a, u64 k, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (k) {
    if (k & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    k >>= 1;
  }
  return r;
}

// Extended Euclid.
inline u64 inv_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw DivisionByZero();
  i64 old_r = static_cast<i64>(p), r = static_cast<i64>(a);
  i64 old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_t < 0) old_t += static_cast<i64>(p);
  return static_cast<u64>(old_t);
}

class PrimeModulus {
 public:
  explicit PrimeModulus(u64 p) : p_(p) {
    if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  }
  u64 value() const { return p_; }
  friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }

 private:
  u64 p_;
};

// Always fully reduced; arithmetic is closed over a single modulus.
struct FpElement {
  u64 value;
  u64 p;

  FpElement(u64 v, PrimeModulus mod) : value(v % mod.value()), p(mod.value()) {}
  FpElement(u64 v, u64 prime) : value(v % prime), p(prime) {}

  FpElement operator+(FpElement o) const { return raw(addmod(value, check(o), p), p); }
  FpElement operator-(FpElement o) const { return raw(submod(value, check(o), p), p); }
  FpElement operator*(FpElement o) const { return raw(mulmod(value, check(o), p), p); }
  FpElement inv() const { return raw(inv_mod(value, p), p); }
  FpElement pow(u64 k) const { return raw(powmod(value, k, p), p); }
  bool is_zero() const { return value == 0; }
  friend bool operator==(FpElement a, FpElement b) { return a.value == b.value && a.p == b.p; }

 private:
  static FpElement raw(u64 v, u64 p) { return FpElement(v, p); }
  u64 check(FpElement o) const {
    if (o.p != p) throw ModulusMismatch();
    return o.value;
  }
};

}  // namespace anum
