#include "extfield.hpp"

#include <algorithm>

namespace anum {

namespace {

using Poly = std::vector<u64>;  // univariate over F_p, constant term first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, u64 p) {
  // f monic
  while (a.size() >= f.size()) {
    u64 c = a.back();
    std::size_t shift = a.size() - f.size();
    if (c != 0) {
      for (std::size_t i = 0; i < f.size(); ++i)
        a[shift + i] = submod(a[shift + i], mulmod(c, f[i], p), p);
    }
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  trim(r);
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, u64 k, const Poly& f, u64 p) {
  Poly r = {1};
  base = poly_mod(std::move(base), f, p);
  while (k) {
    if (k & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    k >>= 1;
  }
  return r;
}

// x^(p^k) mod f by k rounds of p-th powering.
Poly frob_power(unsigned k, const Poly& f, u64 p) {
  Poly x = poly_mod({0, 1}, f, p);
  for (unsigned i = 0; i < k; ++i) x = poly_powmod(std::move(x), p, f, p);
  return x;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // reduce a mod b (make b monic first)
    u64 lead_inv = inv_mod(b.back(), p);
    Poly bm = b;
    for (auto& c : bm) c = mulmod(c, lead_inv, p);
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
  trim(a);
  return a;
}

}  // namespace

bool is_irreducible(u64 p, const Poly& poly) {
  unsigned e = static_cast<unsigned>(poly.size()) - 1;
  if (e == 0) return false;
  if (poly.back() != 1) return false;
  if (e == 1) return true;
  // x^(p^e) == x mod f, and gcd(x^(p^(e/d)) - x, f) = 1 for every prime d | e.
  Poly x = {0, 1};
  if (poly_sub(frob_power(e, poly, p), x, p) != Poly{}) return false;
  std::vector<unsigned> prime_divs;
  unsigned rem = e;
  for (unsigned d = 2; d * d <= rem; ++d) {
    if (rem % d == 0) {
      prime_divs.push_back(d);
      while (rem % d == 0) rem /= d;
    }
  }
  if (rem > 1) prime_divs.push_back(rem);
  for (unsigned d : prime_divs) {
    Poly diff = poly_sub(frob_power(e / d, poly, p), x, p);
    Poly g = poly_gcd(poly, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

u64 ExtFieldCtx::order() const {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

ExtFieldCtx ExtFieldCtx::make(u64 p, unsigned e, unsigned index) {
  PrimeModulus check(p);
  (void)check;
  u64 count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  unsigned found = 0;
  for (u64 n = 0; n < count; ++n) {
    Poly f(e + 1, 0);
    u64 t = n;
    for (unsigned i = 0; i < e; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[e] = 1;
    if (is_irreducible(p, f)) {
      if (found == index) return ExtFieldCtx{p, e, std::move(f)};
      ++found;
    }
  }
  throw Error(ErrorKind::internal, "irreducible scan exhausted");
}

ExtElement ext_zero(const ExtFieldCtx& ctx) { return ExtElement{Poly(ctx.e, 0)}; }

ExtElement ext_one(const ExtFieldCtx& ctx) {
  Poly c(ctx.e, 0);
  c[0] = 1 % ctx.p;
  return ExtElement{std::move(c)};
}

ExtElement ext_from_index(const ExtFieldCtx& ctx, u64 n) {
  Poly c(ctx.e, 0);
  for (unsigned i = 0; i < ctx.e; ++i) {
    c[i] = n % ctx.p;
    n /= ctx.p;
  }
  return ExtElement{std::move(c)};
}

bool ext_is_zero(const ExtElement& a) {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](u64 c) { return c == 0; });
}

ExtElement ext_add(const ExtFieldCtx& ctx, const ExtElement& a, const ExtElement& b) {
  Poly c(ctx.e);
  for (unsigned i = 0; i < ctx.e; ++i) c[i] = addmod(a.coeffs[i], b.coeffs[i], ctx.p);
  return ExtElement{std::move(c)};
}

ExtElement ext_mul(const ExtFieldCtx& ctx, const ExtElement& a, const ExtElement& b) {
  Poly r = poly_mulmod(a.coeffs, b.coeffs, ctx.modulus_poly, ctx.p);
  r.resize(ctx.e, 0);
  return ExtElement{std::move(r)};
}

ExtElement ext_pow(const ExtFieldCtx& ctx, const ExtElement& a, u64 k) {
  if (k == 0 && ext_is_zero(a)) throw UndefinedPower();
  ExtElement r = ext_one(ctx);
  ExtElement base = a;
  while (k) {
    if (k & 1) r = ext_mul(ctx, r, base);
    base = ext_mul(ctx, base, base);
    k >>= 1;
  }
  return r;
}

}  // namespace anum
