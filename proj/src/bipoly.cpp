#include "bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace anum {

namespace {
void require_same_modulus(const BiPoly& a, const BiPoly& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch();
}
}  // namespace

BiPoly BiPoly::operator+(const BiPoly& o) const {
  require_same_modulus(*this, o);
  BiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m.ex, m.ey, c);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  require_same_modulus(*this, o);
  BiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m.ex, m.ey, p_ - c);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  require_same_modulus(*this, o);
  BiPoly r(p_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      r.add_term(ma.ex + mb.ex, ma.ey + mb.ey, mulmod(ca, cb, p_));
  return r;
}

BiPoly BiPoly::scaled(u64 c) const {
  BiPoly r(p_);
  c %= p_;
  for (const auto& [m, v] : terms_) r.add_term(m.ex, m.ey, mulmod(v, c, p_));
  return r;
}

BiPoly BiPoly::shifted(u64 dx, u64 dy) const {
  BiPoly r(p_);
  for (const auto& [m, v] : terms_) r.add_term(m.ex + dx, m.ey + dy, v);
  return r;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, u64>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    u64 da = a.first.ex + a.first.ey, db = b.first.ex + b.first.ey;
    if (da != db) return da > db;
    return a.first.ex > b.first.ex;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (m.ex > 0) os << "*x^" << m.ex;
    if (m.ey > 0) os << "*y^" << m.ey;
  }
  return os.str();
}

u64 binom_mod_p(u64 n, u64 k, u64 p) {
  if (k > n) return 0;
  u64 result = 1;
  while (n > 0 || k > 0) {
    u64 nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // C(nd, kd) for digits < p, in word arithmetic
    u64 c = 1;
    for (u64 t = 0; t < kd; ++t) {
      c = mulmod(c, nd - t, p);
      c = mulmod(c, inv_mod(t + 1, p), p);
    }
    result = mulmod(result, c, p);
    n /= p;
    k /= p;
  }
  return result;
}

BiPoly nabla(const BiPoly& a) {
  u64 p = a.modulus();
  BiPoly r(p);
  for (const auto& [m, c] : a.terms()) {
    if (m.ex % p == p - 1 && m.ey % p == p - 1)
      r.add_term(m.ex - (p - 1), m.ey - (p - 1), c);
  }
  return r;
}

BiPoly root_exponents(const BiPoly& a) {
  u64 p = a.modulus();
  BiPoly r(p);
  for (const auto& [m, c] : a.terms()) {
    if (m.ex % p != 0 || m.ey % p != 0)
      throw NonDivisibleExponent("exponent (" + std::to_string(m.ex) + "," +
                                 std::to_string(m.ey) + ") not divisible by p=" +
                                 std::to_string(p));
    r.add_term(m.ex / p, m.ey / p, c);
  }
  return r;
}

BiPoly trinomial_power_shift(u64 p, u64 n, u64 m, u64 i, u64 j) {
  BiPoly r(p);
  for (u64 h = 0; h <= p - 1; ++h) {
    u64 ch = binom_mod_p(p - 1, h, p);
    u64 sign = (h % 2 == 0) ? 1 : p - 1;
    u64 outer = mulmod(ch, sign, p);
    for (u64 k = 0; k <= h; ++k) {
      u64 c = mulmod(outer, binom_mod_p(h, k, p), p);
      r.add_term(m * k + h - k + i, n * (p - 1 - h) + j, c);
    }
  }
  return r;
}

BiPoly curve_reduce(const BiPoly& a, u64 n, u64 m) {
  u64 p = a.modulus();
  BiPoly r(p);
  for (const auto& [mono, c] : a.terms()) {
    if (mono.ey < n) {
      r.add_term(mono.ex, mono.ey, c);
      continue;
    }
    u64 k = mono.ey / n;
    u64 rem = mono.ey % n;
    // y^(kn) = (x^m + x)^k = sum_t C(k,t) x^(m t + k - t)
    for (u64 t = 0; t <= k; ++t) {
      u64 b = binom_mod_p(k, t, p);
      if (b == 0) continue;
      r.add_term(mono.ex + m * t + (k - t), rem, mulmod(c, b, p));
    }
  }
  return r;
}

}  // namespace anum
