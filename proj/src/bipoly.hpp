#pragma once

#include <compare>
#include <map>
#include <string>

#include "fp.hpp"

namespace anum {

struct Monomial {
  u64 ex;
  u64 ey;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse bivariate polynomial over F_p. No stored coefficient is zero, so
// equality of term maps is equality of polynomials.
class BiPoly {
 public:
  explicit BiPoly(u64 p) : p_(p) {}

  static BiPoly monomial(u64 p, u64 ex, u64 ey, u64 c = 1) {
    BiPoly r(p);
    r.add_term(ex, ey, c);
    return r;
  }

  u64 modulus() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, u64>& terms() const { return terms_; }

  u64 coeff(u64 ex, u64 ey) const {
    auto it = terms_.find(Monomial{ex, ey});
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(u64 ex, u64 ey, u64 c) {
    c %= p_;
    if (c == 0) return;
    Monomial m{ex, ey};
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = addmod(it->second, c, p_);
      if (it->second == 0) terms_.erase(it);
    }
  }

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly scaled(u64 c) const;
  BiPoly shifted(u64 dx, u64 dy) const;  // multiply by x^dx y^dy

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  // Canonical text form "c*x^a*y^b + ..." in descending graded-lex order
  // (total degree first, then x-degree).
  std::string to_string() const;

 private:
  u64 p_;
  std::map<Monomial, u64> terms_;
};

// Binomial coefficient mod p via Lucas.
u64 binom_mod_p(u64 n, u64 k, u64 p);

// Coefficient extraction form of (1/(p-1)!)^2 * d^(p-1)/dx d^(p-1)/dy:
// keeps coefficients at exponents (Ip+p-1, Jp+p-1), re-emits them at (Ip, Jp).
BiPoly nabla(const BiPoly& a);

// Divides all exponents by p; the inverse-Frobenius coefficient twist is the
// identity on F_p. Throws NonDivisibleExponent if any exponent is not a
// multiple of p.
BiPoly root_exponents(const BiPoly& a);

// Expansion of (y^n - x - x^m)^(p-1) * x^i * y^j via the double binomial sum:
//   sum_{h=0}^{p-1} sum_{k=0}^{h} C(p-1,h) C(h,k) (-1)^h
//       x^(m k + h - k + i) y^(n (p-1-h) + j).
BiPoly trinomial_power_shift(u64 p, u64 n, u64 m, u64 i, u64 j);

// Rewrites every y-exponent below n using y^n = x^m + x; canonical
// representative of the same function on the curve. Idempotent.
BiPoly curve_reduce(const BiPoly& a, u64 n, u64 m);

}  // namespace anum
