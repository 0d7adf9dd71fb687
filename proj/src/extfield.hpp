#pragma once

#include <vector>

#include "fp.hpp"

namespace anum {

// F_{p^e} in the power basis of a monic irreducible modulus polynomial.
// Coefficients are stored constant term first; modulus has size e+1 with a
// leading 1.
struct ExtFieldCtx {
  u64 p;
  unsigned e;
  std::vector<u64> modulus_poly;

  u64 order() const;  // p^e

  // The index-th monic irreducible of degree e over F_p, in the deterministic
  // scan order where the non-leading coefficients form a base-p counter
  // (constant term is the least significant digit). index 0 is the smallest.
  static ExtFieldCtx make(u64 p, unsigned e, unsigned index = 0);
};

// Coordinates in the power basis; length always equals e.
struct ExtElement {
  std::vector<u64> coeffs;
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

bool is_irreducible(u64 p, const std::vector<u64>& poly);

ExtElement ext_zero(const ExtFieldCtx& ctx);
ExtElement ext_one(const ExtFieldCtx& ctx);
// Element whose coordinate vector is the base-p digits of n; enumerating
// n in [0, p^e) walks the whole field.
ExtElement ext_from_index(const ExtFieldCtx& ctx, u64 n);
bool ext_is_zero(const ExtElement& a);

ExtElement ext_add(const ExtFieldCtx& ctx, const ExtElement& a, const ExtElement& b);
ExtElement ext_mul(const ExtFieldCtx& ctx, const ExtElement& a, const ExtElement& b);
// Square-and-multiply; 0^0 is rejected.
ExtElement ext_pow(const ExtFieldCtx& ctx, const ExtElement& a, u64 k);

}  // namespace anum
